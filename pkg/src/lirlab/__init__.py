"""Locally irregular 2-edge-colorings with minimum edge doublings."""

from .core import (
    BLUE,
    RED,
    Color,
    ColorDegrees,
    DoublingPlan,
    EdgeColoring,
    Multigraph,
    VerificationReport,
    Violation,
    apply_doubling,
    color_degrees,
    is_locally_irregular,
    verify_liec,
)
from .serialize import Decoded, decode, encode, encode_plan, export_dot

__all__ = [
    "BLUE",
    "RED",
    "Color",
    "ColorDegrees",
    "DoublingPlan",
    "EdgeColoring",
    "Multigraph",
    "VerificationReport",
    "Violation",
    "apply_doubling",
    "color_degrees",
    "is_locally_irregular",
    "verify_liec",
    "Decoded",
    "decode",
    "encode",
    "encode_plan",
    "export_dot",
]
