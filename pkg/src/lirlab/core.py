"""Multigraphs with doubled-edge bundles and red/blue edge colorings.

A *bundle* is an unordered vertex pair {u, v} carrying a multiplicity of 1
(a plain edge) or 2 (a doubled edge, i.e. two parallel copies).  All degrees
in this package are counted with multiplicity.  An edge coloring assigns one
of two colors to every bundle; the two parallel copies of a doubled bundle
always share their color, which matches the "no multiedges colored with two
colors" regime that the whole package works in.

A coloring is *locally irregular* (a 2-liec) when each color class, viewed
as a sub-multigraph, has no edge whose endpoints have equal degree in that
class.  ``verify_liec`` is the single verifier that every constructive
colorer and every solver certificate in this package must pass.

All values here are immutable after construction and all operations are
pure, so they are safe to share between threads.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "Color",
    "RED",
    "BLUE",
    "Multigraph",
    "EdgeColoring",
    "ColorDegrees",
    "Violation",
    "VerificationReport",
    "DoublingPlan",
    "color_degrees",
    "is_locally_irregular",
    "verify_liec",
    "apply_doubling",
]


class Color(enum.IntEnum):
    RED = 0
    BLUE = 1

    @property
    def letter(self) -> str:
        return "R" if self is Color.RED else "B"

    @classmethod
    def from_letter(cls, s: str) -> "Color":
        if s == "R":
            return cls.RED
        if s == "B":
            return cls.BLUE
        raise ValueError(f"unknown color letter {s!r}")

    @property
    def other(self) -> "Color":
        return Color.BLUE if self is Color.RED else Color.RED


RED = Color.RED
BLUE = Color.BLUE


def _as_readonly(a: np.ndarray) -> np.ndarray:
    a = np.ascontiguousarray(a)
    a.flags.writeable = False
    return a


@dataclass(frozen=True)
class Multigraph:
    """A loopless multigraph with bundle multiplicities 1 or 2.

    Bundles are stored in canonical order: each pair as (min, max), sorted
    lexicographically.  Bundle indices used by colorings and doubling plans
    always refer to this canonical order, which is stable under doubling.
    """

    n: int
    u: np.ndarray = field(repr=False)
    v: np.ndarray = field(repr=False)
    mult: np.ndarray = field(repr=False)

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int] | tuple[int, int, int]]) -> "Multigraph":
        """Build a multigraph from (u, v) or (u, v, mult) tuples."""
        rows = []
        for e in edges:
            if len(e) == 2:
                a, b = e  # type: ignore[misc]
                m = 1
            else:
                a, b, m = e  # type: ignore[misc]
            rows.append((min(a, b), max(a, b), m))
        rows.sort()
        if rows:
            arr = np.asarray(rows, dtype=np.int64)
            u, v, mult = arr[:, 0], arr[:, 1], arr[:, 2]
        else:
            u = v = mult = np.empty(0, dtype=np.int64)
        g = Multigraph(n=int(n), u=_as_readonly(u), v=_as_readonly(v), mult=_as_readonly(mult))
        g._validate()
        return g

    def _validate(self) -> None:
        n, u, v, mult = self.n, self.u, self.v, self.mult
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        if not (len(u) == len(v) == len(mult)):
            raise ValueError("ragged bundle arrays")
        if len(u) == 0:
            return
        if u.min() < 0 or v.max() >= n:
            raise ValueError("bundle endpoint out of range")
        if np.any(u == v):
            raise ValueError("loops are not allowed")
        if np.any((mult != 1) & (mult != 2)):
            raise ValueError("bundle multiplicity must be 1 or 2")
        if np.any(u > v):
            raise ValueError("bundles must be stored as (min, max)")
        keys = u * n + v
        if np.any(np.diff(keys) <= 0):
            raise ValueError("duplicate or unsorted bundle pairs")

    # -- basic accessors -------------------------------------------------

    @property
    def num_bundles(self) -> int:
        return len(self.u)

    @property
    def num_edges(self) -> int:
        """Edge count with multiplicity."""
        return int(self.mult.sum())

    @property
    def bundles(self) -> list[tuple[int, int, int]]:
        return list(zip(self.u.tolist(), self.v.tolist(), self.mult.tolist()))

    def bundle_index(self, a: int, b: int) -> int:
        """Index of the bundle {a, b}; raises KeyError if absent."""
        a, b = min(a, b), max(a, b)
        lo = int(np.searchsorted(self.u * self.n + self.v, a * self.n + b))
        if lo < self.num_bundles and self.u[lo] == a and self.v[lo] == b:
            return lo
        raise KeyError(f"no bundle {{{a}, {b}}}")

    def has_edge(self, a: int, b: int) -> bool:
        try:
            self.bundle_index(a, b)
            return True
        except KeyError:
            return False

    def degrees(self) -> np.ndarray:
        """Vertex degrees counted with multiplicity."""
        deg = np.bincount(self.u, weights=self.mult, minlength=self.n)
        deg += np.bincount(self.v, weights=self.mult, minlength=self.n)
        return deg.astype(np.int64)

    @property
    def is_simple(self) -> bool:
        return bool(np.all(self.mult == 1)) if self.num_bundles else True

    def incident_bundles(self, vertex: int) -> list[int]:
        return np.flatnonzero((self.u == vertex) | (self.v == vertex)).tolist()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Multigraph):
            return NotImplemented
        return (
            self.n == other.n
            and np.array_equal(self.u, other.u)
            and np.array_equal(self.v, other.v)
            and np.array_equal(self.mult, other.mult)
        )

    def __hash__(self) -> int:
        return hash((self.n, self.u.tobytes(), self.v.tobytes(), self.mult.tobytes()))


@dataclass(frozen=True)
class EdgeColoring:
    """A total red/blue assignment over a multigraph's bundles.

    ``colors[i]`` is the color of bundle ``i`` in canonical order; both
    copies of a doubled bundle carry this one color.
    """

    colors: np.ndarray = field(repr=False)

    @staticmethod
    def from_colors(colors: Sequence[Color | int | str]) -> "EdgeColoring":
        vals = [Color.from_letter(c) if isinstance(c, str) else Color(c) for c in colors]
        return EdgeColoring(colors=_as_readonly(np.asarray(vals, dtype=np.uint8)))

    @staticmethod
    def monochromatic(g: Multigraph, color: Color = RED) -> "EdgeColoring":
        return EdgeColoring(colors=_as_readonly(np.full(g.num_bundles, int(color), dtype=np.uint8)))

    def __len__(self) -> int:
        return len(self.colors)

    def __getitem__(self, i: int) -> Color:
        return Color(int(self.colors[i]))

    @property
    def letters(self) -> list[str]:
        return ["RB"[c] for c in self.colors.tolist()]

    def swapped(self) -> "EdgeColoring":
        """The coloring with red and blue exchanged everywhere."""
        return EdgeColoring(colors=_as_readonly(1 - self.colors))

    def covers(self, g: Multigraph) -> bool:
        return len(self.colors) == g.num_bundles

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EdgeColoring):
            return NotImplemented
        return np.array_equal(self.colors, other.colors)

    def __hash__(self) -> int:
        return hash(self.colors.tobytes())


@dataclass(frozen=True)
class ColorDegrees:
    """Per-vertex red and blue degrees, counted with multiplicity."""

    red: np.ndarray = field(repr=False)
    blue: np.ndarray = field(repr=False)

    def pair(self, vertex: int) -> tuple[int, int]:
        """(red, blue) at a vertex."""
        return int(self.red[vertex]), int(self.blue[vertex])

    def blue_red_pairs(self) -> list[tuple[int, int]]:
        """(blue, red) pairs in vertex order, the label convention of the
        stored figure fixtures."""
        return list(zip(self.blue.tolist(), self.red.tolist()))


@dataclass(frozen=True)
class Violation:
    bundle: int
    color: Color
    deg_u: int
    deg_v: int


@dataclass(frozen=True)
class VerificationReport:
    ok: bool
    violations: tuple[Violation, ...]

    def __bool__(self) -> bool:
        return self.ok


def _check_coloring(g: Multigraph, c: EdgeColoring) -> None:
    if not c.covers(g):
        raise ValueError(
            f"coloring covers {len(c)} bundles but the graph has {g.num_bundles}"
        )


def color_degrees(g: Multigraph, c: EdgeColoring) -> ColorDegrees:
    """Red/blue degree of every vertex under coloring ``c``."""
    _check_coloring(g, c)
    out = []
    for col in (RED, BLUE):
        mask = c.colors == int(col)
        deg = np.bincount(g.u[mask], weights=g.mult[mask], minlength=g.n)
        deg += np.bincount(g.v[mask], weights=g.mult[mask], minlength=g.n)
        out.append(deg.astype(np.int64))
    return ColorDegrees(red=_as_readonly(out[0]), blue=_as_readonly(out[1]))


def is_locally_irregular(g: Multigraph) -> bool:
    """True iff every bundle's endpoints have different degrees (with
    multiplicity)."""
    if g.num_bundles == 0:
        return True
    deg = g.degrees()
    return bool(np.all(deg[g.u] != deg[g.v]))


def verify_liec(g: Multigraph, c: EdgeColoring) -> VerificationReport:
    """Check that each color class of ``c`` induces a locally irregular
    sub-multigraph of ``g``; violations list every offending bundle."""
    _check_coloring(g, c)
    degs = color_degrees(g, c)
    per_color = {RED: degs.red, BLUE: degs.blue}
    bad: list[Violation] = []
    for col, deg in per_color.items():
        mask = c.colors == int(col)
        conflict = mask & (deg[g.u] == deg[g.v])
        for i in np.flatnonzero(conflict).tolist():
            bad.append(Violation(i, col, int(deg[g.u[i]]), int(deg[g.v[i]])))
    bad.sort(key=lambda w: w.bundle)
    return VerificationReport(ok=not bad, violations=tuple(bad))


def apply_doubling(g: Multigraph, doubled: Iterable[int]) -> Multigraph:
    """Replace each listed bundle of a simple graph with two parallel edges.

    Bundle order (hence every bundle index) is unchanged.
    """
    if not g.is_simple:
        raise ValueError("doubling applies to simple graphs only")
    ids = sorted(set(int(i) for i in doubled))
    if ids and (ids[0] < 0 or ids[-1] >= g.num_bundles):
        raise KeyError("doubled bundle id out of range")
    mult = g.mult.copy()
    mult[ids] = 2
    return Multigraph(n=g.n, u=g.u, v=g.v, mult=_as_readonly(mult))


@dataclass(frozen=True)
class DoublingPlan:
    """A set of doubled bundles of a simple base graph plus a verified-shape
    coloring of the doubled multigraph.

    The plan is the certificate format for minimum-doubling results: apply
    the doubling, then check the coloring with ``verify_liec``.
    """

    base: Multigraph
    doubled: frozenset[int]
    coloring: EdgeColoring

    def __post_init__(self) -> None:
        if not self.base.is_simple:
            raise ValueError("plan base must be a simple graph")
        if self.doubled and (min(self.doubled) < 0 or max(self.doubled) >= self.base.num_bundles):
            raise KeyError("doubled bundle id outside the base graph")
        if not self.coloring.covers(self.base):
            raise ValueError("plan coloring does not cover the base bundle set")

    @property
    def num_doublings(self) -> int:
        return len(self.doubled)

    def doubled_multigraph(self) -> Multigraph:
        return apply_doubling(self.base, self.doubled)

    def verify(self) -> VerificationReport:
        return verify_liec(self.doubled_multigraph(), self.coloring)

    def degree_pairs(self) -> list[tuple[int, int]]:
        """(blue, red) degree pairs of the colored, doubled multigraph."""
        return color_degrees(self.doubled_multigraph(), self.coloring).blue_red_pairs()

    def doubled_pairs(self) -> list[tuple[int, int]]:
        return [(int(self.base.u[i]), int(self.base.v[i])) for i in sorted(self.doubled)]
