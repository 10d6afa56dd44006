"""Canonical JSON serialization and DOT export.

The JSON document format::

    {"n": 5,
     "edges": [[0, 1, 1], [1, 2, 2], ...],      # canonical (min,max) order
     "coloring": ["R", "B", ...],               # optional, aligned to edges
     "doubled": [1, ...]}                       # optional, indices with mult 2

``edges`` always carries the true multiplicities; when ``doubled`` is
present it must agree with the multiplicity-2 bundles, and together with
``coloring`` it reconstructs a :class:`~lirlab.core.DoublingPlan`.
Encoding is canonical (stable bundle order, no whitespace variation), so
``decode(encode(x)) == x``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .core import Color, DoublingPlan, EdgeColoring, Multigraph

__all__ = ["Decoded", "encode", "encode_plan", "decode", "export_dot"]


@dataclass(frozen=True)
class Decoded:
    graph: Multigraph
    coloring: EdgeColoring | None = None
    doubled: frozenset[int] | None = None

    @property
    def plan(self) -> DoublingPlan | None:
        """The doubling plan carried by the document, when complete."""
        if self.coloring is None or self.doubled is None:
            return None
        base = Multigraph(
            n=self.graph.n,
            u=self.graph.u,
            v=self.graph.v,
            mult=np.ones_like(self.graph.mult),
        )
        return DoublingPlan(base=base, doubled=self.doubled, coloring=self.coloring)


def encode(
    g: Multigraph,
    coloring: EdgeColoring | None = None,
    doubled: frozenset[int] | set[int] | None = None,
) -> str:
    doc: dict = {"n": g.n, "edges": [[int(a), int(b), int(m)] for a, b, m in g.bundles]}
    if coloring is not None:
        if not coloring.covers(g):
            raise ValueError("coloring does not cover the bundle set")
        doc["coloring"] = coloring.letters
    if doubled is not None:
        doc["doubled"] = sorted(int(i) for i in doubled)
    return json.dumps(doc, separators=(", ", ": "))


def encode_plan(plan: DoublingPlan) -> str:
    return encode(plan.doubled_multigraph(), plan.coloring, plan.doubled)


def decode(text: str) -> Decoded:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed JSON: {exc}") from exc
    if not isinstance(doc, dict) or "n" not in doc or "edges" not in doc:
        raise ValueError("document requires 'n' and 'edges' fields")
    g = Multigraph.from_edges(int(doc["n"]), [tuple(e) for e in doc["edges"]])
    if g.num_bundles != len(doc["edges"]):
        raise ValueError("duplicate bundles in 'edges'")
    coloring = None
    if "coloring" in doc:
        if len(doc["coloring"]) != g.num_bundles:
            raise ValueError("coloring length does not match bundle count")
        coloring = EdgeColoring.from_colors(doc["coloring"])
    doubled = None
    if "doubled" in doc:
        doubled = frozenset(int(i) for i in doc["doubled"])
        actual = frozenset(np.flatnonzero(g.mult == 2).tolist())
        if doubled != actual:
            raise ValueError("'doubled' disagrees with multiplicity-2 bundles")
    return Decoded(graph=g, coloring=coloring, doubled=doubled)


_DOT_COLOR = {Color.RED: "red", Color.BLUE: "blue"}


def export_dot(g: Multigraph, coloring: EdgeColoring | None = None, name: str = "G") -> str:
    """Render as Graphviz DOT; a doubled bundle becomes two parallel edge
    lines, colors become edge attributes."""
    if coloring is not None and not coloring.covers(g):
        raise ValueError("coloring does not cover the bundle set")
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        lines.append(f"  {v};")
    for i, (a, b, m) in enumerate(g.bundles):
        attr = f" [color={_DOT_COLOR[coloring[i]]}]" if coloring is not None else ""
        for _ in range(m):
            lines.append(f"  {a} -- {b}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"
