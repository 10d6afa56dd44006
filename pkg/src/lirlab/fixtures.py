"""Hand-transcribed coloring fixtures with degree-label checksums.

Each fixture ships with the (blue, red) degree pair printed next to every
vertex in its source drawing.  Loading recomputes the pairs with
``color_degrees`` and verifies the coloring, so a transcription slip fails
loudly instead of silently poisoning downstream constructions.

The 11-vertex cycle-power fixture deserves a note: its degree labels pin
the blue subgraph uniquely (the labels force every blue edge), and the
edge list stored here is that forced subgraph, cross-checked against the
labels and the verifier.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .core import (
    BLUE,
    RED,
    Color,
    DoublingPlan,
    EdgeColoring,
    Multigraph,
    color_degrees,
    verify_liec,
)
from .families import bowtie, complete_graph, power_of_cycle, split_graph

__all__ = [
    "FixtureError",
    "cycle_power_11_3_plan",
    "complete_base_plan",
    "complete_eleven_plan",
    "split8_plan",
    "bowtie_four_coloring",
    "COMPLETE_BASE_SIZES",
]


class FixtureError(AssertionError):
    pass


Pair = tuple[int, int]


def _plan_from_colors(
    base: Multigraph,
    red: list[Pair],
    blue: list[Pair],
    doubled: list[Pair],
    labels: list[Pair],
    name: str,
) -> DoublingPlan:
    colors: list[Color | None] = [None] * base.num_bundles
    for pair_list, col in ((red, RED), (blue, BLUE)):
        for a, b in pair_list:
            i = base.bundle_index(a, b)
            if colors[i] is not None:
                raise FixtureError(f"{name}: bundle {{{a},{b}}} colored twice")
            colors[i] = col
    if any(c is None for c in colors):
        missing = [base.bundles[i][:2] for i, c in enumerate(colors) if c is None]
        raise FixtureError(f"{name}: uncolored bundles {missing}")
    plan = DoublingPlan(
        base=base,
        doubled=frozenset(base.bundle_index(a, b) for a, b in doubled),
        coloring=EdgeColoring.from_colors([c for c in colors if c is not None]),
    )
    got = color_degrees(plan.doubled_multigraph(), plan.coloring).blue_red_pairs()
    if got != labels:
        raise FixtureError(f"{name}: degree labels {got} != expected {labels}")
    report = plan.verify()
    if not report.ok:
        raise FixtureError(f"{name}: fixture is not a valid coloring: {report.violations}")
    return plan


# -- 11-vertex third power of a cycle ---------------------------------------

_CP11_BLUE = [
    (0, 2), (0, 3), (0, 8), (0, 9), (0, 10),
    (2, 3), (3, 5), (3, 6), (4, 6), (5, 6),
    (5, 8), (6, 8), (6, 9), (8, 9),
]
_CP11_LABELS = [
    (5, 1), (0, 6), (2, 4), (4, 2), (1, 5), (3, 3),
    (5, 1), (0, 6), (4, 2), (3, 3), (1, 5),
]


@lru_cache(maxsize=None)
def cycle_power_11_3_plan() -> DoublingPlan:
    g = power_of_cycle(11, 3)
    blue = {tuple(sorted(e)) for e in _CP11_BLUE}
    red = [(a, b) for a, b, _ in g.bundles if (a, b) not in blue]
    return _plan_from_colors(g, red, sorted(blue), [], _CP11_LABELS, "cycle-power-11-3")


# -- complete graphs ---------------------------------------------------------

#: orders with a hand-drawn base coloring (larger even/odd orders extend
#: the 9- and 11-vertex bases inductively)
COMPLETE_BASE_SIZES = (4, 6, 8, 9)

_COMPLETE_FIXTURES: dict[int, dict] = {
    4: dict(
        red=[(0, 1), (0, 2), (0, 3), (1, 3)],
        blue=[(2, 3), (1, 2)],
        doubled=[(0, 1)],
        labels=[(0, 4), (1, 3), (2, 1), (1, 2)],
    ),
    6: dict(
        red=[(0, 1), (0, 2), (0, 3), (1, 3),
             (2, 5), (0, 5), (1, 5), (3, 5), (4, 5)],
        blue=[(2, 3), (1, 2), (2, 4), (3, 4), (1, 4), (0, 4)],
        doubled=[(0, 1), (0, 2)],
        labels=[(1, 6), (2, 4), (3, 3), (2, 3), (4, 1), (0, 5)],
    ),
    8: dict(
        red=[(0, 1), (0, 2), (0, 3), (1, 3),
             (2, 5), (0, 5), (1, 5), (3, 5), (4, 5),
             (6, 7), (5, 7), (4, 7), (2, 7), (3, 7), (0, 7), (1, 7)],
        blue=[(2, 3), (1, 2), (2, 4), (3, 4), (1, 4), (0, 4),
              (4, 6), (2, 6), (3, 6), (1, 6), (0, 6), (5, 6)],
        doubled=[(1, 5), (1, 7)],
        labels=[(2, 5), (3, 6), (4, 3), (3, 4), (5, 2), (1, 7), (6, 1), (0, 8)],
    ),
    9: dict(
        blue=[(0, 1), (0, 2), (0, 3), (1, 3),
              (2, 5), (1, 5), (3, 5), (4, 5),
              (6, 7), (5, 7), (4, 7), (2, 7), (3, 7), (0, 7), (1, 7), (1, 8)],
        red=[(2, 3), (1, 2), (2, 4), (3, 4), (1, 4), (0, 4), (0, 5),
             (4, 6), (2, 6), (3, 6), (1, 6), (0, 6), (5, 6),
             (7, 8), (6, 8), (5, 8), (4, 8), (3, 8), (2, 8), (0, 8)],
        doubled=[(0, 1), (7, 8)],
        labels=[(5, 4), (6, 3), (3, 5), (4, 4), (2, 6), (5, 3), (1, 7), (7, 2), (1, 8)],
    ),
}


@lru_cache(maxsize=None)
def complete_base_plan(n: int) -> DoublingPlan:
    if n not in _COMPLETE_FIXTURES:
        raise KeyError(f"no stored base coloring for order {n}")
    fx = _COMPLETE_FIXTURES[n]
    return _plan_from_colors(
        complete_graph(n), fx["red"], fx["blue"], fx["doubled"], fx["labels"],
        f"complete-{n}",
    )


_K11_BLUE_CROSS = [
    (1, 7), (2, 7), (3, 7), (4, 7),
    (2, 8), (5, 8), (6, 8),
    (5, 9), (6, 9),
    (6, 10),
]
_K11_LABELS = [
    (5, 5), (5, 6), (6, 5), (6, 4), (7, 3), (8, 2), (9, 1),
    (4, 6), (3, 7), (2, 8), (1, 9),
]


@lru_cache(maxsize=None)
def complete_eleven_plan() -> DoublingPlan:
    """Eleven vertices: a red 3-edge path inside a blue 7-clique, one
    doubled red edge, the remaining vertices mostly red."""
    g = complete_graph(11)
    red_path = [(0, 1), (1, 2), (2, 3)]
    blue = []
    red = list(red_path)
    for a in range(7):
        for b in range(a + 1, 7):
            if (a, b) not in red_path:
                blue.append((a, b))
    cross_blue = set(_K11_BLUE_CROSS)
    for a in range(7):
        for b in range(7, 11):
            (blue if (a, b) in cross_blue else red).append((a, b))
    for a in range(7, 11):
        for b in range(a + 1, 11):
            red.append((a, b))
    return _plan_from_colors(g, red, blue, [(1, 2)], _K11_LABELS, "complete-11")


# -- split graphs with an 8-clique -------------------------------------------

_SPLIT8_SHARED = dict(
    red=[(0, 1), (0, 3), (0, 2), (2, 3),
         (0, 5), (1, 5), (3, 5), (4, 5), (2, 5),
         (4, 7), (2, 7), (1, 7), (0, 7), (3, 7), (5, 7), (6, 7)],
    blue=[(1, 3), (1, 2), (2, 4), (3, 4), (0, 4), (1, 4),
          (2, 6), (4, 6), (3, 6), (5, 6), (0, 6), (1, 6)],
    doubled=[(0, 3)],
)

_SPLIT8_FIXTURES: dict[int, dict] = {
    3: dict(
        **_SPLIT8_SHARED,
        pendant_red=[(0, 8), (0, 9), (0, 10)],
        labels=[(2, 9), (4, 3), (3, 4), (3, 5), (5, 2), (1, 6), (6, 1), (0, 7),
                (0, 1), (0, 1), (0, 1)],
    ),
    2: dict(
        **_SPLIT8_SHARED,
        pendant_red=[(0, 8), (0, 9)],
        labels=[(2, 8), (4, 3), (3, 4), (3, 5), (5, 2), (1, 6), (6, 1), (0, 7),
                (0, 1), (0, 1)],
    ),
    1: dict(
        red=[(0, 1), (1, 3), (0, 3), (1, 2),
             (2, 5), (4, 5), (3, 5), (0, 5),
             (5, 7), (6, 7), (3, 7), (4, 7), (2, 7), (0, 7), (1, 7)],
        blue=[(0, 2), (2, 3), (3, 4), (2, 4), (1, 4), (0, 4),
              (1, 5), (5, 6), (4, 6), (2, 6), (3, 6), (0, 6), (1, 6)],
        doubled=[(0, 1)],
        pendant_red=[(0, 8)],
        labels=[(3, 6), (3, 5), (4, 3), (3, 4), (5, 2), (2, 5), (6, 1), (0, 7),
                (0, 1)],
    ),
}


@lru_cache(maxsize=None)
def split8_plan(d1: int) -> DoublingPlan:
    """One-doubling coloring for an 8-clique with d1 pendants at vertex 0."""
    if d1 not in _SPLIT8_FIXTURES:
        raise KeyError(f"no stored split coloring for pendant count {d1}")
    fx = _SPLIT8_FIXTURES[d1]
    counts = (d1,) + (0,) * 7
    return _plan_from_colors(
        split_graph(8, counts),
        fx["red"] + fx["pendant_red"],
        fx["blue"],
        fx["doubled"],
        fx["labels"],
        f"split8-d{d1}",
    )


# -- the four-color bow-tie certificate ---------------------------------------

_BOWTIE_CLASSES = [
    [(0, 2), (0, 1), (0, 5)],
    [(4, 5), (0, 4), (1, 9), (6, 9)],
    [(0, 3), (2, 3), (7, 8), (1, 8)],
    [(1, 7), (1, 6)],
]


@lru_cache(maxsize=None)
def bowtie_four_coloring() -> list[int]:
    """Class index per bundle of the bow-tie, in canonical bundle order;
    each class alone induces a locally irregular subgraph."""
    g = bowtie()
    cls = [-1] * g.num_bundles
    for ci, pairs in enumerate(_BOWTIE_CLASSES):
        for a, b in pairs:
            i = g.bundle_index(a, b)
            if cls[i] != -1:
                raise FixtureError("bow-tie: bundle colored twice")
            cls[i] = ci
    if -1 in cls:
        raise FixtureError("bow-tie: uncolored bundle")
    # each class must be locally irregular on its own
    for ci in range(len(_BOWTIE_CLASSES)):
        sub = Multigraph.from_edges(
            g.n, [(a, b) for (a, b, _), c in zip(g.bundles, cls) if c == ci]
        )
        from .core import is_locally_irregular

        if not is_locally_irregular(sub):
            raise FixtureError(f"bow-tie: class {ci} not locally irregular")
    return cls
