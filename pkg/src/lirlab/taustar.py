"""Build scripts for the recursive cactus family used by the cactus colorer.

A script starts from a base cycle and repeatedly attaches, at a degree-2
vertex that lies on a cycle, either a pendant path of positive length or a
path whose far end is a vertex of a new cycle.  Every graph built this way
is a cactus whose cycles are vertex-disjoint, joined by paths, with pendant
paths hanging off cycle vertices.

The structure object records the cycles, the connector paths between them
and the pendant paths, which is exactly what the inductive coloring
procedure needs (it recurses over pendant cycles, so the bare graph alone
would have to be re-decomposed).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .core import Multigraph

__all__ = [
    "TauStarStep",
    "TauStarScript",
    "TauStarStructure",
    "build_taustar",
    "random_taustar_script",
]


@dataclass(frozen=True)
class TauStarStep:
    """Attach a path (and optionally a new cycle at its far end).

    ``attach_at`` is a vertex index of the graph built so far; it must have
    degree two and lie on a cycle at the time the step runs.
    """

    attach_at: int
    path_len: int
    new_cycle_len: int | None = None

    def __post_init__(self) -> None:
        if self.path_len < 1:
            raise ValueError("attached paths must have positive length")
        if self.new_cycle_len is not None and self.new_cycle_len < 3:
            raise ValueError("cycles need length at least 3")


@dataclass(frozen=True)
class TauStarScript:
    base_cycle_len: int
    steps: tuple[TauStarStep, ...] = ()

    def __post_init__(self) -> None:
        if self.base_cycle_len < 3:
            raise ValueError("base cycle needs length at least 3")

    @property
    def num_cycles(self) -> int:
        return 1 + sum(1 for s in self.steps if s.new_cycle_len is not None)

    def to_json_obj(self) -> dict:
        return {
            "base": self.base_cycle_len,
            "steps": [[s.attach_at, s.path_len, s.new_cycle_len] for s in self.steps],
        }

    @staticmethod
    def from_json_obj(obj: dict) -> "TauStarScript":
        steps = tuple(TauStarStep(a, p, c) for a, p, c in obj.get("steps", []))
        return TauStarScript(base_cycle_len=int(obj["base"]), steps=steps)


@dataclass
class TauStarStructure:
    """Decomposition of a built script graph into cycles and paths."""

    graph: Multigraph
    cycles: list[list[int]]
    # (parent cycle, parent vertex, path vertices parent..child, child cycle)
    connectors: list[tuple[int, int, list[int], int]]
    # (cycle, attach vertex, path vertices attach..leaf)
    pendants: list[tuple[int, int, list[int]]]

    @property
    def num_cycles(self) -> int:
        return len(self.cycles)

    def cycle_children(self, ci: int) -> list[int]:
        return [child for parent, _, _, child in self.connectors if parent == ci]

    def pendants_of(self, ci: int) -> list[tuple[int, list[int]]]:
        return [(v, path) for c, v, path in self.pendants if c == ci]


class _Builder:
    def __init__(self, base_cycle_len: int):
        self.edges: list[tuple[int, int]] = []
        self.degree: list[int] = []
        self.on_cycle: list[int | None] = []  # cycle index or None
        self.cycles: list[list[int]] = []
        self.connectors: list[tuple[int, int, list[int], int]] = []
        self.pendants: list[tuple[int, int, list[int]]] = []
        base = [self._new_vertex(0) for _ in range(base_cycle_len)]
        self.cycles.append(base)
        for i, a in enumerate(base):
            self._add_edge(a, base[(i + 1) % base_cycle_len])

    def _new_vertex(self, cycle: int | None) -> int:
        self.degree.append(0)
        self.on_cycle.append(cycle)
        return len(self.degree) - 1

    def _add_edge(self, a: int, b: int) -> None:
        self.edges.append((a, b))
        self.degree[a] += 1
        self.degree[b] += 1

    def attach_points(self) -> list[int]:
        return [
            v
            for v in range(len(self.degree))
            if self.degree[v] == 2 and self.on_cycle[v] is not None
        ]

    def apply(self, step: TauStarStep) -> None:
        v = step.attach_at
        if v >= len(self.degree) or self.degree[v] != 2 or self.on_cycle[v] is None:
            raise ValueError(
                f"step attaches at vertex {v}, which is not a degree-2 cycle vertex"
            )
        parent_cycle = self.on_cycle[v]
        path = [v]
        for _ in range(step.path_len):
            w = self._new_vertex(None)
            self._add_edge(path[-1], w)
            path.append(w)
        if step.new_cycle_len is None:
            self.pendants.append((parent_cycle, v, path))
            return
        far = path[-1]
        ci = len(self.cycles)
        self.on_cycle[far] = ci
        cyc = [far] + [self._new_vertex(ci) for _ in range(step.new_cycle_len - 1)]
        self.cycles.append(cyc)
        for i, a in enumerate(cyc):
            self._add_edge(a, cyc[(i + 1) % step.new_cycle_len])
        self.connectors.append((parent_cycle, v, path, ci))

    def finish(self) -> TauStarStructure:
        g = Multigraph.from_edges(len(self.degree), self.edges)
        return TauStarStructure(
            graph=g,
            cycles=self.cycles,
            connectors=self.connectors,
            pendants=self.pendants,
        )


def build_taustar(script: TauStarScript) -> TauStarStructure:
    """Run a script, checking each step's precondition."""
    b = _Builder(script.base_cycle_len)
    for step in script.steps:
        b.apply(step)
    return b.finish()


def random_taustar_script(
    rng: random.Random,
    max_cycles: int = 6,
    max_steps: int = 10,
    max_cycle_len: int = 8,
    max_path_len: int = 5,
    require_non_cycle: bool = True,
) -> TauStarScript:
    """A random script; with ``require_non_cycle`` the result has at least
    one attachment, so the graph is not a bare cycle."""
    b = _Builder(rng.randint(3, max_cycle_len))
    steps: list[TauStarStep] = []
    cycles = 1
    num_steps = rng.randint(1 if require_non_cycle else 0, max_steps)
    for _ in range(num_steps):
        points = b.attach_points()
        if not points:
            break
        make_cycle = cycles < max_cycles and rng.random() < 0.45
        step = TauStarStep(
            attach_at=rng.choice(points),
            path_len=rng.randint(1, max_path_len),
            new_cycle_len=rng.randint(3, max_cycle_len) if make_cycle else None,
        )
        b.apply(step)
        steps.append(step)
        cycles += 1 if make_cycle else 0
    if require_non_cycle and not steps:
        points = b.attach_points()
        step = TauStarStep(attach_at=points[0], path_len=rng.randint(1, max_path_len))
        b.apply(step)
        steps.append(step)
    return TauStarScript(base_cycle_len=len(b.cycles[0]), steps=tuple(steps))
