"""Exhaustive backtracking oracle for locally irregular colorings.

``exists_2liec`` decides 2-colorability of a multigraph exactly;
``exact_lir`` finds the least number of colors admitting a locally
irregular coloring; ``exact_D_lir`` finds the minimum number of doubled
edges after which a 2-coloring exists.  Absence results are full,
symmetry-reduced enumerations, so they are proofs, not timeouts; running
out of budget is reported as such and never as an answer.

Search design.  Vertices are processed in an order that completes them
early: a vertex's step colors all its remaining bundles, after which every
edge into the already-processed region can be checked.  Mutually
interchangeable vertices (twins: equal neighborhoods with multiplicities)
are kept in classes, and a step branches on *how many* bundles into a class
get each color rather than on which ones, collapsing the search on
complete, multipartite and split-like graphs by orders of magnitude.
Classes split as colored history diverges, and color symmetry is broken by
requiring never-used colors to appear in canonical order.  Forests skip
the search entirely and use the tree dynamic program.

The naive reference enumerator at the bottom shares nothing with the
pruned search: it scans every coloring in blocks with numpy and is the
ground truth the solver is tested against on small graphs.
"""

from __future__ import annotations

import enum
import itertools
import struct
import time
import zlib
from dataclasses import dataclass, field

import networkx as nx
import numpy as np

from .core import (
    BLUE,
    RED,
    DoublingPlan,
    EdgeColoring,
    Multigraph,
    apply_doubling,
    verify_liec,
)
from .trees import forest_two_liec, is_forest

__all__ = [
    "SolveBudget",
    "SolveStatus",
    "SolveResult",
    "BudgetExceeded",
    "exists_2liec",
    "exists_2liec_checkpointed",
    "exists_kliec",
    "exact_lir",
    "exact_D_lir",
    "verify_color_classes",
    "doubling_subset_orbits",
    "pendant_triangle_bound",
    "naive_exists_kliec",
    "naive_lir",
    "Checkpoint",
]


class BudgetExceeded(Exception):
    """Raised internally when a budget runs out mid-search."""


@dataclass(frozen=True)
class SolveBudget:
    max_colors: int = 2
    max_doublings: int = 2
    node_limit: int | None = None
    time_limit: float | None = None

    def __post_init__(self) -> None:
        if self.max_colors < 1 or self.max_doublings < 0:
            raise ValueError("budget bounds must be positive")
        for lim in (self.node_limit, self.time_limit):
            if lim is not None and lim <= 0:
                raise ValueError("limits must be positive when given")


class SolveStatus(enum.Enum):
    FOUND = "found"
    EXHAUSTED_NO_SOLUTION = "exhausted"
    BUDGET_EXCEEDED = "budget-exceeded"


@dataclass(frozen=True)
class SolveResult:
    status: SolveStatus
    value: int | None = None
    coloring: tuple[int, ...] | None = None  # color class per bundle
    plan: DoublingPlan | None = None
    nodes: int = 0

    @property
    def found(self) -> bool:
        return self.status is SolveStatus.FOUND


def verify_color_classes(g: Multigraph, classes: tuple[int, ...] | list[int]) -> bool:
    """Each color class must induce a locally irregular sub-multigraph."""
    if len(classes) != g.num_bundles:
        return False
    arr = np.asarray(classes)
    for col in np.unique(arr):
        mask = arr == col
        deg = np.bincount(g.u[mask], weights=g.mult[mask], minlength=g.n)
        deg += np.bincount(g.v[mask], weights=g.mult[mask], minlength=g.n)
        if np.any(mask & (deg[g.u] == deg[g.v])):
            return False
    return True


def _is_connected(g: Multigraph) -> bool:
    if g.n <= 1:
        return True
    parent = list(range(g.n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    comps = g.n
    for a, b in zip(g.u.tolist(), g.v.tolist()):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
            comps -= 1
    return comps == 1


# ---------------------------------------------------------------------------
# checkpointing for long exhaustive runs
# ---------------------------------------------------------------------------

_CHECKPOINT_MAGIC = b"LIRCHK1\n"


class Checkpoint:
    """Periodically persists the search's decision trail so an exhaustive
    run can resume after interruption.

    Binary format: magic, then a packed header (version, graph digest,
    color count, trail length), then the trail as uint32 branch ordinals,
    one per vertex step currently on the stack.
    """

    def __init__(self, path: str, every: int = 250_000):
        self.path = path
        self.every = every
        self._last = 0

    def write(self, digest: int, k: int, trail: list[int]) -> None:
        payload = struct.pack("<BQII", 1, digest, k, len(trail))
        payload += struct.pack(f"<{len(trail)}I", *trail)
        with open(self.path, "wb") as fh:
            fh.write(_CHECKPOINT_MAGIC + payload)

    @staticmethod
    def read(path: str) -> tuple[int, int, list[int]]:
        with open(path, "rb") as fh:
            raw = fh.read()
        if not raw.startswith(_CHECKPOINT_MAGIC):
            raise ValueError("not a checkpoint file")
        body = raw[len(_CHECKPOINT_MAGIC):]
        version, digest, k, length = struct.unpack_from("<BQII", body)
        if version != 1:
            raise ValueError(f"unsupported checkpoint version {version}")
        trail = list(struct.unpack_from(f"<{length}I", body, struct.calcsize("<BQII")))
        return digest, k, trail

    def maybe_write(self, nodes: int, digest: int, k: int, trail: list[int]) -> None:
        if nodes - self._last >= self.every:
            self._last = nodes
            self.write(digest, k, trail)


def _graph_digest(g: Multigraph) -> int:
    blob = struct.pack("<q", g.n) + g.u.tobytes() + g.v.tobytes() + g.mult.tobytes()
    return zlib.crc32(blob)


# ---------------------------------------------------------------------------
# the twin-aware backtracking search
# ---------------------------------------------------------------------------

def _twin_classes(g: Multigraph) -> list[list[int]]:
    """Partition vertices into classes closed under swapping: equal
    neighborhoods with multiplicities (open twins) or equal closed
    neighborhoods (closed twins)."""
    nb: list[dict[int, int]] = [dict() for _ in range(g.n)]
    for a, b, m in g.bundles:
        nb[a][b] = m
        nb[b][a] = m
    classes: list[list[int]] = []
    assigned = [False] * g.n

    def twins(x: int, y: int) -> bool:
        mx = dict(nb[x])
        my = dict(nb[y])
        if mx.pop(y, None) != my.pop(x, None):
            return False
        return mx == my

    for x in range(g.n):
        if assigned[x]:
            continue
        cls = [x]
        assigned[x] = True
        for y in range(x + 1, g.n):
            if not assigned[y] and twins(x, y):
                cls.append(y)
                assigned[y] = True
        classes.append(cls)
    return classes


def _vertex_order(g: Multigraph) -> list[int]:
    """Complete vertices early, biased towards large twin classes: their
    members carry the pairwise-distinct-degree pruning, so finishing them
    first fails hopeless branches soonest."""
    deg = g.degrees()
    class_size = [0] * g.n
    for cls in _twin_classes(g):
        for v in cls:
            class_size[v] = len(cls)
    nbs: list[set[int]] = [set() for _ in range(g.n)]
    for a, b in zip(g.u.tolist(), g.v.tolist()):
        nbs[a].add(b)
        nbs[b].add(a)
    order: list[int] = []
    done = [False] * g.n
    attached = [0] * g.n
    for _ in range(g.n):
        best = min(
            (v for v in range(g.n) if not done[v]),
            key=lambda v: (-attached[v], -class_size[v], -deg[v], v),
        )
        done[best] = True
        order.append(best)
        for w in nbs[best]:
            attached[w] += 1
    return order


class _Found(Exception):
    pass


class _Class:
    """A set of mutually interchangeable unprocessed vertices.

    Members share their entire colored history, hence also their current
    color degrees, their uncolored incident weight, and the *forbidden
    final degrees* pushed by completed neighbors.  When the members are
    pairwise adjacent their final red degrees must be pairwise distinct
    (equal reds would force equal blues on an edge in one of the colors),
    so the class needs as many available values as it has members; the
    same holds jointly for all descendants of one pairwise-adjacent
    initial class, whose root id is carried along splits.
    """

    __slots__ = ("members", "forb_red", "forb_blue", "clique", "root")

    def __init__(self, members: list[int], forb_red: list[int],
                 forb_blue: list[int], clique: bool, root: int):
        self.members = members
        self.forb_red = forb_red
        self.forb_blue = forb_blue
        self.clique = clique
        self.root = root


class _Search:
    """Depth-first coloring search over vertex steps.

    A vertex step chooses the vertex's final red degree among the values
    not banned by its completed neighbors, then distributes the matching
    red weight over its per-class bundle groups by counts.  Classes split
    as their histories diverge.  Each frame contributes one branch ordinal
    to the checkpoint trail; everything strictly left of a written trail
    is exhausted, so resuming skips it.
    """

    def __init__(
        self,
        g: Multigraph,
        k: int,
        budget: SolveBudget | None = None,
        checkpoint: Checkpoint | None = None,
        resume_trail: list[int] | None = None,
    ):
        self.g = g
        self.k = k
        self.budget = budget
        self.checkpoint = checkpoint
        self.resume_trail = resume_trail or []
        self.digest = _graph_digest(g)

        self.adj: list[list[tuple[int, int, int]]] = [[] for _ in range(g.n)]
        for i, (a, b, m) in enumerate(g.bundles):
            self.adj[a].append((b, i, m))
            self.adj[b].append((a, i, m))
        self.bundle_of: list[dict[int, tuple[int, int]]] = [
            {w: (bi, m) for w, bi, m in self.adj[v]} for v in range(g.n)
        ]
        self.order = _vertex_order(g)
        self.colors = [-1] * g.num_bundles
        self.cur = [[0] * k for _ in range(g.n)]
        deg = g.degrees()
        self.rem = [int(d) for d in deg]
        self.deg = [int(d) for d in deg]
        self.processed = [False] * g.n
        self.used = [0] * k  # bundles per color
        self.nodes = 0
        self.deadline = (
            time.monotonic() + budget.time_limit
            if budget and budget.time_limit is not None
            else None
        )
        self.found: list[int] | None = None
        self.trail: list[int] = []

        adjacency = [set(d) for d in self.bundle_of]
        self.vclass = [0] * g.n
        self.classes: dict[int, _Class] = {}
        for cid, cls in enumerate(_twin_classes(g)):
            clique = all(
                b in adjacency[a] for a in cls for b in cls if b > a
            )
            self.classes[cid] = _Class(list(cls), [], [], clique, cid)
            for v in cls:
                self.vclass[v] = cid
        self._next_cid = len(self.classes)

    # -- bookkeeping -------------------------------------------------------

    def _tick(self) -> None:
        self.nodes += 1
        if self.budget and self.budget.node_limit is not None and self.nodes > self.budget.node_limit:
            raise BudgetExceeded("node limit reached")
        if self.deadline is not None and self.nodes % 4096 == 0:
            if time.monotonic() > self.deadline:
                raise BudgetExceeded("time limit reached")
        if self.checkpoint is not None:
            self.checkpoint.maybe_write(self.nodes, self.digest, self.k, self.trail)

    def _avail_values(self, cls: _Class) -> list[int]:
        """Admissible final red degrees for a member of the class."""
        y = cls.members[0]
        lo = self.cur[y][0]
        hi = lo + self.rem[y]
        banned = set(cls.forb_red)
        d = self.deg[y]
        banned.update(d - b for b in cls.forb_blue)
        return [r for r in range(lo, hi + 1) if r not in banned]

    def _classes_viable(self) -> bool:
        """Counting prunes: every class needs an admissible final degree
        per member, distinct within a class and across all classes split
        off one pairwise-adjacent ancestor."""
        fam_need: dict[int, int] = {}
        fam_avail: dict[int, set[int]] = {}
        for cls in self.classes.values():
            if not cls.members:
                continue
            avail = self._avail_values(cls)
            if not cls.clique:
                if not avail:
                    return False
                continue
            if len(avail) < len(cls.members):
                return False
            fam_need[cls.root] = fam_need.get(cls.root, 0) + len(cls.members)
            fam_avail.setdefault(cls.root, set()).update(avail)
        for root, need in fam_need.items():
            if len(fam_avail[root]) < need:
                return False
        return True

    def _allowed_finals(self, x: int, cls: _Class) -> list[int]:
        lo = self.cur[x][0]
        hi = lo + self.rem[x]
        banned = set(cls.forb_red)
        banned.update(self.deg[x] - b for b in cls.forb_blue)
        return [r for r in range(lo, hi + 1) if r not in banned]

    # -- the descent ---------------------------------------------------------

    def run(self) -> list[int] | None:
        try:
            self._step(0, True)
        except _Found:
            assert self.found is not None
            return self.found
        return None

    def _resume_first(self, on_trail: bool) -> int:
        depth = len(self.trail)
        return self.resume_trail[depth] if on_trail and depth < len(self.resume_trail) else 0

    def _child_on_trail(self, on_trail: bool, ordinal: int, first: int) -> bool:
        depth = len(self.trail)
        return on_trail and depth < len(self.resume_trail) and ordinal == first

    def _step(self, idx: int, on_trail: bool) -> None:
        if idx == len(self.order):
            self.found = list(self.colors)
            raise _Found
        x = self.order[idx]

        cls_x = self.classes[self.vclass[x]]
        finals = None
        if self.k == 2:
            finals = self._allowed_finals(x, cls_x)
            if idx == 0:
                # red/blue swap symmetry: make the first vertex mostly red
                finals = [r for r in finals if 2 * r >= self.deg[x]]

        # detach x from its class; classmates stay interchangeable
        saved_members = cls_x.members
        cls_x.members = [v for v in saved_members if v != x]
        try:
            group_cids = sorted(
                {self.vclass[y] for y, _, _ in self.adj[x] if not self.processed[y]}
            )
            if self.k == 2:
                assert finals is not None
                first = self._resume_first(on_trail)
                for ordinal in range(first, len(finals)):
                    target = finals[ordinal]
                    child = self._child_on_trail(on_trail, ordinal, first)
                    self.trail.append(ordinal)
                    try:
                        self._assign_red_weight(
                            idx, x, group_cids, 0, target - self.cur[x][0], child
                        )
                    finally:
                        self.trail.pop()
            else:
                self._assign_groups(idx, x, group_cids, 0, on_trail)
        finally:
            cls_x.members = saved_members

    def _finish_vertex(self, idx: int, x: int, on_trail: bool) -> None:
        self._tick()
        cur_x = self.cur[x]
        for y, bi, _ in self.adj[x]:
            if self.processed[y]:
                c = self.colors[bi]
                if cur_x[c] == self.cur[y][c]:
                    return
        if self.k != 2:
            self.processed[x] = True
            try:
                self._step(idx + 1, on_trail)
            finally:
                self.processed[x] = False
            return
        # push this vertex's final degrees into the classes of its
        # unprocessed neighbors, then re-check class viability
        pushes: list[tuple[_Class, int]] = []
        seen: set[int] = set()
        for y, bi, _ in self.adj[x]:
            if not self.processed[y]:
                cid = self.vclass[y]
                if cid in seen:
                    continue
                seen.add(cid)
                cls = self.classes[cid]
                if self.colors[bi] == 0:
                    cls.forb_red.append(cur_x[0])
                    pushes.append((cls, 0))
                else:
                    cls.forb_blue.append(cur_x[1])
                    pushes.append((cls, 1))
        try:
            if not self._classes_viable():
                return
            self.processed[x] = True
            try:
                self._step(idx + 1, on_trail)
            finally:
                self.processed[x] = False
        finally:
            for cls, side in pushes:
                (cls.forb_red if side == 0 else cls.forb_blue).pop()

    # two-color path: distribute a red weight target over the groups
    def _assign_red_weight(
        self, idx: int, x: int, group_cids: list[int], gi: int, need: int,
        on_trail: bool,
    ) -> None:
        if need < 0:
            return
        if gi == len(group_cids):
            if need == 0:
                self._finish_vertex(idx, x, on_trail)
            return
        cid = group_cids[gi]
        cls = self.classes[cid]
        items = [(y, *self.bundle_of[x][y]) for y in cls.members]
        m = items[0][2]
        if any(it[2] != m for it in items):
            raise AssertionError("twin class with mixed multiplicities")
        size = len(items)
        # max red weight the remaining groups can absorb
        tail = 0
        for c2 in group_cids[gi + 1:]:
            mem = self.classes[c2].members
            tail += len(mem) * self.bundle_of[x][mem[0]][1]
        # count choices for this class
        hi = min(size, need // m)
        lo_bound = 0 if need - tail <= 0 else -(-max(0, need - tail) // m)
        first = self._resume_first(on_trail)
        ordinal = -1
        for cnt in range(lo_bound, hi + 1):
            if cnt * m > need:
                break
            ordinal += 1
            if ordinal < first:
                continue
            child = self._child_on_trail(on_trail, ordinal, first)
            self.trail.append(ordinal)
            try:
                self._paint_and_recurse(
                    idx, x, group_cids, gi, cls, cid, items, cnt,
                    need - cnt * m, child,
                )
            finally:
                self.trail.pop()

    def _paint_and_recurse(
        self, idx, x, group_cids, gi, cls, cid, items, cnt, need_left, on_trail
    ) -> None:
        cur_x = self.cur[x]
        for y, bi, m in items[:cnt]:
            self.colors[bi] = 0
            cur_x[0] += m
            self.cur[y][0] += m
            self.rem[x] -= m
            self.rem[y] -= m
        for y, bi, m in items[cnt:]:
            self.colors[bi] = 1
            cur_x[1] += m
            self.cur[y][1] += m
            self.rem[x] -= m
            self.rem[y] -= m
        split = 0 < cnt < len(items)
        new_cid = -1
        if split:
            reds = [y for y, _, _ in items[:cnt]]
            blues = [y for y, _, _ in items[cnt:]]
            cls.members = reds
            new_cid = self._next_cid
            self._next_cid += 1
            self.classes[new_cid] = _Class(
                blues, list(cls.forb_red), list(cls.forb_blue), cls.clique,
                cls.root,
            )
            for y in blues:
                self.vclass[y] = new_cid
        try:
            self._assign_red_weight(idx, x, group_cids, gi + 1, need_left, on_trail)
        finally:
            if split:
                for y in self.classes[new_cid].members:
                    self.vclass[y] = cid
                del self.classes[new_cid]
                cls.members = [y for y, _, _ in items]
            for y, bi, m in items:
                c = self.colors[bi]
                self.colors[bi] = -1
                cur_x[c] -= m
                self.cur[y][c] -= m
                self.rem[x] += m
                self.rem[y] += m

    # general k-color path: plain per-class count compositions
    def _compositions(self, size: int) -> list[tuple[int, ...]]:
        unused = [c for c in range(self.k) if self.used[c] == 0]
        out = []
        for combo in itertools.product(range(size + 1), repeat=self.k):
            if sum(combo) != size:
                continue
            if any(combo[a] < combo[b] for a, b in itertools.pairwise(unused)):
                continue
            out.append(combo)
        return out

    def _assign_groups(
        self, idx: int, x: int, group_cids: list[int], gi: int, on_trail: bool
    ) -> None:
        if gi == len(group_cids):
            self._finish_vertex(idx, x, on_trail)
            return
        cid = group_cids[gi]
        cls = self.classes[cid]
        items = [(y, *self.bundle_of[x][y]) for y in cls.members]
        if len({m for _, _, m in items}) != 1:
            raise AssertionError("twin class with mixed multiplicities")
        size = len(items)
        combos = self._compositions(size)
        first = self._resume_first(on_trail)
        cur_x = self.cur[x]
        for ordinal in range(first, len(combos)):
            combo = combos[ordinal]
            child = self._child_on_trail(on_trail, ordinal, first)
            start = 0
            for col, cnt in enumerate(combo):
                for y, bi, m in items[start:start + cnt]:
                    self.colors[bi] = col
                    cur_x[col] += m
                    self.cur[y][col] += m
                    self.rem[x] -= m
                    self.rem[y] -= m
                self.used[col] += cnt
                start += cnt
            chunks = []
            start = 0
            for cnt in combo:
                if cnt:
                    chunks.append([y for y, _, _ in items[start:start + cnt]])
                start += cnt
            new_cids: list[int] = []
            if len(chunks) > 1:
                cls.members = chunks[0]
                for extra in chunks[1:]:
                    nc = self._next_cid
                    self._next_cid += 1
                    self.classes[nc] = _Class(
                        extra, list(cls.forb_red), list(cls.forb_blue),
                        cls.clique, cls.root,
                    )
                    for y in extra:
                        self.vclass[y] = nc
                    new_cids.append(nc)
            self.trail.append(ordinal)
            try:
                self._assign_groups(idx, x, group_cids, gi + 1, child)
            finally:
                self.trail.pop()
                for nc in new_cids:
                    for y in self.classes[nc].members:
                        self.vclass[y] = cid
                    del self.classes[nc]
                if len(chunks) > 1:
                    cls.members = [y for y, _, _ in items]
                start = 0
                for col, cnt in enumerate(combo):
                    for y, bi, m in items[start:start + cnt]:
                        self.colors[bi] = -1
                        cur_x[col] -= m
                        self.cur[y][col] -= m
                        self.rem[x] += m
                        self.rem[y] += m
                    self.used[col] -= cnt
                    start += cnt


# ---------------------------------------------------------------------------
# public solver entry points
# ---------------------------------------------------------------------------

def _run_search(
    g: Multigraph,
    k: int,
    budget: SolveBudget | None,
    checkpoint: Checkpoint | None = None,
    resume_trail: list[int] | None = None,
) -> tuple[tuple[int, ...] | None, int]:
    if g.num_bundles == 0:
        return (), 0
    if k == 2 and checkpoint is None and is_forest(g):
        col = forest_two_liec(g)
        if col is None:
            return None, 0
        return tuple(int(c) for c in col.colors.tolist()), 0
    search = _Search(g, k, budget, checkpoint, resume_trail)
    res = search.run()
    if res is None:
        return None, search.nodes
    classes = tuple(res)
    if not verify_color_classes(g, classes):
        raise AssertionError("search produced an invalid certificate")
    return classes, search.nodes


def exists_kliec(
    g: Multigraph,
    k: int,
    budget: SolveBudget | None = None,
    checkpoint: Checkpoint | None = None,
    resume_trail: list[int] | None = None,
) -> tuple[int, ...] | None:
    """A k-class locally irregular coloring (class index per bundle), or
    None after exhausting the symmetry-reduced space."""
    classes, _ = _run_search(g, k, budget, checkpoint, resume_trail)
    return classes


def exists_2liec(g: Multigraph, budget: SolveBudget | None = None) -> EdgeColoring | None:
    """A verified 2-liec of the multigraph, or None (proof of absence)."""
    classes = exists_kliec(g, 2, budget)
    if classes is None:
        return None
    col = EdgeColoring.from_colors([RED if c == 0 else BLUE for c in classes])
    report = verify_liec(g, col)
    if not report.ok:
        raise AssertionError("certificate failed verification")
    return col


def exists_2liec_checkpointed(
    g: Multigraph,
    path: str,
    resume: bool = False,
    budget: SolveBudget | None = None,
    every: int = 250_000,
) -> EdgeColoring | None:
    """Long-running variant of :func:`exists_2liec` that persists its
    decision trail to ``path`` and can resume from it."""
    resume_trail: list[int] | None = None
    if resume:
        digest, k, trail = Checkpoint.read(path)
        if digest != _graph_digest(g) or k != 2:
            raise ValueError("checkpoint belongs to a different instance")
        resume_trail = trail
    classes, _ = _run_search(g, 2, budget, Checkpoint(path, every), resume_trail)
    if classes is None:
        return None
    col = EdgeColoring.from_colors([RED if c == 0 else BLUE for c in classes])
    if not verify_liec(g, col).ok:
        raise AssertionError("certificate failed verification")
    return col


def exact_lir(g: Multigraph, budget: SolveBudget | None = None) -> SolveResult:
    """Least number of colors admitting a locally irregular coloring.

    With ``max_colors`` at least the edge count, exhaustion is a proof
    that no locally irregular coloring exists at all.
    """
    if not _is_connected(g):
        raise ValueError("exact search expects a connected graph")
    budget = budget or SolveBudget(max_colors=max(1, g.num_bundles))
    nodes = 0
    top = min(budget.max_colors, max(1, g.num_bundles))
    for k in range(1, top + 1):
        classes, used = _run_search(g, k, budget)
        nodes += used
        if classes is not None:
            return SolveResult(SolveStatus.FOUND, value=k, coloring=classes, nodes=nodes)
    return SolveResult(SolveStatus.EXHAUSTED_NO_SOLUTION, nodes=nodes)


def doubling_subset_orbits(g: Multigraph, d: int):
    """One representative per automorphism orbit of the size-d bundle
    subsets.  Exact: candidates are bucketed by a hash of the marked graph
    and merged only after an isomorphism check."""
    if d == 0:
        yield ()
        return
    E = g.num_bundles
    n = g.n
    if E == n * (n - 1) // 2 and g.is_simple:
        # complete graph: an orbit is the isomorphism type of the chosen
        # edge subset, enumerate those directly for small d
        if d == 1:
            yield (0,)
            return
        if d == 2:
            pairs = []
            share = disjoint = None
            for s in itertools.combinations(range(E), 2):
                a, b = s
                touch = {int(g.u[a]), int(g.v[a])} & {int(g.u[b]), int(g.v[b])}
                if touch and share is None:
                    share = s
                if not touch and disjoint is None:
                    disjoint = s
                if share is not None and (disjoint is not None or n < 4):
                    break
            yield share  # type: ignore[misc]
            if disjoint is not None:
                yield disjoint
            return

    base = nx.Graph()
    base.add_nodes_from(range(n))
    for a, b, m in g.bundles:
        base.add_edge(a, b, w=m)

    def marked(subset):
        h = base.copy()
        for i in subset:
            h.edges[int(g.u[i]), int(g.v[i])]["w"] += 2
        return h

    kept: dict[str, list[tuple[tuple[int, ...], nx.Graph]]] = {}
    match = nx.algorithms.isomorphism.categorical_edge_match("w", None)
    for subset in itertools.combinations(range(E), d):
        h = marked(subset)
        key = nx.weisfeiler_lehman_graph_hash(h, edge_attr="w", iterations=2)
        bucket = kept.setdefault(key, [])
        if any(nx.is_isomorphic(h, other, edge_match=match) for _, other in bucket):
            continue
        bucket.append((subset, h))
        yield subset


def exact_D_lir(g: Multigraph, budget: SolveBudget | None = None) -> SolveResult:
    """Minimum number of doubled edges so that the multigraph has a
    2-liec, with the witness plan; subsets are enumerated by cardinality,
    one representative per orbit."""
    if not g.is_simple:
        raise ValueError("doubling search starts from a simple graph")
    if not _is_connected(g):
        raise ValueError("exact search expects a connected graph")
    if g.n in (2, 3) and g.num_bundles == g.n * (g.n - 1) // 2:
        raise ValueError("no doubling count exists for the 2- and 3-cliques")
    budget = budget or SolveBudget()
    for d in range(budget.max_doublings + 1):
        for subset in doubling_subset_orbits(g, d):
            doubled = frozenset(subset)
            col = exists_2liec(apply_doubling(g, doubled), budget)
            if col is not None:
                plan = DoublingPlan(base=g, doubled=doubled, coloring=col)
                report = plan.verify()
                if not report.ok:
                    raise AssertionError("doubling certificate failed verification")
                return SolveResult(SolveStatus.FOUND, value=d, plan=plan)
    return SolveResult(SolveStatus.EXHAUSTED_NO_SOLUTION)


# ---------------------------------------------------------------------------
# lower bound from pendant triangles
# ---------------------------------------------------------------------------

def pendant_triangle_bound(g: Multigraph) -> int:
    """Number of pendant triangles whose three vertices all have degree at
    least three: a lower bound on the doubling count for the triangle
    cacti (each such triangle plus its tails must contain a doubled edge,
    and these subgraphs are edge-disjoint)."""
    from .families import to_networkx

    gx = to_networkx(g)
    if not g.is_simple or (g.n and not nx.is_connected(gx)):
        raise ValueError("bound defined for connected simple graphs")
    tri_of: dict[int, int] = {}
    triangles: list[tuple[int, ...]] = []
    for block in nx.biconnected_components(gx):
        if len(block) == 2:
            continue
        if len(block) != 3:
            raise ValueError("graph is not a triangle cactus")
        tri = tuple(sorted(block))
        for xversion in tri:
            if xversion in tri_of:
                raise ValueError("triangles share a vertex")
            tri_of[xversion] = len(triangles)
        triangles.append(tri)
    if not triangles:
        raise ValueError("graph has no triangle")

    # triangle adjacency: follow each attachment path to its end
    tri_deg = [0] * len(triangles)
    for ti, tri in enumerate(triangles):
        for x in tri:
            for start in gx.neighbors(x):
                if start in tri:
                    continue
                prev, cur = x, start
                while cur not in tri_of and gx.degree(cur) == 2:
                    prev, cur = cur, next(w for w in gx.neighbors(cur) if w != prev)
                if cur in tri_of:
                    tri_deg[ti] += 1

    degs = g.degrees()
    count = 0
    for ti, tri in enumerate(triangles):
        if tri_deg[ti] <= 1 and all(degs[x] >= 3 for x in tri):
            count += 1
    return count


# ---------------------------------------------------------------------------
# the naive reference enumerator
# ---------------------------------------------------------------------------

_NAIVE_LIMIT = 2 ** 30


def naive_exists_kliec(g: Multigraph, k: int, block: int = 1 << 15) -> tuple[int, ...] | None:
    """Scan all k^E colorings in blocks; no pruning, no symmetry.  The
    independent ground truth for solver tests on small graphs."""
    E = g.num_bundles
    if E == 0:
        return ()
    total = k ** E
    if total > _NAIVE_LIMIT:
        raise ValueError(f"naive enumeration of {total} colorings refused")
    inc = np.zeros((E, g.n), dtype=np.int64)
    for i, (a, b, m) in enumerate(g.bundles):
        inc[i, a] += m
        inc[i, b] += m
    u, v = g.u, g.v
    powers = k ** np.arange(E, dtype=np.int64)
    for lo in range(0, total, block):
        ids = np.arange(lo, min(lo + block, total), dtype=np.int64)
        digits = (ids[:, None] // powers[None, :]) % k
        ok = np.ones(len(ids), dtype=bool)
        for col in range(k):
            mask = digits == col
            deg = mask.astype(np.int64) @ inc
            ok &= ~np.any(mask & (deg[:, u] == deg[:, v]), axis=1)
            if not ok.any():
                break
        hits = np.flatnonzero(ok)
        if len(hits):
            return tuple(int(x) for x in digits[hits[0]])
    return None


def naive_lir(g: Multigraph, max_colors: int | None = None) -> int | None:
    """Smallest color count by naive scan, or None when no locally
    irregular coloring exists with up to |E| colors."""
    top = max_colors if max_colors is not None else max(1, g.num_bundles)
    for k in range(1, top + 1):
        if naive_exists_kliec(g, k) is not None:
            return k
    return None
