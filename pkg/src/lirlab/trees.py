"""Trees: exact 2-colorability by dynamic programming, and one doubling
when that fails.

Local irregularity interacts only along edges, so on a forest the feasible
(parent-edge color, own color degree) pairs of every vertex can be computed
bottom-up.  Per vertex and candidate degree split, choosing the children's
edge colors is a subset-sum over edge weights, done on bitmasks.  This
decides 2-liec existence exactly on forests of any size and extracts a
witness coloring, including for doubled bundles (weight 2).

A *shrub* is a tree rooted at a pendant vertex.  ``two_aliec_shrub``
produces a red root edge and a coloring in which every monochromatic
component is locally irregular, except that the component of the root edge
may be exactly that single edge.  ``color_tree`` first tries a plain
2-liec; when none exists it takes the almost-coloring and repairs it by
recoloring the root edge blue and doubling one edge near the root.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import (
    BLUE,
    RED,
    Color,
    DoublingPlan,
    EdgeColoring,
    Multigraph,
    apply_doubling,
    verify_liec,
)

__all__ = [
    "is_forest",
    "forest_two_liec",
    "two_aliec_shrub",
    "color_tree",
]


def is_forest(g: Multigraph) -> bool:
    """True when the underlying simple graph has no cycle."""
    parent = list(range(g.n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for a, b in zip(g.u.tolist(), g.v.tolist()):
        ra, rb = find(a), find(b)
        if ra == rb:
            return False
        parent[ra] = rb
    return True


@dataclass
class _Node:
    vertex: int
    parent: int
    parent_bundle: int  # -1 at a root
    parent_mult: int
    children: list[tuple[int, int, int]]  # (child vertex, bundle, mult)
    total_w: int  # weighted degree


class _TreeDP:
    """Bottom-up feasibility sets and top-down witness extraction."""

    def __init__(self, g: Multigraph):
        if not is_forest(g):
            raise ValueError("tree machinery requires a forest")
        self.g = g
        self.adj: list[list[tuple[int, int, int]]] = [[] for _ in range(g.n)]
        for i, (a, b, m) in enumerate(g.bundles):
            self.adj[a].append((b, i, m))
            self.adj[b].append((a, i, m))
        self.nodes: dict[int, _Node] = {}
        self.feas: dict[int, dict[Color, set[int]]] = {}
        self.colors = np.zeros(g.num_bundles, dtype=np.uint8)

    # -- tree layout ------------------------------------------------------

    def layout(self, root: int) -> list[int]:
        """DFS from root; returns vertices in leaves-first order."""
        order: list[int] = []
        stack = [(root, -1, -1, 0)]
        seen = {root}
        while stack:
            v, par, pb, pm = stack.pop()
            order.append(v)
            children = []
            for w, bi, m in self.adj[v]:
                if w != par:
                    if w in seen:
                        raise ValueError("not a tree component")
                    seen.add(w)
                    children.append((w, bi, m))
                    stack.append((w, v, bi, m))
            total = pm + sum(m for _, _, m in children)
            self.nodes[v] = _Node(v, par, pb, max(pm, 0) if pb >= 0 else 0,
                                  children, total)
        # fix total_w at root (pm was -1 sentinel there)
        rootnode = self.nodes[root]
        rootnode.total_w = sum(m for _, _, m in rootnode.children)
        for v in order[1:]:
            nd = self.nodes[v]
            nd.total_w = nd.parent_mult + sum(m for _, _, m in nd.children)
        return order[::-1]

    # -- feasibility ------------------------------------------------------

    def _can(self, child: int, color: Color, own_deg: int) -> bool:
        s = self.feas[child][color]
        return bool(s) and (len(s) > 1 or own_deg not in s)

    def _children_masks(self, nd: _Node, r: int, b: int) -> list[int] | None:
        """Prefix-reachable red-weight bitmasks over nd's children, or None
        when some child supports neither color."""
        masks = [1]
        cur = 1
        for child, _, m in nd.children:
            nxt = 0
            if self._can(child, RED, r):
                nxt |= cur << m
            if self._can(child, BLUE, b):
                nxt |= cur
            if nxt == 0:
                return None
            cur = nxt
            masks.append(cur)
        return masks

    def fill(self, order: list[int], root: int) -> None:
        for v in order:
            nd = self.nodes[v]
            if v == root:
                continue
            out: dict[Color, set[int]] = {RED: set(), BLUE: set()}
            tw = nd.total_w
            for pc in (RED, BLUE):
                for r in range(tw + 1):
                    b = tw - r
                    need = r - (nd.parent_mult if pc is RED else 0)
                    if need < 0:
                        continue
                    masks = self._children_masks(nd, r, b)
                    if masks is not None and (masks[-1] >> need) & 1:
                        out[pc].add(r if pc is RED else b)
            self.feas[v] = out

    def root_choices(self, root: int) -> list[int]:
        """Feasible red degrees r at the root (no parent edge)."""
        nd = self.nodes[root]
        tw = nd.total_w
        good = []
        for r in range(tw + 1):
            masks = self._children_masks(nd, r, tw - r)
            if masks is not None and (masks[-1] >> r) & 1:
                good.append(r)
        return good

    # -- extraction -------------------------------------------------------

    def assign_down(self, v: int, r: int) -> None:
        """Fix v's red degree to r and color its subtree accordingly."""
        nd = self.nodes[v]
        b = nd.total_w - r
        pc_red = nd.parent_mult if (nd.parent_bundle >= 0 and
                                    self.colors[nd.parent_bundle] == int(RED)) else 0
        need = r - pc_red
        masks = self._children_masks(nd, r, b)
        if masks is None or need < 0 or not ((masks[-1] >> need) & 1):
            raise AssertionError("extraction disagrees with feasibility pass")
        for idx in range(len(nd.children) - 1, -1, -1):
            child, bi, m = nd.children[idx]
            take_red = (
                self._can(child, RED, r)
                and need - m >= 0
                and ((masks[idx] >> (need - m)) & 1)
            )
            color = RED if take_red else BLUE
            self.colors[bi] = int(color)
            if take_red:
                need -= m
            own = r if color is RED else b
            child_deg = min(d for d in self.feas[child][color] if d != own)
            self.assign_down(child, child_deg if color is RED
                             else self.nodes[child].total_w - child_deg)


def forest_two_liec(g: Multigraph) -> EdgeColoring | None:
    """A 2-liec of a forest (multiplicities allowed), or None when none
    exists."""
    dp = _TreeDP(g)
    seen = [False] * g.n
    for root in range(g.n):
        if seen[root]:
            continue
        order = dp.layout(root)
        for v in order:
            seen[v] = True
        dp.fill(order, root)
        choices = dp.root_choices(root)
        if not choices:
            return None
        dp.assign_down(root, choices[0])
    return EdgeColoring.from_colors(dp.colors.tolist())


def two_aliec_shrub(g: Multigraph, root: int) -> EdgeColoring:
    """Red-root-edge coloring of a tree rooted at the pendant vertex
    ``root``; locally irregular except possibly for the component of the
    root edge, which is then that single edge."""
    if not g.is_simple:
        raise ValueError("shrubs are simple trees")
    inc = g.incident_bundles(root)
    if len(inc) != 1:
        raise ValueError("shrub root must be a pendant vertex")
    root_bundle = inc[0]
    u = int(g.u[root_bundle]) if int(g.v[root_bundle]) == root else int(g.v[root_bundle])

    dp = _TreeDP(g)
    order = dp.layout(root)
    if len(order) != g.n:
        raise ValueError("shrub must be a single tree")
    dp.fill(order, root)
    dp.colors[root_bundle] = int(RED)
    # proper coloring first: the neighbor's red degree must dodge the
    # root's red degree 1
    proper = sorted(d for d in dp.feas[u][RED] if d != 1)
    if proper:
        dp.assign_down(u, proper[0])
        return EdgeColoring.from_colors(dp.colors.tolist())
    if 1 not in dp.feas[u][RED]:
        raise AssertionError("shrub admits no almost-coloring; expected impossible")
    # exception: the root edge is its own red component
    dp.assign_down(u, 1)
    return EdgeColoring.from_colors(dp.colors.tolist())


def color_tree(g: Multigraph) -> DoublingPlan:
    """At most one doubling for any tree of order at least three; zero
    whenever the tree has a 2-liec."""
    if not g.is_simple or not is_forest(g):
        raise ValueError("expected a simple tree")
    if g.n < 3:
        raise ValueError("trees of order at least three only")
    if g.num_bundles != g.n - 1:
        raise ValueError("expected a connected tree")

    plain = forest_two_liec(g)
    if plain is not None:
        plan = DoublingPlan(base=g, doubled=frozenset(), coloring=plain)
        _must_verify(plan)
        return plan

    degs = g.degrees()
    pendants = [v for v in range(g.n) if degs[v] == 1]
    for x in pendants:
        root_bundle = g.incident_bundles(x)[0]
        u = int(g.u[root_bundle]) if int(g.v[root_bundle]) == x else int(g.v[root_bundle])
        almost = two_aliec_shrub(g, x)
        base = almost.colors.copy()
        base[root_bundle] = int(BLUE)  # recolor the root edge
        for doubled in [root_bundle] + [bi for bi in g.incident_bundles(u) if bi != root_bundle]:
            plan = DoublingPlan(
                base=g,
                doubled=frozenset({doubled}),
                coloring=EdgeColoring.from_colors(base.tolist()),
            )
            if plan.verify().ok:
                return plan
    raise AssertionError("no single-doubling repair found; expected impossible for trees")


def _must_verify(plan: DoublingPlan) -> None:
    report = plan.verify()
    if not report.ok:
        raise AssertionError(f"constructed plan fails verification: {report.violations}")
