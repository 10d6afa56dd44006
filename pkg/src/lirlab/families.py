"""Generators for the graph families treated by the colorers.

Each generator documents its vertex order, since several colorings are
shipped as positional fixtures.  The textual family grammar used by the
command line is parsed here as well: ``path:n``, ``cycle:n``,
``complete:n``, ``kpartite:a,b,...``, ``powcycle:n,k``,
``split:n;d1,d2,...``, ``bowtie``, ``taustar:@file``, ``trianglechain:m``,
``eighth:m`` and ``almost:t,{c|d}``.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass

import networkx as nx

from .core import (
    BLUE,
    RED,
    Color,
    DoublingPlan,
    EdgeColoring,
    Multigraph,
)
from .taustar import TauStarScript, TauStarStructure, build_taustar

__all__ = [
    "Path",
    "Cycle",
    "Complete",
    "CompleteMultipartite",
    "PowerOfCycle",
    "SplitGraph",
    "Bowtie",
    "AlmostIrregular",
    "TauStar",
    "TriangleChain",
    "EighthGadget",
    "FamilySpec",
    "generate",
    "parse_family",
    "path_graph",
    "cycle_graph",
    "complete_graph",
    "complete_multipartite",
    "power_of_cycle",
    "split_graph",
    "bowtie",
    "almost_irregular",
    "triangle_chain",
    "eighth_gadget",
    "random_tree",
    "is_uncolorable",
    "to_networkx",
]


# ---------------------------------------------------------------------------
# plain generators
# ---------------------------------------------------------------------------

def path_graph(n: int) -> Multigraph:
    """Path on vertices 0..n-1 in path order."""
    if n < 1:
        raise ValueError("paths need at least one vertex")
    return Multigraph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Multigraph:
    """Cycle on vertices 0..n-1 in cyclic order."""
    if n < 3:
        raise ValueError("cycles need at least three vertices")
    return Multigraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Multigraph:
    if n < 1:
        raise ValueError("complete graphs need at least one vertex")
    return Multigraph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_multipartite(sizes: tuple[int, ...]) -> Multigraph:
    """Parts laid out in the given order: part p covers the next sizes[p]
    vertex indices."""
    if len(sizes) < 2 or any(s < 1 for s in sizes):
        raise ValueError("need at least two parts of positive size")
    bounds = [0]
    for s in sizes:
        bounds.append(bounds[-1] + s)
    n = bounds[-1]
    edges = []
    for p in range(len(sizes)):
        for q in range(p + 1, len(sizes)):
            for a in range(bounds[p], bounds[p + 1]):
                for b in range(bounds[q], bounds[q + 1]):
                    edges.append((a, b))
    return Multigraph.from_edges(n, edges)


def power_of_cycle(n: int, k: int, allow_complete: bool = False) -> Multigraph:
    """k-th power of the n-cycle: vertices 0..n-1 in cyclic order, edges
    between vertices at cyclic distance at most k.

    For n < 2k+2 this degenerates to the complete graph, which is rejected
    unless ``allow_complete`` is set.
    """
    if k < 1:
        raise ValueError("power must be at least 1")
    if n < 3:
        raise ValueError("cycles need at least three vertices")
    if n < 2 * k + 2 and not allow_complete:
        raise ValueError(f"power {k} of an {n}-cycle is a complete graph")
    edges = set()
    for i in range(n):
        for d in range(1, min(k, n // 2) + 1):
            edges.add((min(i, (i + d) % n), max(i, (i + d) % n)))
    return Multigraph.from_edges(n, sorted(edges))


def split_graph(n: int, pendant_counts: tuple[int, ...]) -> Multigraph:
    """Clique vertices 0..n-1, then the pendant neighbors: all of vertex
    0's pendants first, then vertex 1's, and so on."""
    if n < 1:
        raise ValueError("clique must be nonempty")
    if len(pendant_counts) != n or any(d < 0 for d in pendant_counts):
        raise ValueError("need one nonnegative pendant count per clique vertex")
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)]
    nxt = n
    for host, d in enumerate(pendant_counts):
        for _ in range(d):
            edges.append((host, nxt))
            nxt += 1
    return Multigraph.from_edges(nxt, edges)


#: Two vertices of degree five joined by an edge, each also the meeting
#: point of two triangles.  The unique known connected colorable graph
#: needing four colors.
_BOWTIE_EDGES = [
    (0, 2), (2, 3), (0, 3),
    (0, 4), (4, 5), (0, 5),
    (0, 1),
    (1, 6), (6, 9), (1, 9),
    (1, 7), (7, 8), (1, 8),
]


def bowtie() -> Multigraph:
    return Multigraph.from_edges(10, _BOWTIE_EDGES)


def almost_irregular_degrees(t: int, connected: bool) -> list[int]:
    if t < 2:
        raise ValueError("almost irregular graphs need at least two vertices")
    if connected:
        rep = t // 2
        span = list(range(1, t))
    else:
        rep = (t - 1) // 2
        span = list(range(0, t - 1))
    return sorted(span + [rep])


def almost_irregular(t: int, connected: bool) -> Multigraph:
    """The order-t graph whose degree sequence repeats exactly one value.

    There is one connected and one disconnected such graph for each t;
    vertices are ordered by nondecreasing degree, and two vertices are
    adjacent iff their degree sum reaches t (connected) or t-1
    (disconnected).
    """
    degs = almost_irregular_degrees(t, connected)
    threshold = t if connected else t - 1
    edges = [
        (i, j)
        for i in range(t)
        for j in range(i + 1, t)
        if degs[i] + degs[j] >= threshold
    ]
    g = Multigraph.from_edges(t, edges)
    if g.degrees().tolist() != degs:
        raise AssertionError("threshold construction missed the target degrees")
    return g


def random_tree(n: int, rng: random.Random) -> Multigraph:
    """Uniform random labelled tree via a random Pruefer sequence."""
    if n < 1:
        raise ValueError("trees need at least one vertex")
    if n == 1:
        return Multigraph.from_edges(1, [])
    if n == 2:
        return Multigraph.from_edges(2, [(0, 1)])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    count = [0] * n
    for x in seq:
        count[x] += 1
    import heapq

    leaves = [v for v in range(n) if count[v] == 0]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        count[x] -= 1
        if count[x] == 0:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return Multigraph.from_edges(n, edges)


# ---------------------------------------------------------------------------
# gadget families
# ---------------------------------------------------------------------------

def _triangle_unit_vertices(start: int) -> dict[str, int]:
    # x0 plus two pendant length-2 paths hanging off y0 and z0
    names = ["x0", "y0", "y1", "y2", "z0", "z1", "z2"]
    return {name: start + i for i, name in enumerate(names)}


def triangle_chain(m: int) -> Multigraph:
    """A cactus with exactly m pendant triangles whose vertices all have
    degree three.

    Every pendant triangle carries two pendant length-2 paths and hangs by
    a length-3 path; for m > 2 the pendant triangles attach to a chain of
    inner triangles joined by single edges.  Assembled only from the legal
    attachment moves (even pendant paths; odd paths ending in new
    triangles), so the result stays inside the uncolorable cactus family.
    """
    if m < 2:
        raise ValueError("need at least two pendant triangles")
    edges: list[tuple[int, int]] = []
    nxt = 0

    def new_vertices(k: int) -> list[int]:
        nonlocal nxt
        out = list(range(nxt, nxt + k))
        nxt += k
        return out

    def add_leaf_triangle(hook: int) -> None:
        # length-3 connector, then the triangle with its two pendant paths
        a, b = new_vertices(2)
        x0, y0, y1, y2, z0, z1, z2 = new_vertices(7)
        edges.extend([(hook, a), (a, b), (b, x0)])
        edges.extend([(x0, y0), (x0, z0), (y0, z0)])
        edges.extend([(y0, y1), (y1, y2), (z0, z1), (z1, z2)])

    if m == 2:
        t1 = new_vertices(3)
        edges.extend([(t1[0], t1[1]), (t1[1], t1[2]), (t1[0], t1[2])])
        # hang the second triangle off t1[0] by a length-3 path
        a, b = new_vertices(2)
        t2 = new_vertices(3)
        edges.extend([(t1[0], a), (a, b), (b, t2[0])])
        edges.extend([(t2[0], t2[1]), (t2[1], t2[2]), (t2[0], t2[2])])
        for root in (t1[1], t1[2], t2[1], t2[2]):
            p = new_vertices(2)
            edges.extend([(root, p[0]), (p[0], p[1])])
        return Multigraph.from_edges(nxt, edges)

    inner = max(1, m - 2)
    triangles = []
    for i in range(inner):
        t = new_vertices(3)
        edges.extend([(t[0], t[1]), (t[1], t[2]), (t[0], t[2])])
        if triangles:
            edges.append((triangles[-1][2], t[0]))
        triangles.append(t)
    # free hooks: chain ends keep two, middle triangles one
    hooks: list[int] = []
    if inner == 1:
        hooks = list(triangles[0])[:m]
    else:
        hooks.extend(triangles[0][:2][::-1])
        for t in triangles[1:-1]:
            hooks.append(t[1])
        hooks.extend(triangles[-1][1:])
    for hook in hooks[:m]:
        add_leaf_triangle(hook)
    return Multigraph.from_edges(nxt, edges)


def eighth_gadget(m: int) -> tuple[Multigraph, DoublingPlan]:
    """m triangle-with-two-tails units sharing a single hub vertex, plus a
    plan that doubles exactly the m hub edges (one eighth of the edges).

    Every unit forces a doubling, and doubling the hub edges suffices, so
    the plan is optimal.  The doubled edges all meet at the hub, hence are
    deliberately not independent.
    """
    if m < 2:
        raise ValueError("need at least two units")
    hub = 0
    edges: list[tuple[int, int]] = []
    units: list[dict[str, int]] = []
    for i in range(m):
        u = _triangle_unit_vertices(1 + 7 * i)
        units.append(u)
        edges.append((hub, u["x0"]))
        edges.extend([(u["x0"], u["y0"]), (u["x0"], u["z0"]), (u["y0"], u["z0"])])
        edges.extend([(u["y0"], u["y1"]), (u["y1"], u["y2"])])
        edges.extend([(u["z0"], u["z1"]), (u["z1"], u["z2"])])
    g = Multigraph.from_edges(1 + 7 * m, edges)

    colors = [RED] * g.num_bundles
    doubled = set()
    # one blue-flavored unit when m == 2, otherwise the hub degrees already
    # separate from the unit apexes
    flavors = [RED] * m if m != 2 else [RED, BLUE]
    for unit, flavor in zip(units, flavors):
        hub_edge = g.bundle_index(hub, unit["x0"])
        doubled.add(hub_edge)
        colors[hub_edge] = flavor
        for a, b in [("x0", "y0"), ("x0", "z0"), ("y0", "z0"),
                     ("z0", "z1"), ("z1", "z2")]:
            colors[g.bundle_index(unit[a], unit[b])] = flavor
        for a, b in [("y0", "y1"), ("y1", "y2")]:
            colors[g.bundle_index(unit[a], unit[b])] = flavor.other
    plan = DoublingPlan(
        base=g, doubled=frozenset(doubled), coloring=EdgeColoring.from_colors(colors)
    )
    report = plan.verify()
    if not report.ok:
        raise AssertionError(f"gadget plan failed verification: {report.violations}")
    return g, plan


# ---------------------------------------------------------------------------
# family specs
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Path:
    n: int


@dataclass(frozen=True)
class Cycle:
    n: int


@dataclass(frozen=True)
class Complete:
    n: int


@dataclass(frozen=True)
class CompleteMultipartite:
    sizes: tuple[int, ...]


@dataclass(frozen=True)
class PowerOfCycle:
    n: int
    k: int
    allow_complete: bool = False


@dataclass(frozen=True)
class SplitGraph:
    n: int
    pendant_counts: tuple[int, ...]


@dataclass(frozen=True)
class Bowtie:
    pass


@dataclass(frozen=True)
class AlmostIrregular:
    t: int
    connected: bool


@dataclass(frozen=True)
class TauStar:
    script: TauStarScript


@dataclass(frozen=True)
class TriangleChain:
    m: int


@dataclass(frozen=True)
class EighthGadget:
    m: int


FamilySpec = (
    Path
    | Cycle
    | Complete
    | CompleteMultipartite
    | PowerOfCycle
    | SplitGraph
    | Bowtie
    | AlmostIrregular
    | TauStar
    | TriangleChain
    | EighthGadget
)


def generate(spec: FamilySpec) -> Multigraph:
    """The named graph, with the vertex order documented per generator."""
    match spec:
        case Path(n):
            return path_graph(n)
        case Cycle(n):
            return cycle_graph(n)
        case Complete(n):
            return complete_graph(n)
        case CompleteMultipartite(sizes):
            return complete_multipartite(sizes)
        case PowerOfCycle(n, k, allow_complete):
            return power_of_cycle(n, k, allow_complete)
        case SplitGraph(n, pendant_counts):
            return split_graph(n, pendant_counts)
        case Bowtie():
            return bowtie()
        case AlmostIrregular(t, connected):
            return almost_irregular(t, connected)
        case TauStar(script):
            return build_taustar(script).graph
        case TriangleChain(m):
            return triangle_chain(m)
        case EighthGadget(m):
            return eighth_gadget(m)[0]
    raise TypeError(f"unknown family spec {spec!r}")


def taustar_structure(spec: TauStar) -> TauStarStructure:
    return build_taustar(spec.script)


def parse_family(text: str) -> FamilySpec:
    """Parse the whitespace-free textual family grammar."""
    name, _, arg = text.partition(":")
    try:
        match name:
            case "path":
                return Path(int(arg))
            case "cycle":
                return Cycle(int(arg))
            case "complete":
                return Complete(int(arg))
            case "kpartite":
                return CompleteMultipartite(tuple(int(s) for s in arg.split(",")))
            case "powcycle":
                n, k = arg.split(",")
                return PowerOfCycle(int(n), int(k))
            case "split":
                head, _, tail = arg.partition(";")
                counts = tuple(int(s) for s in tail.split(",")) if tail else ()
                n = int(head)
                if len(counts) < n:
                    counts = counts + (0,) * (n - len(counts))
                return SplitGraph(n, counts)
            case "bowtie":
                return Bowtie()
            case "almost":
                t, flag = arg.split(",")
                if flag not in ("c", "d"):
                    raise ValueError("almost:t,{c|d}")
                return AlmostIrregular(int(t), flag == "c")
            case "taustar":
                if not arg.startswith("@"):
                    raise ValueError("taustar expects @file with a JSON script")
                with open(arg[1:], encoding="utf-8") as fh:
                    return TauStar(TauStarScript.from_json_obj(json.load(fh)))
            case "trianglechain":
                return TriangleChain(int(arg))
            case "eighth":
                return EighthGadget(int(arg))
    except (ValueError, OSError) as exc:
        raise ValueError(f"bad family spec {text!r}: {exc}") from exc
    raise ValueError(f"unknown family {name!r}")


# ---------------------------------------------------------------------------
# membership in the uncolorable family
# ---------------------------------------------------------------------------

def to_networkx(g: Multigraph) -> nx.Graph:
    """Underlying simple graph (multiplicities dropped)."""
    out = nx.Graph()
    out.add_nodes_from(range(g.n))
    out.add_edges_from(zip(g.u.tolist(), g.v.tolist()))
    return out


def _path_shape(gx: nx.Graph) -> int | None:
    """Length of gx when it is a path graph, else None."""
    n = gx.number_of_nodes()
    if gx.number_of_edges() != n - 1:
        return None
    if n == 1:
        return 0
    degs = sorted(d for _, d in gx.degree())
    if degs != [1, 1] + [2] * (n - 2):
        return None
    return n - 1


def _cycle_shape(gx: nx.Graph) -> int | None:
    n = gx.number_of_nodes()
    if gx.number_of_edges() == n and all(d == 2 for _, d in gx.degree()):
        return n
    return None


def is_uncolorable(g: Multigraph) -> bool:
    """Membership in the family of connected graphs admitting no locally
    irregular coloring at all: odd paths, odd cycles, and the recursively
    built triangle cacti (triangles joined by odd paths, decorated with
    even pendant paths)."""
    if not g.is_simple:
        raise ValueError("membership is defined for simple graphs")
    gx = to_networkx(g)
    if g.n and not nx.is_connected(gx):
        raise ValueError("membership is defined for connected graphs")

    length = _path_shape(gx)
    if length is not None:
        return length % 2 == 1
    length = _cycle_shape(gx)
    if length is not None:
        return length % 2 == 1

    # triangle-cactus recognition
    tri_of: dict[int, int] = {}
    triangles: list[tuple[int, ...]] = []
    for block in nx.biconnected_components(gx):
        if len(block) == 2:
            continue
        if len(block) != 3:
            return False
        tri = tuple(sorted(block))
        if gx.subgraph(tri).number_of_edges() != 3:
            return False
        for x in tri:
            if x in tri_of:  # triangles sharing a vertex never occur here
                return False
            tri_of[x] = len(triangles)
        triangles.append(tri)
    if not triangles:
        return False
    for v in gx.nodes:
        if gx.degree(v) > (3 if v in tri_of else 2):
            return False

    # walk each attachment path from its triangle vertex
    for tri_idx, tri in enumerate(triangles):
        for x in tri:
            if gx.degree(x) != 3:
                continue
            (start,) = [w for w in gx.neighbors(x) if w not in tri]
            prev, cur, steps = x, start, 1
            while cur not in tri_of and gx.degree(cur) == 2:
                prev, cur = cur, next(w for w in gx.neighbors(cur) if w != prev)
                steps += 1
            if cur in tri_of:
                if steps % 2 == 0:  # triangles must be joined by odd paths
                    return False
            else:
                if steps % 2 == 1:  # pendant paths must be even
                    return False
    return True
