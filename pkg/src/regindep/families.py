"""Deterministic constructors for the graph families used throughout.

Labeling is fixed so every build is reproducible: paths and cycles label
vertices along the walk, stars and spiders put the center at 0, figure
trees number the spine first and pendants afterwards.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Sequence

from .errors import CapExceededError, FamilyParameterError, TntRecipeError
from .graphs import (
    Graph,
    bfs_distances,
    degree_profile,
    diameter,
    is_tree,
    mask_of,
)


def make_complete(n: int) -> Graph:
    if n < 1:
        raise FamilyParameterError("complete graph needs n >= 1")
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def make_path(n: int) -> Graph:
    """Path v_0 - v_1 - ... - v_{n-1}."""
    if n < 1:
        raise FamilyParameterError("path needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def make_cycle(n: int) -> Graph:
    if n < 3:
        raise FamilyParameterError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def make_star(n: int) -> Graph:
    """Star S_{1,n-1}: center 0, leaves 1..n-1."""
    if n < 2:
        raise FamilyParameterError("star needs n >= 2")
    return Graph.from_edges(n, [(0, v) for v in range(1, n)])


def make_complete_multipartite(parts: Sequence[int]) -> Graph:
    """Complete multipartite graph; vertices grouped part by part."""
    if len(parts) < 2:
        raise FamilyParameterError("need at least 2 parts")
    if any(p < 1 for p in parts):
        raise FamilyParameterError("empty part")
    n = sum(parts)
    part_of = []
    for i, p in enumerate(parts):
        part_of += [i] * p
    adj = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if part_of[u] != part_of[v]:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    return Graph(n, tuple(adj))


# ---------------------------------------------------------------------------
# spiders and the canonical diameter tree
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SpiderSpec:
    """Spider with center-to-leaf path orders ``leg_orders`` (desc).

    A leg of order L contributes L-1 new vertices (the path includes the
    center), so the spider has 1 + sum(L_i - 1) vertices.  Legs of order 1
    are rejected: they would silently collapse the leg count.
    """

    leg_orders: tuple[int, ...]

    def __post_init__(self):
        legs = tuple(sorted(self.leg_orders, reverse=True))
        object.__setattr__(self, "leg_orders", legs)
        if len(legs) < 3:
            raise FamilyParameterError("spider needs at least 3 legs")
        if any(l < 2 for l in legs):
            raise FamilyParameterError("spider leg order must be >= 2")

    @property
    def r(self) -> int:
        return len(self.leg_orders)

    @property
    def order(self) -> int:
        return 1 + sum(l - 1 for l in self.leg_orders)


def make_spider(spec: SpiderSpec | Sequence[int]) -> Graph:
    """Spider tree: center 0, legs laid out consecutively outward."""
    if not isinstance(spec, SpiderSpec):
        spec = SpiderSpec(tuple(spec))
    edges = []
    nxt = 1
    for length in spec.leg_orders:
        prev = 0
        for _ in range(length - 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph.from_edges(spec.order, edges)


@dataclass(frozen=True)
class TntSpec:
    """Parameters of the canonical order-n, diameter-(n-t) spider.

    ``h = floor((n-t)/2)`` and ``n-1 = q*h + r`` with ``q >= 2``,
    ``1 <= r <= h``.
    """

    n: int
    t: int
    h: int
    q: int
    r: int

    @classmethod
    def from_params(cls, n: int, t: int) -> "TntSpec":
        if not 2 <= t <= n - 3:
            raise FamilyParameterError(f"need 2 <= t <= n-3, got n={n}, t={t}")
        h = (n - t) // 2
        q, r = divmod(n - 1, h)
        if r == 0:
            q, r = q - 1, h
        return cls(n, t, h, q, r)

    @property
    def legs(self) -> tuple[int, ...]:
        if (self.n - self.t) % 2 == 0:
            return (self.h + 1,) * self.q + (self.r + 1,)
        return (self.h + 2,) + (self.h + 1,) * (self.q - 1) + (self.r + 1,)


def tnt_recipe_check(n: int, t: int) -> dict:
    """Build the canonical spider recipe and compare it against its own
    stated profile (order n, diameter n-t, q+1 leaves, n-q-2 degree-2
    vertices).  Returns a report; never raises for profile mismatches."""
    spec = TntSpec.from_params(n, t)
    g = make_spider(spec.legs)
    prof = degree_profile(g)
    got = {
        "order": g.n,
        "diameter": diameter(g),
        "leaf_count": prof.counts.get(1, 0),
        "d2_count": prof.counts.get(2, 0),
    }
    want = {
        "order": n,
        "diameter": n - t,
        "leaf_count": spec.q + 1,
        "d2_count": n - spec.q - 2,
    }
    return {
        "n": n,
        "t": t,
        "h": spec.h,
        "q": spec.q,
        "r": spec.r,
        "parity": (n - t) % 2,
        "legs": list(spec.legs),
        "got": got,
        "want": want,
        "consistent": got == want,
    }


def make_Tnt(n: int, t: int) -> tuple[Graph, int]:
    """Canonical diameter-(n-t) spider on n vertices, plus its center index.

    Raises :class:`TntRecipeError` when the published recipe does not
    reproduce its own profile for (n, t) (it overshoots the order by one
    whenever n-t is odd); the error carries the full report.
    """
    report = tnt_recipe_check(n, t)
    if not report["consistent"]:
        raise TntRecipeError(
            f"T(n,t) recipe inconsistent for n={n}, t={t}: "
            f"got {report['got']}, want {report['want']}",
            report,
        )
    return make_spider(TntSpec.from_params(n, t).legs), 0


# ---------------------------------------------------------------------------
# example trees (figures are pinned by their stated degree profiles)
# ---------------------------------------------------------------------------

def _assert_profile(g: Graph, name: str, n1: int, n2: int, n3_plus: int,
                    diam: int) -> Graph:
    prof = degree_profile(g)
    got = (prof.counts.get(1, 0), prof.counts.get(2, 0), prof.n3_plus,
           diameter(g))
    if got != (n1, n2, n3_plus, diam):
        raise FamilyParameterError(
            f"{name}: built profile (n1,n2,N3,diam)={got}, "
            f"pinned {(n1, n2, n3_plus, diam)}")
    return g


def make_figure_tree(name: str, n: int | None = None,
                     t: int | None = None) -> Graph:
    """Reconstruction of the worked example trees.

    ``fig1a`` and ``fig1b`` take (n, t); ``fig2a`` takes t; the rest are
    fixed graphs.  Every constructor re-checks the pinned degree profile
    and diameter, so a wrong reconstruction is a hard error.
    """
    name = name.lower()
    if name == "fig1a":
        if n is None or t is None or t < 2 or n < 2 * t:
            raise FamilyParameterError("fig1a needs n >= 2t, t >= 2")
        path_n = n - t + 1
        edges = [(i, i + 1) for i in range(path_n - 1)]
        # one pendant on each of the first t-1 internal path vertices
        edges += [(j, path_n + j - 1) for j in range(1, t)]
        g = Graph.from_edges(n, edges)
        return _assert_profile(g, "fig1a", t + 1, n - 2 * t, t - 1, n - t)
    if name == "fig1b":
        if n is None or t is None or t < 2 or t - 1 > (n - t) // 2:
            raise FamilyParameterError("fig1b needs t >= 2 and t-1 <= (n-t)/2")
        path_n = n - t + 1
        edges = [(i, i + 1) for i in range(path_n - 1)]
        attach = (n - t) // 2  # 0-indexed v_{floor((n-t)/2)+1}
        prev = attach
        for w in range(path_n, n):
            edges.append((prev, w))
            prev = w
        g = Graph.from_edges(n, edges)
        return _assert_profile(g, "fig1b", 3, n - 4, 1, n - t)
    if name == "fig2a":
        if t is None or t < 3:
            raise FamilyParameterError("fig2a needs t >= 3")
        n2a = 3 * t - 2
        path_n = 2 * t - 1
        edges = [(i, i + 1) for i in range(path_n - 1)]
        # v'_j (index path_n+j-1) pendant on v_{j+1} (index j), then the
        # tail edge v'_{t-2} v'_{t-1}
        edges += [(j, path_n + j - 1) for j in range(1, t - 1)]
        edges.append((path_n + t - 3, path_n + t - 2))
        g = Graph.from_edges(n2a, edges)
        return _assert_profile(g, "fig2a", t, t, t - 2, 2 * t - 2)
    if name == "fig2b":
        return _assert_profile(make_spider((5, 5, 4)), "fig2b", 3, 8, 1, 8)
    if name == "fig2c":
        return _assert_profile(make_spider((5, 4, 4)), "fig2c", 3, 7, 1, 7)
    if name == "fig2d":
        edges = [(i, i + 1) for i in range(5)]
        edges += [(1, 6), (2, 7), (3, 8)]
        g = Graph.from_edges(9, edges)
        return _assert_profile(g, "fig2d", 5, 1, 3, 5)
    if name == "fig3a":
        return _assert_profile(make_spider((3, 3, 3, 3, 2)), "fig3a", 5, 4, 1, 4)
    if name == "fig3b":
        return _assert_profile(make_spider((3, 3, 2, 2, 2, 2, 2)), "fig3b",
                               7, 2, 1, 4)
    raise FamilyParameterError(f"unknown figure tree {name!r}")


FIGURE_TREES = ("fig1a", "fig1b", "fig2a", "fig2b", "fig2c", "fig2d",
                "fig3a", "fig3b")


def tree_surgery(t: Graph, z: int, zprime: int) -> Graph:
    """Move all but one branch hanging at z' over to z.

    Both vertices must have degree >= 3.  The result keeps the order and
    the leaf count and has exactly one fewer vertex of degree >= 3.
    """
    if not is_tree(t):
        raise FamilyParameterError("surgery input must be a tree")
    if z == zprime:
        raise FamilyParameterError("z and z' must differ")
    if t.degree(z) < 3 or t.degree(zprime) < 3:
        raise FamilyParameterError("z and z' must both have degree >= 3")
    dist = bfs_distances(t, z)
    toward = next(u for u in t.neighbors(zprime) if dist[u] == dist[zprime] - 1)
    others = [u for u in t.neighbors(zprime) if u != toward]
    moved = others[1:]  # smallest-index branch stays, so z' keeps degree 2
    edges = set(t.edges())
    for b in moved:
        edges.discard((min(zprime, b), max(zprime, b)))
        edges.add((min(z, b), max(z, b)))
    out = Graph.from_edges(t.n, sorted(edges))
    before, after = degree_profile(t), degree_profile(out)
    if (not is_tree(out)
            or before.counts.get(1, 0) != after.counts.get(1, 0)
            or after.n3_plus != before.n3_plus - 1):
        raise RuntimeError("surgery invariant violated")  # pragma: no cover
    return out


def random_tree_with_diameter(n: int, d: int, seed: int = 0) -> Graph:
    """Random tree on n vertices with diameter exactly d, deterministic
    in ``seed``.  A (d+1)-path is laid down first; the remaining vertices
    attach uniformly among vertices of eccentricity <= d-1."""
    if not 1 <= d <= n - 1:
        raise FamilyParameterError(f"need 1 <= d <= n-1, got n={n}, d={d}")
    if d == 1 and n > 2:
        raise FamilyParameterError("diameter 1 forces n == 2")
    rng = random.Random(seed)
    adjsets: list[set[int]] = [set() for _ in range(n)]
    for v in range(d):
        adjsets[v].add(v + 1)
        adjsets[v + 1].add(v)
    for v in range(d + 1, n):
        cands = [u for u in range(v) if _ecc_upto(adjsets, u, v) <= d - 1]
        parent = cands[rng.randrange(len(cands))]
        adjsets[parent].add(v)
        adjsets[v].add(parent)
    return Graph(n, tuple(mask_of(s) for s in adjsets))


def _ecc_upto(adjsets: list[set[int]], source: int, upto: int) -> int:
    # BFS eccentricity within the partial tree on vertices 0..upto-1
    dist = {source: 0}
    frontier = [source]
    ecc = 0
    while frontier:
        nxt = []
        for u in frontier:
            for w in adjsets[u]:
                if w < upto and w not in dist:
                    dist[w] = dist[u] + 1
                    ecc = dist[w]
                    nxt.append(w)
        frontier = nxt
    return ecc


# ---------------------------------------------------------------------------
# named instances
# ---------------------------------------------------------------------------

def make_fan(n: int) -> Graph:
    """Fan F_n: path on n-1 vertices plus apex n-1 adjacent to all of it."""
    if n < 3:
        raise FamilyParameterError("fan needs n >= 3")
    edges = [(i, i + 1) for i in range(n - 2)]
    edges += [(i, n - 1) for i in range(n - 1)]
    return Graph.from_edges(n, edges)


def make_apollonian(depth: int) -> Graph:
    """Apollonian triangulation: K_4, then ``depth`` rounds of inserting a
    vertex into every face."""
    if depth < 0:
        raise FamilyParameterError("depth must be >= 0")
    edges = {(a, b) for a, b in combinations(range(4), 2)}
    faces = [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]
    nxt = 4
    for _ in range(depth):
        new_faces = []
        for (a, b, c) in faces:
            w = nxt
            nxt += 1
            edges |= {(a, w), (b, w), (c, w)}
            new_faces += [(a, b, w), (a, c, w), (b, c, w)]
        faces = new_faces
    return Graph.from_edges(nxt, sorted(edges))


_ICOSA_EDGES = (
    # apex 0 over upper ring 1..5, apex 11 under lower ring 6..10
    [(0, i) for i in range(1, 6)]
    + [(11, i) for i in range(6, 11)]
    + [(1 + i, 1 + (i + 1) % 5) for i in range(5)]
    + [(6 + i, 6 + (i + 1) % 5) for i in range(5)]
    + [(1 + i, 6 + i) for i in range(5)]
    + [(1 + i, 6 + (i + 4) % 5) for i in range(5)]
)


def make_named(name: str, param: int | None = None) -> Graph:
    """Named instances: octahedron, icosahedron, fan(n), apollonian(depth),
    remark1."""
    name = name.lower()
    if name == "octahedron":
        pairs = {(0, 5), (1, 4), (2, 3)}
        return Graph.from_edges(
            6, [(u, v) for u, v in combinations(range(6), 2)
                if (u, v) not in pairs])
    if name == "icosahedron":
        return Graph.from_edges(12, _ICOSA_EDGES)
    if name == "fan":
        if param is None:
            raise FamilyParameterError("fan needs a size parameter")
        return make_fan(param)
    if name == "apollonian":
        return make_apollonian(0 if param is None else param)
    if name == "remark1":
        return Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (2, 3)])
    raise FamilyParameterError(f"unknown named graph {name!r}")


NAMED_GRAPHS = ("octahedron", "icosahedron", "fan", "apollonian", "remark1")


# ---------------------------------------------------------------------------
# exhaustive enumeration
# ---------------------------------------------------------------------------

def enumerate_labeled_graphs(n: int, cap: int = 7) -> Iterator[Graph]:
    """All 2^(n(n-1)/2) labeled graphs on n vertices, in ascending bitmask
    order over the row-major pair list."""
    if n > cap:
        raise CapExceededError(f"enumeration capped at n <= {cap}")
    if n < 0:
        raise FamilyParameterError("n must be >= 0")
    pair_list = list(combinations(range(n), 2))
    for mask in range(1 << len(pair_list)):
        adj = [0] * n
        rem = mask
        while rem:
            low = rem & -rem
            u, v = pair_list[low.bit_length() - 1]
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            rem ^= low
        yield Graph(n, tuple(adj))
