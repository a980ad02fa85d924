"""Immutable simple graphs stored as per-vertex adjacency bitmasks.

Vertices are dense 0-indexed integers.  ``adj[v]`` is an int whose bit ``u``
is set iff ``uv`` is an edge, so neighborhood intersections, induced
subgraphs and solver candidate filtering are single word-ops per row.
Everything here is pure; Graph values are safe to share across workers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import FormatError

#: Diameter marker for disconnected graphs.
INFINITE = math.inf


def bits(mask: int) -> Iterator[int]:
    """Positions of the set bits of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Invariants (checked at construction): adjacency is symmetric and
    irreflexive, and every neighbor index is in range.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0 or len(self.adj) != self.n:
            raise ValueError("adjacency row count must equal n")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"vertex {v}: neighbor index out of range")
            if row >> v & 1:
                raise ValueError(f"vertex {v}: self-loop")
        for v, row in enumerate(self.adj):
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency at {v}-{u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(row.bit_count() for row in self.adj)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> Iterator[int]:
        return bits(self.adj[v])

    def edges(self) -> list[tuple[int, int]]:
        """Edges as (u, v) with u < v, lexicographically sorted."""
        out = []
        for u in range(self.n):
            row = self.adj[u] >> (u + 1) << (u + 1)
            for v in bits(row):
                out.append((u, v))
        return out

    def is_regular(self) -> bool:
        return self.n == 0 or len(set(self.degrees())) == 1

    def __repr__(self):  # keep pytest diffs readable
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class DegreeProfile:
    """The degree-class partition of a graph.

    ``classes[i]`` lists the degree-i vertices (ascending); only nonempty
    classes are present.  ``rep`` is the largest class size, ``n3_plus``
    the number of vertices of degree at least 3.
    """

    classes: dict[int, tuple[int, ...]]
    class_masks: dict[int, int]
    counts: dict[int, int]
    n3_plus: int
    min_degree: int | None
    max_degree: int | None
    rep: int


@dataclass(frozen=True)
class DegreeClassSubgraph:
    """Induced subgraph on one degree class of a host graph."""

    source_degree: int
    vertices: tuple[int, ...]
    graph: Graph


def degree_profile(g: Graph) -> DegreeProfile:
    masks: dict[int, int] = {}
    for v in range(g.n):
        masks.setdefault(g.adj[v].bit_count(), 0)
        masks[g.adj[v].bit_count()] |= 1 << v
    masks = dict(sorted(masks.items()))
    classes = {d: tuple(bits(mk)) for d, mk in masks.items()}
    counts = {d: len(vs) for d, vs in classes.items()}
    n3 = sum(c for d, c in counts.items() if d >= 3)
    if counts:
        dmin, dmax = min(counts), max(counts)
        rep = max(counts.values())
    else:
        dmin = dmax = None
        rep = 0
    return DegreeProfile(classes, masks, counts, n3, dmin, dmax, rep)


def degree_class_subgraph(g: Graph, j: int) -> DegreeClassSubgraph:
    verts = degree_profile(g).classes.get(j, ())
    return DegreeClassSubgraph(j, verts, induced_subgraph(g, verts))


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    adj = tuple((full & ~g.adj[v]) & ~(1 << v) for v in range(g.n))
    return Graph(g.n, adj)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph induced on ``vertices``, relabeled 0.. in input order."""
    vs = list(vertices)
    for v in vs:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
    if len(set(vs)) != len(vs):
        raise ValueError("duplicate vertex in induced-subgraph selection")
    pos = {v: i for i, v in enumerate(vs)}
    adj = [0] * len(vs)
    for i, v in enumerate(vs):
        for u in bits(g.adj[v]):
            if u in pos:
                adj[i] |= 1 << pos[u]
    return Graph(len(vs), tuple(adj))


def line_graph(g: Graph) -> tuple[Graph, tuple[tuple[int, int], ...]]:
    """Line graph of ``g`` plus the edge list indexing its vertices.

    Vertex i of the output corresponds to ``edge_list[i]``; two vertices
    are adjacent iff the underlying edges share an endpoint.
    """
    edge_list = g.edges()
    idx = {e: i for i, e in enumerate(edge_list)}
    adj = [0] * len(edge_list)
    for v in range(g.n):
        inc = [idx[(min(v, u), max(v, u))] for u in bits(g.adj[v])]
        for a in inc:
            for b in inc:
                if a != b:
                    adj[a] |= 1 << b
    return Graph(len(edge_list), tuple(adj)), tuple(edge_list)


def bfs_distances(g: Graph, source: int) -> list[int | float]:
    """Distances from ``source``; unreachable vertices get INFINITE."""
    dist: list[int | float] = [INFINITE] * g.n
    dist[source] = 0
    frontier = 1 << source
    seen = frontier
    d = 0
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        nxt &= ~seen
        d += 1
        for v in bits(nxt):
            dist[v] = d
        seen |= nxt
        frontier = nxt
    return dist


def eccentricities(g: Graph) -> list[int | float]:
    return [max(bfs_distances(g, v)) for v in range(g.n)]


def diameter(g: Graph) -> int | float:
    """Largest pairwise distance; INFINITE when disconnected, 0 when n <= 1."""
    if g.n <= 1:
        return 0
    best = 0
    for v in range(g.n):
        ecc = max(bfs_distances(g, v))
        if ecc == INFINITE:
            return INFINITE
        if ecc > best:
            best = int(ecc)
    return best


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    return INFINITE not in bfs_distances(g, 0)


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and is_connected(g)


# ---------------------------------------------------------------------------
# graph6 encoding (bit-exact per the published format description)
# ---------------------------------------------------------------------------

_G6_HEADER = b">>graph6<<"


def _g6_size_bytes(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, (n >> 12) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])
    if n <= 68719476735:
        out = [126, 126]
        for shift in (30, 24, 18, 12, 6, 0):
            out.append((n >> shift & 63) + 63)
        return bytes(out)
    raise FormatError("graph6 cannot encode n > 68719476735")


_PAIR_CACHE: dict[int, list[tuple[int, int]]] = {}


def _pairs(n: int) -> list[tuple[int, int]]:
    # column-major upper triangle: (0,1), (0,2), (1,2), (0,3), ...
    ps = _PAIR_CACHE.get(n)
    if ps is None:
        ps = [(i, j) for j in range(1, n) for i in range(j)]
        if n <= 1024:
            _PAIR_CACHE[n] = ps
    return ps


def encode_graph6(g: Graph) -> bytes:
    """graph6 bytes: size header then the column-major upper triangle."""
    out = bytearray(_g6_size_bytes(g.n))
    acc = 0
    nbits = 0
    for i, j in _pairs(g.n):
        acc = acc << 1 | (g.adj[j] >> i & 1)
        nbits += 1
        if nbits == 6:
            out.append(acc + 63)
            acc = nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out)


def decode_graph6(data: bytes | str) -> Graph:
    """Inverse of :func:`encode_graph6`; accepts the optional text header."""
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip()
    if data.startswith(_G6_HEADER):
        data = data[len(_G6_HEADER):].strip()
    if not data:
        raise FormatError("empty graph6 input")
    for b in data:
        if not 63 <= b <= 126:
            raise FormatError(f"byte {b} outside graph6 range 63..126")
    if data[0] != 126:
        n = data[0] - 63
        body = data[1:]
    elif len(data) >= 2 and data[1] != 126:
        if len(data) < 4:
            raise FormatError("truncated graph6 size header")
        n = (data[1] - 63) << 12 | (data[2] - 63) << 6 | (data[3] - 63)
        body = data[4:]
    else:
        if len(data) < 8:
            raise FormatError("truncated graph6 size header")
        n = 0
        for b in data[2:8]:
            n = n << 6 | (b - 63)
        body = data[8:]
    npairs = n * (n - 1) // 2
    need = (npairs + 5) // 6
    if len(body) < need:
        raise FormatError(f"truncated graph6 body: need {need} bytes, got {len(body)}")
    if len(body) > need:
        raise FormatError("trailing bytes after graph6 body")
    adj = [0] * n
    pairs = _pairs(n)
    k = 0
    for b in body:
        group = b - 63
        for shift in (5, 4, 3, 2, 1, 0):
            bit = group >> shift & 1
            if k >= npairs:
                if bit:
                    raise FormatError("stray padding bit set beyond n(n-1)/2")
                continue
            if bit:
                i, j = pairs[k]
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, tuple(adj))


def graph_id(g: Graph) -> str:
    """Canonical instance id used in certificates: the graph6 string."""
    return encode_graph6(g).decode("ascii")


# ---------------------------------------------------------------------------
# plain edge-list format: "u v" per line, optional "n m" header
# ---------------------------------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"line {lineno}: expected two integers")
        try:
            pairs.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise FormatError(f"line {lineno}: expected two integers") from None
    if not pairs:
        raise FormatError("empty edge list (need at least a header line)")
    head_n, head_m = pairs[0]
    rest = pairs[1:]
    # "n m" header is optional; prefer the header reading whenever it is
    # self-consistent with the remaining lines.
    is_header = (
        head_m == len(rest)
        and head_n >= 1
        and all(0 <= u < head_n and 0 <= v < head_n for u, v in rest)
    )
    if is_header:
        n, edges = head_n, rest
    else:
        n, edges = max(max(u, v) for u, v in pairs) + 1, pairs
    try:
        return Graph.from_edges(n, edges)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def format_edge_list(g: Graph, header: bool = True) -> str:
    lines = [f"{g.n} {g.m}"] if header else []
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"
