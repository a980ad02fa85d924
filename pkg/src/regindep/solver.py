"""Exact solvers for k-independence restricted to degree classes.

The main solver is a branch-and-bound over adjacency bitmasks; the
exhaustive oracle shares none of its search machinery and exists purely to
cross-check it.  Per-class solves are memoized on the relabeled induced
subgraph, which makes the exhaustive small-graph sweeps cheap.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import ceil

from .errors import CapExceededError
from .graphs import Graph, bits, degree_profile, induced_subgraph


@dataclass(frozen=True)
class RegKIndepResult:
    """Value and witness for the regular k-independence number.

    ``per_class[j]`` is the best k-independent subset size inside the
    degree-j class; ``best_degree`` is the smallest j attaining the max.
    """

    value: int
    per_class: dict[int, int]
    best_degree: int | None
    witness: tuple[int, ...]

    def verify(self, g: Graph, k: int) -> bool:
        """Re-check the witness straight from the adjacency, independently
        of any search bookkeeping."""
        if self.value != (max(self.per_class.values()) if self.per_class else 0):
            return False
        if len(set(self.witness)) != len(self.witness):
            return False
        if len(self.witness) != self.value:
            return False
        if not self.witness:
            return self.value == 0
        if any(not 0 <= v < g.n for v in self.witness):
            return False
        if any(g.degree(v) != self.best_degree for v in self.witness):
            return False
        smask = 0
        for v in self.witness:
            smask |= 1 << v
        return all((g.adj[v] & smask).bit_count() <= k for v in self.witness)


# ---------------------------------------------------------------------------
# branch and bound
# ---------------------------------------------------------------------------

class _BudgetExhausted(Exception):
    pass


def _branch_and_bound(n: int, adj: tuple[int, ...], k: int,
                      max_nodes: int | None = None) -> tuple[int, int, bool]:
    """Max k-independent set of the mask graph.

    Returns (size, witness_mask, exact).  Vertices are branched in
    degree-descending order (index ascending on ties); candidates already
    infeasible against the chosen set are dropped, which also sharpens the
    |chosen| + |candidates| cardinality prune.
    """
    if n == 0:
        return 0, 0, True
    degs = [adj[v].bit_count() for v in range(n)]
    if max(degs) <= k:
        return n, (1 << n) - 1, True

    # greedy warm start, low degree first
    warm_mask = 0
    warm_sat = 0
    warm = 0
    for v in sorted(range(n), key=lambda v: (degs[v], v)):
        within = (adj[v] & warm_mask).bit_count()
        if within > k or adj[v] & warm_sat:
            continue
        gained = adj[v] & warm_mask
        warm_mask |= 1 << v
        warm += 1
        if within == k:
            warm_sat |= 1 << v
        for u in bits(gained):
            if (adj[u] & warm_mask).bit_count() == k:
                warm_sat |= 1 << u

    best = warm
    best_mask = warm_mask
    sat = [0] * n
    nodes = 0

    def dfs(cands: list[int], chosen: int, count: int, sat_mask: int) -> None:
        nonlocal best, best_mask, nodes
        nodes += 1
        if max_nodes is not None and nodes > max_nodes:
            raise _BudgetExhausted
        if count > best:
            best = count
            best_mask = chosen
        if not cands or count + len(cands) <= best:
            return
        v = cands[0]
        rest = cands[1:]
        within = (adj[v] & chosen).bit_count()
        if within <= k and not adj[v] & sat_mask:
            new_chosen = chosen | 1 << v
            new_sat = sat_mask
            touched = []
            for u in bits(adj[v] & chosen):
                sat[u] += 1
                touched.append(u)
                if sat[u] == k:
                    new_sat |= 1 << u
            sat[v] = within
            if within == k:
                new_sat |= 1 << v
            new_cands = [w for w in rest
                         if not adj[w] & new_sat
                         and (adj[w] & new_chosen).bit_count() <= k]
            dfs(new_cands, new_chosen, count + 1, new_sat)
            for u in touched:
                sat[u] -= 1
        dfs(rest, chosen, count, sat_mask)

    order = sorted(range(n), key=lambda v: (-degs[v], v))
    try:
        dfs(order, 0, 0, 0)
    except _BudgetExhausted:
        return best, best_mask, False
    return best, best_mask, True


@lru_cache(maxsize=1 << 18)
def _solve_exact_cached(n: int, adj: tuple[int, ...], k: int) -> tuple[int, int]:
    value, mask, _ = _branch_and_bound(n, adj, k)
    return value, mask


def alpha_k(g: Graph, k: int) -> tuple[int, tuple[int, ...]]:
    """Maximum size of a vertex set inducing max degree <= k, with witness."""
    if k < 0:
        raise ValueError("k must be >= 0")
    value, mask = _solve_exact_cached(g.n, g.adj, k)
    return value, tuple(bits(mask))


def alpha_kj(g: Graph, k: int, j: int) -> tuple[int, tuple[int, ...]]:
    """alpha_k restricted to the degree-j class; (0, ()) when the class is
    empty."""
    if k < 0:
        raise ValueError("k must be >= 0")
    verts = tuple(v for v in range(g.n) if g.adj[v].bit_count() == j)
    if not verts:
        return 0, ()
    if k >= j:
        # within-class degree cannot exceed the host degree j
        return len(verts), verts
    sub = induced_subgraph(g, verts)
    value, mask = _solve_exact_cached(sub.n, sub.adj, k)
    return value, tuple(verts[i] for i in bits(mask))


def alpha_kreg(g: Graph, k: int) -> RegKIndepResult:
    """Regular k-independence number: best k-independent subset of a single
    degree class, maximized over the classes present."""
    if k < 0:
        raise ValueError("k must be >= 0")
    prof = degree_profile(g)
    per_class: dict[int, int] = {}
    best_value = 0
    best_degree: int | None = None
    best_witness: tuple[int, ...] = ()
    for j in prof.classes:
        value, witness = alpha_kj(g, k, j)
        per_class[j] = value
        if value > best_value:
            best_value, best_degree, best_witness = value, j, witness
    return RegKIndepResult(best_value, per_class, best_degree, best_witness)


# ---------------------------------------------------------------------------
# independent oracle: plain subset enumeration, no shared search code
# ---------------------------------------------------------------------------

@lru_cache(maxsize=1 << 18)
def _oracle_class_value(rel_adj: tuple[int, ...], k: int) -> int:
    best = 0
    for sub in range(1 << len(rel_adj)):
        if sub.bit_count() <= best:
            continue
        if all((rel_adj[i] & sub).bit_count() <= k for i in bits(sub)):
            best = sub.bit_count()
    return best


def oracle_alpha_kreg(g: Graph, k: int, class_cap: int = 22) -> int:
    """Exhaustive reference value for alpha_kreg.

    Every subset of every degree class is enumerated and tested directly
    against the adjacency.  Classes larger than ``class_cap`` abort.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    by_degree: dict[int, list[int]] = {}
    for v in range(g.n):
        by_degree.setdefault(g.adj[v].bit_count(), []).append(v)
    best = 0
    for verts in by_degree.values():
        if len(verts) > class_cap:
            raise CapExceededError(
                f"degree class of size {len(verts)} exceeds cap {class_cap}")
        pos = {v: i for i, v in enumerate(verts)}
        rel = tuple(
            sum(1 << pos[u] for u in bits(g.adj[v]) if u in pos)
            for v in verts)
        best = max(best, _oracle_class_value(rel, k))
    return best


def repetition_number(g: Graph) -> int:
    """Largest number of vertices sharing one degree."""
    return degree_profile(g).rep


# ---------------------------------------------------------------------------
# exact defective coloring
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DefectiveColoring:
    k: int
    color_count: int
    assignment: tuple[int, ...]

    def verify(self, g: Graph) -> bool:
        masks: dict[int, int] = {}
        for v, c in enumerate(self.assignment):
            masks[c] = masks.get(c, 0) | 1 << v
        if len(masks) != self.color_count and g.n > 0:
            return False
        return all(
            (g.adj[v] & masks[c]).bit_count() <= self.k
            for v, c in enumerate(self.assignment))


@dataclass(frozen=True)
class ChiKInconclusive:
    """Budget ran out: chi_k is somewhere in [lower, upper]."""

    lower: int
    upper: int
    nodes_used: int


def _greedy_defective(n: int, adj: tuple[int, ...], k: int) -> tuple[int, list[int]]:
    order = sorted(range(n), key=lambda v: (-adj[v].bit_count(), v))
    color = [-1] * n
    class_masks: list[int] = []
    same = [0] * n
    for v in order:
        for c, cmask in enumerate(class_masks):
            inter = adj[v] & cmask
            if inter.bit_count() > k:
                continue
            if any(same[u] >= k for u in bits(inter)):
                continue
            color[v] = c
            class_masks[c] |= 1 << v
            same[v] = inter.bit_count()
            for u in bits(inter):
                same[u] += 1
            break
        else:
            color[v] = len(class_masks)
            class_masks.append(1 << v)
    return len(class_masks), color


def _greedy_clique(n: int, adj: tuple[int, ...]) -> int:
    if n == 0:
        return 0
    v0 = max(range(n), key=lambda v: (adj[v].bit_count(), -v))
    clique = 1 << v0
    common = adj[v0]
    while common:
        u = max(bits(common), key=lambda w: (adj[w].bit_count(), -w))
        clique |= 1 << u
        common &= adj[u]
    return clique.bit_count()


def _color_search(n: int, adj: tuple[int, ...], k: int, c: int,
                  order: list[int], budget: int) -> tuple[str, list[int] | None, int]:
    """Backtracking search for a defective coloring with exactly <= c colors.

    Returns ("found", assignment, nodes), ("infeasible", None, nodes) or
    ("budget", None, nodes).
    """
    color = [-1] * n
    same = [0] * n
    class_masks = [0] * c
    nodes = 0

    def dfs(idx: int, used: int) -> bool:
        nonlocal nodes
        if idx == n:
            return True
        v = order[idx]
        for col in range(min(used + 1, c)):
            nodes += 1
            if nodes > budget:
                raise _BudgetExhausted
            inter = adj[v] & class_masks[col]
            if inter.bit_count() > k:
                continue
            if any(same[u] >= k for u in bits(inter)):
                continue
            color[v] = col
            class_masks[col] |= 1 << v
            same[v] = inter.bit_count()
            for u in bits(inter):
                same[u] += 1
            if dfs(idx + 1, max(used, col + 1)):
                return True
            class_masks[col] &= ~(1 << v)
            for u in bits(inter):
                same[u] -= 1
            color[v] = -1
        return False

    try:
        found = dfs(0, 0)
    except _BudgetExhausted:
        return "budget", None, nodes
    return ("found", color, nodes) if found else ("infeasible", None, nodes)


def chi_k(g: Graph, k: int,
          budget: int = 10_000_000) -> DefectiveColoring | ChiKInconclusive:
    """Exact defective chromatic number, or a bracketing interval when the
    node budget runs out.

    Lower bounds come from the pigeonhole on alpha_k (when the alpha solve
    itself stays within budget) and from a greedy clique; the upper bound
    is a greedy defective coloring.  Color counts in between are settled by
    iterative-deepening backtracking.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    n = g.n
    if n == 0:
        return DefectiveColoring(k, 0, ())
    if max(g.degrees()) <= k:
        return DefectiveColoring(k, 1, (0,) * n)

    ub, greedy_assign = _greedy_defective(n, g.adj, k)
    lb = max(1, ceil(_greedy_clique(n, g.adj) / (k + 1)))
    a_value, _, a_exact = _branch_and_bound(n, g.adj, k,
                                            max_nodes=min(budget, 500_000))
    if a_exact:
        lb = max(lb, ceil(n / a_value))

    if lb >= ub:
        return DefectiveColoring(k, ub, tuple(greedy_assign))

    order = sorted(range(n), key=lambda v: (-g.adj[v].bit_count(), v))
    spent = 0
    for c in range(lb, ub):
        status, assign, nodes = _color_search(n, g.adj, k, c, order,
                                              budget - spent)
        spent += nodes
        if status == "found":
            return DefectiveColoring(k, c, tuple(assign))
        if status == "budget":
            return ChiKInconclusive(c, ub, spent)
    return DefectiveColoring(k, ub, tuple(greedy_assign))
