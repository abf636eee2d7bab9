"""Exhaustive searches: domination number, metric dimension, Hamiltonian cycles."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_bipartite_matching

from ..errors import DomainError, ResourceError
from ..graphs import Graph
from .structure import connectivity, distance_matrix, twin_classes

DEFAULT_DOMINATION_SUBSETS = 1_000_000
DEFAULT_METRIC_CANDIDATES = 1_000_000
DEFAULT_HAMILTONIAN_VERTICES = 40
DEFAULT_HAMILTONIAN_NODES = 1_000_000


# -- domination ---------------------------------------------------------------


def _closed_bitsets(g: Graph) -> list[int]:
    out = []
    for i, row in enumerate(g.neighbors):
        bits = 1 << i
        for j in row.tolist():
            bits |= 1 << j
        out.append(bits)
    return out


def is_dominating(g: Graph, idx) -> bool:
    covered = np.zeros(g.order, dtype=bool)
    for i in idx:
        covered |= g.adj[i]
        covered[i] = True
    return bool(covered.all())


def domination_number_exact(
    g: Graph, upper_hint: int, max_subsets: int = DEFAULT_DOMINATION_SUBSETS
):
    """Smallest dominating set, searching sizes 0, 1, ..., upper_hint in order.

    Returns (gamma, witness labels); the first witness in lexicographic index order.
    """
    if upper_hint < 1:
        raise DomainError("upper_hint must be >= 1")
    n = g.order
    if n == 0:
        return 0, []
    closed = _closed_bitsets(g)
    full = (1 << n) - 1
    for k in range(1, min(upper_hint, n) + 1):
        if comb(n, k) > max_subsets:
            raise ResourceError(f"C({n}, {k}) subsets exceeds domination budget {max_subsets}")
        for subset in combinations(range(n), k):
            cover = 0
            for i in subset:
                cover |= closed[i]
            if cover == full:
                return k, [g.vertices[i] for i in subset]
    raise DomainError(f"no dominating set with at most {upper_hint} vertices")


def has_dominating_set_of_size(g: Graph, k: int, max_subsets: int = DEFAULT_DOMINATION_SUBSETS):
    """Exhaustively decide whether some k-subset dominates (k = 0 only for empty graphs)."""
    n = g.order
    if k <= 0:
        return n == 0
    if k >= n:
        return True
    if comb(n, k) > max_subsets:
        raise ResourceError(f"C({n}, {k}) subsets exceeds domination budget {max_subsets}")
    closed = _closed_bitsets(g)
    full = (1 << n) - 1
    for subset in combinations(range(n), k):
        cover = 0
        for i in subset:
            cover |= closed[i]
        if cover == full:
            return True
    return False


# -- metric dimension ---------------------------------------------------------


def resolves(dist: np.ndarray, idx) -> bool:
    """True if the distance vectors to the vertices ``idx`` are pairwise distinct."""
    n = dist.shape[0]
    if n <= 1:
        return True
    idx = list(idx)
    if not idx:
        return False
    vectors = np.ascontiguousarray(dist[:, idx])
    return len({row.tobytes() for row in vectors}) == n


@dataclass(frozen=True)
class MetricDimension:
    dimension: int
    resolving_set: list
    twin_class_count: int
    candidates_checked: int


def metric_dimension_exact(
    g: Graph,
    max_candidates: int = DEFAULT_METRIC_CANDIDATES,
    dist: np.ndarray | None = None,
) -> MetricDimension:
    """Exact metric dimension of a connected graph.

    The complement of a resolving set holds at most one vertex per twin class, and
    swapping two twins is an automorphism, so it suffices to try sets of classes
    (largest first) with their first vertex removed.
    """
    if not connectivity(g).is_connected:
        raise DomainError("metric dimension needs a connected graph")
    dist = distance_matrix(g) if dist is None else dist
    classes = twin_classes(g)
    reps = [c[0] for c in classes]
    n = g.order
    checked = 0
    for k in range(len(classes), -1, -1):
        for chosen in combinations(reps, k):
            checked += 1
            if checked > max_candidates:
                raise ResourceError(
                    f"metric dimension search exceeded {max_candidates} candidates"
                )
            drop = set(chosen)
            basis = [i for i in range(n) if i not in drop]
            if resolves(dist, basis):
                return MetricDimension(
                    n - k, [g.vertices[i] for i in basis], len(classes), checked
                )
    raise RuntimeError("the full vertex set always resolves")


# -- Hamiltonian cycles --------------------------------------------------------


@dataclass(frozen=True)
class HamiltonResult:
    hamiltonian: bool
    cycle: list | None
    note: str
    nodes: int = 0

    def __bool__(self):
        return self.hamiltonian


def _successor_matching_exists(adj: np.ndarray, left: np.ndarray, right: np.ndarray) -> bool:
    """Perfect matching between ``left`` (needs a successor) and ``right`` (needs a predecessor)."""
    if left.size != right.size:
        return False
    if left.size == 0:
        return True
    sub = csr_matrix(adj[np.ix_(left, right)])
    match = maximum_bipartite_matching(sub, perm_type="column")
    return bool((match >= 0).all())


def is_hamiltonian_exact(
    g: Graph,
    max_vertices: int = DEFAULT_HAMILTONIAN_VERTICES,
    node_limit: int = DEFAULT_HAMILTONIAN_NODES,
) -> HamiltonResult:
    """Backtracking Hamiltonian-cycle search.

    Necessary conditions (connectivity, minimum degree 2, a cycle cover of the
    bipartite double cover) are tried before the vertex budget applies: they refute
    without search. Inside the search every node re-checks degree, connectivity and
    successor-matching feasibility of the unvisited remainder.
    """
    n = g.order
    if n < 3:
        return HamiltonResult(False, None, "fewer than 3 vertices")
    if not connectivity(g).is_connected:
        return HamiltonResult(False, None, "disconnected")
    if int(g.degrees.min()) < 2:
        return HamiltonResult(False, None, "vertex of degree < 2")
    everyone = np.arange(n)
    if not _successor_matching_exists(g.adj, everyone, everyone):
        return HamiltonResult(False, None, "no cycle cover (Hall condition fails)")
    if n > max_vertices:
        raise ResourceError(f"{n} vertices exceeds Hamiltonian budget {max_vertices}")

    adj = g.adj
    nbrs = [row.tolist() for row in g.neighbors]
    start = 0
    path = [start]
    visited = np.zeros(n, dtype=bool)
    visited[start] = True
    nodes = 0

    def feasible(head: int) -> bool:
        rest = np.flatnonzero(~visited)
        if rest.size == 0:
            return bool(adj[head, start])
        ends = [head, start] if head != start else [start]
        avail = adj[np.ix_(rest, rest)].sum(axis=1)
        for e in ends:
            avail = avail + adj[rest, e]
        if (avail < 2).any():
            return False
        if not adj[head, rest].any() or not adj[start, rest].any():
            return False
        # unvisited vertices must stay connected to each other
        seen = np.zeros(rest.size, dtype=bool)
        seen[0] = True
        frontier = np.array([0])
        sub = adj[np.ix_(rest, rest)]
        while frontier.size:
            nxt = sub[frontier].any(axis=0) & ~seen
            seen |= nxt
            frontier = np.flatnonzero(nxt)
        if not seen.all():
            return False
        left = np.concatenate([[head], rest])
        right = np.concatenate([rest, [start]])
        return _successor_matching_exists(adj, left, right)

    def extend(head: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > node_limit:
            raise ResourceError(f"Hamiltonian search exceeded {node_limit} nodes")
        if len(path) == n:
            return bool(adj[head, start])
        if not feasible(head):
            return False
        options = [w for w in nbrs[head] if not visited[w]]
        options.sort(key=lambda w: (int((adj[w] & ~visited).sum()), w))
        for w in options:
            visited[w] = True
            path.append(w)
            if extend(w):
                return True
            path.pop()
            visited[w] = False
        return False

    if extend(start):
        return HamiltonResult(True, [g.vertices[i] for i in path], "cycle found", nodes)
    return HamiltonResult(False, None, "search exhausted", nodes)


def verify_hamiltonian_cycle(g: Graph, cycle) -> bool:
    if cycle is None or len(cycle) != g.order or len(set(cycle)) != g.order:
        return False
    idx = g.indices_of(cycle)
    return all(g.adj[idx[i], idx[(i + 1) % len(idx)]] for i in range(len(idx)))
