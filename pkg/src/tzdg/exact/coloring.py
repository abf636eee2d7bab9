"""Clique search and exact vertex / edge colouring by branch and bound."""

from __future__ import annotations

import numpy as np

from ..errors import DomainError, ResourceError
from ..graphs import Graph

DEFAULT_CHROMATIC_VERTICES = 64
DEFAULT_LINE_GRAPH_VERTICES = 400
DEFAULT_NODE_LIMIT = 2_000_000


def _bitsets(g: Graph) -> list[int]:
    out = []
    for row in g.neighbors:
        bits = 0
        for j in row.tolist():
            bits |= 1 << j
        out.append(bits)
    return out


def _members(bits: int):
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


def find_clique_of_size(g: Graph, k: int, node_limit: int = DEFAULT_NODE_LIMIT):
    """Labels of some k-clique (first in vertex order), or None if there is none."""
    if k < 1:
        raise DomainError("clique size must be >= 1")
    if k > g.order:
        return None
    nb = _bitsets(g)
    eligible = 0
    for i, d in enumerate(g.degrees.tolist()):
        if d >= k - 1:
            eligible |= 1 << i
    nodes = 0

    def extend(chosen, cand):
        nonlocal nodes
        nodes += 1
        if nodes > node_limit:
            raise ResourceError(f"clique search exceeded {node_limit} nodes")
        if len(chosen) == k:
            return chosen
        while cand:
            if len(chosen) + cand.bit_count() < k:
                return None
            v = (cand & -cand).bit_length() - 1
            cand &= ~(1 << v)
            found = extend(chosen + [v], cand & nb[v])
            if found:
                return found
        return None

    found = extend([], eligible)
    return None if found is None else [g.vertices[i] for i in found]


def greedy_clique(g: Graph) -> list[int]:
    """Largest clique among greedy extensions from every start vertex (indices)."""
    nb = _bitsets(g)
    deg = g.degrees.tolist()
    best: list[int] = [0] if g.order else []
    for start in range(g.order):
        clique = [start]
        cand = nb[start]
        while cand:
            v = max(_members(cand), key=lambda u: (deg[u], -u))
            clique.append(v)
            cand &= nb[v]
        if len(clique) > len(best):
            best = clique
    return sorted(best)


def dsatur_coloring(g: Graph) -> list[int]:
    n = g.order
    nb = _bitsets(g)
    colors = [-1] * n
    sat = [0] * n
    deg = g.degrees.tolist()
    for _ in range(n):
        v = max(
            (u for u in range(n) if colors[u] < 0),
            key=lambda u: (sat[u].bit_count(), deg[u], -u),
        )
        c = 0
        while sat[v] >> c & 1:
            c += 1
        colors[v] = c
        for w in _members(nb[v]):
            sat[w] |= 1 << c
    return colors


def chromatic_number_exact(
    g: Graph,
    max_vertices: int = DEFAULT_CHROMATIC_VERTICES,
    node_limit: int = DEFAULT_NODE_LIMIT,
    lower_bound: int = 0,
):
    """Exact chromatic number and a witness colouring {label: colour}.

    DSATUR branch and bound seeded with a greedy clique (lower) and a DSATUR colouring
    (upper). ``lower_bound`` lets callers supply a known valid bound.
    """
    n = g.order
    if n > max_vertices:
        raise ResourceError(f"{n} vertices exceeds exact colouring budget {max_vertices}")
    if n == 0:
        return 0, {}
    nb = _bitsets(g)
    deg = g.degrees.tolist()
    clique = greedy_clique(g)
    lb = max(len(clique), lower_bound, 1)
    best = dsatur_coloring(g)
    best_k = max(best) + 1
    if best_k > lb:
        colors = [-1] * n
        # pre-colour the clique: it needs distinct colours in every solution
        for c, v in enumerate(clique):
            colors[v] = c
        sat = [0] * n
        for v in clique:
            for w in _members(nb[v]):
                sat[w] |= 1 << colors[v]
        nodes = 0

        def search(used, uncolored):
            nonlocal best, best_k, nodes
            nodes += 1
            if nodes > node_limit:
                raise ResourceError(f"colouring search exceeded {node_limit} nodes")
            if not uncolored:
                best, best_k = colors.copy(), used
                return
            v = max(uncolored, key=lambda u: (sat[u].bit_count(), deg[u], -u))
            uncolored.remove(v)
            for c in range(used + 1):
                if c >= best_k - 1 or best_k == lb:
                    break
                if sat[v] >> c & 1:
                    continue
                colors[v] = c
                touched = []
                for w in _members(nb[v]):
                    if colors[w] < 0 and not sat[w] >> c & 1:
                        sat[w] |= 1 << c
                        touched.append(w)
                search(max(used, c + 1), uncolored)
                for w in touched:
                    sat[w] &= ~(1 << c)
                colors[v] = -1
            uncolored.add(v)

        search(len(clique), {u for u in range(n) if colors[u] < 0})
    coloring = {g.vertices[i]: c for i, c in enumerate(best)}
    return best_k, coloring


def line_graph(g: Graph) -> Graph:
    edges = [tuple(e) for e in g.edges.tolist()]
    k = len(edges)
    inc = np.zeros((k, g.order), dtype=bool)
    for idx, (i, j) in enumerate(edges):
        inc[idx, i] = inc[idx, j] = True
    adj = (inc.astype(np.int32) @ inc.T.astype(np.int32)) > 0
    np.fill_diagonal(adj, False)
    labels = [(g.vertices[i], g.vertices[j]) for i, j in edges]
    return Graph(labels, adj, name=f"L({g.name})")


def chromatic_index_exact(
    g: Graph,
    max_edges: int = DEFAULT_LINE_GRAPH_VERTICES,
    node_limit: int = DEFAULT_NODE_LIMIT,
):
    """Exact chromatic index and an edge colouring {(u, v): colour} via the line graph."""
    if g.size > max_edges:
        raise ResourceError(f"{g.size} edges exceeds exact edge-colouring budget {max_edges}")
    if g.size == 0:
        return 0, {}
    delta = int(g.degrees.max())
    k, coloring = chromatic_number_exact(
        line_graph(g), max_vertices=max_edges, node_limit=node_limit, lower_bound=delta
    )
    if k not in (delta, delta + 1):
        raise RuntimeError(f"chromatic index {k} violates Vizing bounds for max degree {delta}")
    return k, coloring
