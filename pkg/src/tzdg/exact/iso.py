"""Graph isomorphism: invariant fingerprint, colour refinement, then backtracking."""

from __future__ import annotations

import numpy as np

from ..errors import ResourceError
from ..graphs import Graph
from .structure import connectivity, girth

DEFAULT_ISO_NODES = 1_000_000


def fingerprint(g: Graph) -> tuple:
    comps = sorted(len(c) for c in connectivity(g).components)
    return (
        g.order,
        g.size,
        tuple(sorted(g.degrees.tolist())),
        girth(g),
        tuple(comps),
    )


def _refine(graphs: list[Graph]) -> list[np.ndarray]:
    """Joint 1-dimensional Weisfeiler-Leman colours, comparable across the graphs."""
    colors = [g.degrees.astype(np.int64) for g in graphs]
    while True:
        signatures = []
        for g, c in zip(graphs, colors):
            signatures.append(
                [(int(c[i]), tuple(sorted(c[g.neighbors[i]].tolist()))) for i in range(g.order)]
            )
        palette = {s: k for k, s in enumerate(sorted({s for sig in signatures for s in sig}))}
        new = [np.array([palette[s] for s in sig], dtype=np.int64) for sig in signatures]
        if sum(len(np.unique(c)) for c in new) == sum(len(np.unique(c)) for c in colors):
            return new
        colors = new


def are_isomorphic(g1: Graph, g2: Graph, node_limit: int = DEFAULT_ISO_NODES) -> bool:
    if fingerprint(g1) != fingerprint(g2):
        return False
    return find_isomorphism(g1, g2, node_limit) is not None


def find_isomorphism(g1: Graph, g2: Graph, node_limit: int = DEFAULT_ISO_NODES):
    """A vertex map {label1: label2} preserving adjacency, or None."""
    n = g1.order
    if n != g2.order or g1.size != g2.size:
        return None
    if n == 0:
        return {}
    c1, c2 = _refine([g1, g2])
    if sorted(c1.tolist()) != sorted(c2.tolist()):
        return None

    # map vertices in BFS order so each new vertex is constrained by mapped neighbours
    order: list[int] = []
    placed = np.zeros(n, dtype=bool)
    for root in sorted(range(n), key=lambda v: (np.count_nonzero(c1 == c1[v]), v)):
        if placed[root]:
            continue
        queue = [root]
        placed[root] = True
        while queue:
            v = queue.pop(0)
            order.append(v)
            for w in g1.neighbors[v].tolist():
                if not placed[w]:
                    placed[w] = True
                    queue.append(w)

    candidates = [np.flatnonzero(c2 == c1[v]) for v in order]
    mapping = np.full(n, -1, dtype=np.int64)
    used = np.zeros(n, dtype=bool)
    # explicit stack of candidate positions avoids deep recursion on large graphs
    pos = [0] * n
    depth = 0
    nodes = 0
    while 0 <= depth < n:
        v = order[depth]
        if mapping[v] >= 0:
            used[mapping[v]] = False
            mapping[v] = -1
        prev = np.array(order[:depth], dtype=np.int64)
        targets = mapping[prev]
        cands = candidates[depth]
        advanced = False
        while pos[depth] < cands.size:
            w = int(cands[pos[depth]])
            pos[depth] += 1
            if used[w]:
                continue
            nodes += 1
            if nodes > node_limit:
                raise ResourceError(f"isomorphism search exceeded {node_limit} nodes")
            if prev.size and (g1.adj[v, prev] != g2.adj[w, targets]).any():
                continue
            mapping[v] = w
            used[w] = True
            advanced = True
            break
        if advanced:
            depth += 1
            if depth < n:
                pos[depth] = 0
        else:
            pos[depth] = 0
            depth -= 1
    if depth < 0:
        return None
    return {g1.vertices[i]: g2.vertices[int(mapping[i])] for i in range(n)}
