"""Connectivity, distances, girth, degrees and twin classes by direct graph search."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, asdict
from typing import Union

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components, shortest_path

from ..graphs import Graph

INFINITE = "infinite"
UNDEFINED = "undefined"
ACYCLIC = "acyclic"


@dataclass(frozen=True)
class Connectivity:
    is_connected: bool
    component_count: int
    components: tuple[tuple[int, ...], ...]


def connectivity(g: Graph) -> Connectivity:
    """Partition into components (vertex indices, in vertex order).

    The empty graph is reported as not connected with zero components.
    """
    n = g.order
    if n == 0:
        return Connectivity(False, 0, ())
    count, labels = connected_components(csr_matrix(g.adj), directed=False)
    # number components by their smallest vertex
    _, first = np.unique(labels, return_index=True)
    order = np.argsort(first)
    components = tuple(tuple(np.flatnonzero(labels == c).tolist()) for c in order)
    return Connectivity(count == 1, int(count), components)


def distance_matrix(g: Graph) -> np.ndarray:
    """All-pairs BFS distances; -1 = unreachable."""
    n = g.order
    if n == 0:
        return np.full((0, 0), -1, dtype=np.int64)
    d = shortest_path(csr_matrix(g.adj), method="D", directed=False, unweighted=True)
    out = np.full((n, n), -1, dtype=np.int64)
    finite = np.isfinite(d)
    out[finite] = d[finite].astype(np.int64)
    return out


def diameter(g: Graph, dist: np.ndarray | None = None) -> Union[int, str]:
    if g.order < 2:
        return UNDEFINED
    dist = distance_matrix(g) if dist is None else dist
    if (dist < 0).any():
        return INFINITE
    return int(dist.max())


def has_triangle(g: Graph) -> bool:
    if g.size < 3:
        return False
    # an edge u-w with w a later neighbour closes a triangle iff they share a neighbour
    for u, w in g.edges.tolist():
        if (g.adj[u] & g.adj[w]).any():
            return True
    return False


def girth(g: Graph) -> Union[int, str]:
    """Length of a shortest cycle, or ``ACYCLIC``."""
    if has_triangle(g):
        return 3
    if g.size == g.order - connectivity(g).component_count:
        return ACYCLIC
    best = None
    for root in range(g.order):
        depth = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if best is not None and 2 * depth[u] + 1 >= best:
                break
            for w in g.neighbors[u]:
                w = int(w)
                if w not in depth:
                    depth[w] = depth[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    length = depth[u] + depth[w] + 1
                    if best is None or length < best:
                        best = length
    return best


def is_regular(g: Graph) -> bool:
    return g.order > 0 and int(g.degrees.min()) == int(g.degrees.max())


def is_complete(g: Graph) -> bool:
    return g.order > 0 and g.size == g.order * (g.order - 1) // 2


def is_eulerian(g: Graph) -> bool:
    """At least one edge, connected on the whole vertex set, all degrees even."""
    if g.size == 0:
        return False
    return connectivity(g).is_connected and not (g.degrees % 2).any()


@dataclass(frozen=True)
class ExactInvariants:
    is_connected: bool
    component_count: int
    diameter: Union[int, str]
    girth: Union[int, str]
    degree_sequence: tuple[int, ...]
    max_degree: int | None
    min_degree: int | None
    is_eulerian: bool
    is_regular: bool
    is_complete: bool

    def as_dict(self):
        d = asdict(self)
        d["degree_sequence"] = list(self.degree_sequence)
        return d


def exact_invariants(g: Graph, dist: np.ndarray | None = None) -> ExactInvariants:
    conn = connectivity(g)
    degs = tuple(sorted((int(d) for d in g.degrees), reverse=True))
    if conn.is_connected:
        diam = diameter(g, dist)
    else:
        diam = UNDEFINED if g.order < 2 else INFINITE
    return ExactInvariants(
        is_connected=conn.is_connected,
        component_count=conn.component_count,
        diameter=diam,
        girth=girth(g),
        degree_sequence=degs,
        max_degree=degs[0] if degs else None,
        min_degree=degs[-1] if degs else None,
        is_eulerian=is_eulerian(g),
        is_regular=is_regular(g),
        is_complete=is_complete(g),
    )


def twin_classes(g: Graph) -> list[list[int]]:
    """Maximal classes of vertices a, b with N(a) - {b} == N(b) - {a}.

    Non-adjacent twins share their open neighbourhood and adjacent twins share their
    closed one, so the classes are the groups of equal open rows merged with the groups
    of equal closed rows. Raises if a vertex has twins of both kinds, which would
    break transitivity.
    """
    n = g.order
    open_rows = np.packbits(g.adj, axis=1)
    closed_rows = np.packbits(g.adj | np.eye(n, dtype=bool), axis=1)
    groups: dict[tuple, list[int]] = {}
    for i in range(n):
        groups.setdefault(("o", open_rows[i].tobytes()), []).append(i)
        groups.setdefault(("c", closed_rows[i].tobytes()), []).append(i)
    owner = {}
    classes = []
    for members in groups.values():
        if len(members) < 2:
            continue
        for v in members:
            if v in owner:
                raise RuntimeError(
                    f"twin relation not transitive at vertex {g.vertices[v]!r}"
                )
            owner[v] = len(classes)
        classes.append(members)
    classes.extend([i] for i in range(n) if i not in owner)
    return sorted((sorted(c) for c in classes), key=lambda c: c[0])


def are_twins(g: Graph, a: int, b: int) -> bool:
    ra, rb = g.adj[a].copy(), g.adj[b].copy()
    ra[b] = rb[a] = False
    return bool((ra == rb).all())
