"""Total zero-divisor graph, zero-divisor graph and total graph of a finite ring."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from math import gcd
from typing import Iterable, Sequence, Union

import numpy as np

from .errors import DomainError
from .ring import Label, Ring

TZDG = "total-zero-divisor"
ZDG = "zero-divisor"
TOTAL = "total"

_KIND_ALIASES = {"tzdg": TZDG, "zdg": ZDG, "total": TOTAL}
_CHUNK = 1 << 22


@dataclass(eq=False)
class Graph:
    """Simple undirected graph on labelled vertices with a dense adjacency matrix."""

    vertices: tuple
    adj: np.ndarray
    kind: str = "generic"
    name: str = "G"
    _index: dict = field(init=False, repr=False)

    def __post_init__(self):
        self.vertices = tuple(self.vertices)
        adj = np.array(self.adj, dtype=bool)
        if adj.shape != (len(self.vertices), len(self.vertices)):
            raise DomainError("adjacency shape does not match vertex count")
        if adj.diagonal().any() or (adj != adj.T).any():
            raise DomainError("adjacency must be symmetric without loops")
        adj.flags.writeable = False
        self.adj = adj
        self._index = {v: i for i, v in enumerate(self.vertices)}

    @classmethod
    def from_edges(cls, vertices: Sequence, edges: Iterable[tuple], kind="generic", name="G"):
        vertices = tuple(vertices)
        index = {v: i for i, v in enumerate(vertices)}
        adj = np.zeros((len(vertices), len(vertices)), dtype=bool)
        for a, b in edges:
            adj[index[a], index[b]] = adj[index[b], index[a]] = True
        return cls(vertices, adj, kind, name)

    @property
    def order(self) -> int:
        return len(self.vertices)

    @cached_property
    def degrees(self) -> np.ndarray:
        return self.adj.sum(axis=1)

    @property
    def size(self) -> int:
        return int(self.degrees.sum()) // 2

    @cached_property
    def neighbors(self) -> list[np.ndarray]:
        return [np.flatnonzero(row) for row in self.adj]

    @cached_property
    def edges(self) -> np.ndarray:
        """(size, 2) array of index pairs i<j, sorted lexicographically."""
        i, j = np.nonzero(np.triu(self.adj, 1))
        return np.stack([i, j], axis=1) if i.size else np.zeros((0, 2), dtype=np.int64)

    def index_of(self, v: Label) -> int:
        try:
            return self._index[v if not isinstance(v, list) else tuple(v)]
        except KeyError:
            raise DomainError(f"{v!r} is not a vertex of {self.name}") from None

    def indices_of(self, vs: Iterable[Label]) -> list[int]:
        return [self.index_of(v) for v in vs]

    def adjacent(self, u: Label, v: Label) -> bool:
        return bool(self.adj[self.index_of(u), self.index_of(v)])

    def neighbor_labels(self, v: Label) -> list:
        return [self.vertices[j] for j in self.neighbors[self.index_of(v)]]

    def __repr__(self):
        return f"Graph({self.name!r}, order={self.order}, size={self.size})"


# -- construction -----------------------------------------------------------


def _as_ring(spec: Union[Ring, int, str]) -> Ring:
    if isinstance(spec, Ring):
        return spec
    if isinstance(spec, str):
        return Ring.parse(spec)
    return Ring.zmod(int(spec))


def _dense_relation(ring: Ring, idx: np.ndarray, rule) -> np.ndarray:
    n = idx.size
    adj = np.zeros((n, n), dtype=bool)
    rows = max(1, _CHUNK // max(1, n))
    for start in range(0, n, rows):
        a = idx[start : start + rows]
        adj[start : start + rows] = rule(a[:, None], idx[None, :])
    np.fill_diagonal(adj, False)
    return adj


def _zm_total_zero_divisor_adjacency(m: int):
    zd = np.gcd(np.arange(m), m) > 1
    zd[0] = True
    verts = np.flatnonzero(zd)[1:]
    pos = np.full(m, -1, dtype=np.int64)
    pos[verts] = np.arange(verts.size)
    adj = np.zeros((verts.size, verts.size), dtype=bool)
    g = np.gcd(verts, m)
    for d in np.unique(g):
        members = verts[g == d]
        # v*w = 0 (mod m) iff (m / gcd(v, m)) divides w
        step = m // d
        partners = np.arange(step, m, step)
        ok = zd[(members[:, None] + partners[None, :]) % m]
        ok &= members[:, None] != partners[None, :]
        r, c = np.nonzero(ok)
        adj[pos[members[r]], pos[partners[c]]] = True
    return verts.tolist(), adj


def build_total_zero_divisor_graph(spec: Union[Ring, int, str]) -> Graph:
    """Vertices: nonzero zero-divisors; u ~ v iff uv = 0 and u + v is a zero-divisor."""
    ring = _as_ring(spec)
    name = f"tzdg_Z{ring}"
    if ring.is_cyclic:
        verts, adj = _zm_total_zero_divisor_adjacency(ring.order)
        return Graph(verts, adj, TZDG, name)
    zd = ring.zero_divisor_mask
    idx = np.flatnonzero(zd)[1:]

    def rule(a, b):
        return (ring.mul(a, b) == 0) & zd[ring.add(a, b)]

    return Graph(ring.labels(idx), _dense_relation(ring, idx, rule), TZDG, name)


def build_total_zero_divisor_graph_dense(spec: Union[Ring, int, str]) -> Graph:
    """Generic definition-scan builder, also for Z_m (used to cross-check the fast path)."""
    ring = _as_ring(spec)
    ring.check_budget()
    zd = ring.zero_divisor_mask
    idx = np.flatnonzero(zd)[1:]

    def rule(a, b):
        return (ring.mul(a, b) == 0) & zd[ring.add(a, b)]

    return Graph(ring.labels(idx), _dense_relation(ring, idx, rule), TZDG, f"tzdg_Z{ring}")


def build_zero_divisor_graph(spec: Union[Ring, int, str]) -> Graph:
    ring = _as_ring(spec)
    ring.check_budget()
    idx = np.flatnonzero(ring.zero_divisor_mask)[1:]

    def rule(a, b):
        return ring.mul(a, b) == 0

    return Graph(ring.labels(idx), _dense_relation(ring, idx, rule), ZDG, f"zdg_Z{ring}")


def build_total_graph(spec: Union[Ring, int, str]) -> Graph:
    ring = _as_ring(spec)
    ring.check_budget()
    zd = ring.zero_divisor_mask
    idx = np.arange(ring.order)

    def rule(a, b):
        return zd[ring.add(a, b)]

    return Graph(ring.labels(idx), _dense_relation(ring, idx, rule), TOTAL, f"total_Z{ring}")


def build_graph(kind: str, spec: Union[Ring, int, str]) -> Graph:
    kind = _KIND_ALIASES.get(kind, kind)
    builders = {
        TZDG: build_total_zero_divisor_graph,
        ZDG: build_zero_divisor_graph,
        TOTAL: build_total_graph,
    }
    if kind not in builders:
        raise DomainError(f"unknown graph kind {kind!r}")
    return builders[kind](spec)


# -- derived graphs ----------------------------------------------------------


def subgraph_induced(g: Graph, vs: Iterable[Label]) -> Graph:
    keep = sorted(set(g.indices_of(vs)))
    return Graph(
        [g.vertices[i] for i in keep], g.adj[np.ix_(keep, keep)], g.kind, g.name + "_sub"
    )


def remove_vertices(g: Graph, vs: Iterable[Label]) -> Graph:
    drop = set(g.indices_of(vs))
    return subgraph_induced(g, [v for i, v in enumerate(g.vertices) if i not in drop])


def complete_graph(k: int, name=None) -> Graph:
    adj = ~np.eye(k, dtype=bool)
    return Graph(range(k), adj, name=name or f"K{k}")


def path_graph(k: int) -> Graph:
    return Graph.from_edges(range(k), [(i, i + 1) for i in range(k - 1)], name=f"P{k}")


def star_graph(leaves: int, isolated: int = 0) -> Graph:
    """K_{1,leaves} plus some isolated vertices."""
    k = 1 + leaves + isolated
    return Graph.from_edges(range(k), [(0, i) for i in range(1, leaves + 1)], name="star")


def empty_graph(k: int) -> Graph:
    return Graph(range(k), np.zeros((k, k), dtype=bool), name=f"{k}K1")


# -- export -------------------------------------------------------------------


def _dot_label(v) -> str:
    return "|".join(map(str, v)) if isinstance(v, tuple) else str(v)


def export_dot(g: Graph, name: str | None = None) -> str:
    lines = [f'graph "{name or g.name}" {{']
    for i in np.flatnonzero(g.degrees == 0):
        lines.append(f'  "{_dot_label(g.vertices[i])}";')
    for i, j in g.edges:
        lines.append(f'  "{_dot_label(g.vertices[i])}" -- "{_dot_label(g.vertices[j])}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_json(g: Graph) -> str:
    doc = {
        "kind": g.kind,
        "vertex_labels": [list(v) if isinstance(v, tuple) else v for v in g.vertices],
        "edges": g.edges.tolist(),
    }
    return json.dumps(doc, separators=(",", ":")) + "\n"
