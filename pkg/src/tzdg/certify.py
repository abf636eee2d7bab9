"""Constructive witnesses for the invariants of the total zero-divisor graph of Z_m.

Constructions work on residues directly; ``verify_certificate`` checks a certificate
against an independently built graph and never consults the predictors.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd, prod
from typing import Any

import numpy as np

from .arith import FactoredModulus, factor, valuation
from .errors import DomainError
from .exact.structure import connectivity, distance_matrix
from .exact.search import resolves
from .graphs import Graph, build_total_zero_divisor_graph, remove_vertices

CLIQUE = "clique"
COLORING = "coloring"
EDGE_COLORING = "edge_coloring"
DOMINATING_SET = "dominating_set"
RESOLVING_SET = "resolving_set"
HAM_OBSTRUCTION = "ham_obstruction"
DIVISOR_NORMAL_FORM = "divisor_normal_form"


@dataclass
class Certificate:
    kind: str
    subject: Any
    payload: Any
    verified: bool | None = None
    detail: str = ""
    meta: dict = field(default_factory=dict)

    @property
    def size(self) -> int:
        if self.kind in (COLORING, EDGE_COLORING):
            return len({entry[-1] for entry in self.payload})
        if self.kind == HAM_OBSTRUCTION:
            return len(self.payload["S"])
        return len(self.payload)

    def to_json(self) -> dict:
        out = {
            "kind": self.kind,
            "m_or_spec": self.subject,
            "payload": self.payload,
            "verified": self.verified,
        }
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass(frozen=True)
class Verdict:
    ok: bool
    detail: str = ""

    def __bool__(self):
        return self.ok


def _fm(m) -> FactoredModulus:
    return m if isinstance(m, FactoredModulus) else factor(m)


def _valuations(fm: FactoredModulus, x: int) -> list[int]:
    return [valuation(x % fm.m, p, e) for p, e in fm.items()]


def _is_vertex(fm: FactoredModulus, x: int) -> bool:
    x %= fm.m
    return x != 0 and gcd(x, fm.m) > 1


def _vertices(fm: FactoredModulus) -> list[int]:
    return [x for x in range(1, fm.m) if gcd(x, fm.m) > 1]


def _require_connected(fm: FactoredModulus):
    if fm.is_prime or any(e < 2 for e in fm.exponents):
        raise DomainError(f"the graph of Z_{fm.m} is not connected")


# -- associated divisors -------------------------------------------------------


def associated_divisor(fm, a: int) -> tuple[int, int]:
    """(v, u) with v | m, u a unit and a = v*u (mod m)."""
    fm = _fm(fm)
    m = fm.m
    if not 1 <= a < m:
        raise DomainError(f"need 1 <= a < m, got a={a}")
    ell = []
    s = a
    for p in fm.primes:
        k = 0
        while s % p == 0:
            s //= p
            k += 1
        ell.append(k)
    big = [i for i, (l, e) in enumerate(zip(ell, fm.exponents)) if l > e]
    small = [j for j in range(fm.n) if j not in big]
    v = prod(fm.primes[i] ** fm.exponents[i] for i in big) * prod(
        fm.primes[j] ** ell[j] for j in small
    )
    u = prod(fm.primes[i] ** (ell[i] - fm.exponents[i]) for i in big) * s - prod(
        fm.primes[j] ** (fm.exponents[j] - ell[j] + 1) for j in small
    )
    # any unit congruent to u mod m/v works; report the smallest (1 when a divides m)
    step = m // v
    u0 = u % step
    while gcd(u0, m) != 1:
        u0 += step
    return v, u0


def divisor_normal_form(fm, a: int) -> Certificate:
    fm = _fm(fm)
    v, u = associated_divisor(fm, a)
    return Certificate(DIVISOR_NORMAL_FORM, fm.m, {"a": a, "v": v, "u": u})


def verify_divisor_normal_form(c: Certificate) -> Verdict:
    m = c.subject
    a, v, u = c.payload["a"], c.payload["v"], c.payload["u"]
    if m % v:
        return Verdict(False, f"{v} does not divide {m}")
    if gcd(u, m) != 1:
        return Verdict(False, f"{u} is not a unit mod {m}")
    if (v * u - a) % m:
        return Verdict(False, f"{v}*{u} != {a} mod {m}")
    return Verdict(True)


# -- cliques and colourings ------------------------------------------------------


def _ceil_half_product(fm: FactoredModulus) -> int:
    return prod(p ** ((e + 1) // 2) for p, e in fm.items())


def _odd_indices(fm: FactoredModulus) -> list[int]:
    return [i for i, e in enumerate(fm.exponents) if e % 2]


def _chromatic_in_scope(fm: FactoredModulus):
    if fm.is_prime or all(e == 1 for e in fm.exponents):
        raise DomainError(f"no colouring construction for squarefree m={fm.m}")


def half_exponent_clique(fm) -> Certificate:
    """Nonzero multiples of prod p_i^ceil(m_i/2); a clique when the graph is connected."""
    fm = _fm(fm)
    _require_connected(fm)
    c = _ceil_half_product(fm)
    return Certificate(CLIQUE, fm.m, list(range(c, fm.m, c)))


def chromatic_lower_clique(fm) -> Certificate:
    """The half-exponent clique plus one vertex c/p for each odd-exponent prime p.

    Its size matches the colouring from ``construct_coloring``.
    """
    fm = _fm(fm)
    _chromatic_in_scope(fm)
    c = _ceil_half_product(fm)
    extra = [c // fm.primes[k] for k in _odd_indices(fm)]
    return Certificate(CLIQUE, fm.m, list(range(c, fm.m, c)) + extra)


def construct_coloring(fm) -> Certificate:
    """Proper colouring with prod p_i^floor(m_i/2) + o(m) - 1 colours.

    Multiples r*c of c = prod p_i^ceil(m_i/2) get colour r-1. For the j-th odd-exponent
    prime p, the not yet coloured vertices with p-valuation below ceil(e/2) form an
    independent set and share one new colour. Every remaining vertex has some
    even-exponent prime p with valuation below e/2; it copies the colour of m/p^(e/2),
    using the smallest such prime.
    """
    fm = _fm(fm)
    _chromatic_in_scope(fm)
    m = fm.m
    c = _ceil_half_product(fm)
    size_a0 = m // c - 1
    ceil_half = [(e + 1) // 2 for e in fm.exponents]
    odd = _odd_indices(fm)
    colors = []
    for x in _vertices(fm):
        val = _valuations(fm, x)
        if all(v >= h for v, h in zip(val, ceil_half)):
            colors.append([x, x // c - 1])
            continue
        for j, k in enumerate(odd):
            if val[k] < ceil_half[k]:
                colors.append([x, size_a0 + j])
                break
        else:
            i = next(
                i
                for i, e in enumerate(fm.exponents)
                if e % 2 == 0 and val[i] < e // 2
            )
            anchor = m // fm.primes[i] ** (fm.exponents[i] // 2)
            colors.append([x, anchor // c - 1])
    # drop unused colour indices so the count equals the number of colours used
    used = sorted({col for _, col in colors})
    relabel = {col: k for k, col in enumerate(used)}
    payload = [[x, relabel[col]] for x, col in colors]
    return Certificate(COLORING, m, payload)


def construct_edge_coloring(fm, g: Graph | None = None) -> Certificate:
    """Proper edge colouring with max-degree many colours (connected, not complete).

    Edges at q = m/p1 come first, then the remaining edges at s*q for s = 2..p1-1, then
    everything else; each edge takes the lowest colour free at both ends. When no such
    colour exists the edge is placed by swapping a two-coloured alternating path.
    """
    fm = _fm(fm)
    _require_connected(fm)
    if fm.n == 1 and fm.exponents[0] == 2:
        raise DomainError(f"the graph of Z_{fm.m} is complete")
    g = build_total_zero_divisor_graph(fm.m) if g is None else g
    m, p1 = fm.m, fm.p1
    q = m // p1
    k = int(g.degrees.max())
    at = [dict() for _ in range(g.order)]  # vertex -> {colour: neighbour}

    def free(v):
        return [col for col in range(k) if col not in at[v]]

    def place(u, v, col):
        at[u][col] = v
        at[v][col] = u

    def insert(u, v):
        fu, fv = free(u), free(v)
        common = set(fu) & set(fv)
        if common:
            place(u, v, min(common))
            return
        for a in fu:
            for b in fv:
                # walk the a/b alternating path starting at v along colour a
                path, cur, col = [v], v, a
                while col in at[cur]:
                    cur = at[cur][col]
                    path.append(cur)
                    col = b if col == a else a
                if path[-1] == u:
                    continue
                edges = list(zip(path, path[1:]))
                cols = [a if i % 2 == 0 else b for i in range(len(edges))]
                for (x, y), col in zip(edges, cols):
                    del at[x][col]
                    del at[y][col]
                for (x, y), col in zip(edges, cols):
                    place(x, y, b if col == a else a)
                place(u, v, a)
                return
        raise RuntimeError(f"could not place edge {g.vertices[u]}-{g.vertices[v]} with {k} colours")

    done = set()
    order = []
    for s in range(1, p1):
        hub = g.index_of(s * q)
        for w in g.neighbors[hub].tolist():
            e = (min(hub, w), max(hub, w))
            if e not in done:
                done.add(e)
                order.append(e)
    for i, j in g.edges.tolist():
        if (i, j) not in done:
            order.append((i, j))
    for u, v in order:
        insert(u, v)
    payload = []
    for u in range(g.order):
        for col, v in sorted(at[u].items()):
            if u < v:
                payload.append([g.vertices[u], g.vertices[v], col])
    payload.sort()
    return Certificate(EDGE_COLORING, m, payload)


# -- domination, resolving sets, Hamiltonicity --------------------------------------


def canonical_dominating_set(fm) -> Certificate:
    fm = _fm(fm)
    _require_connected(fm)
    return Certificate(DOMINATING_SET, fm.m, [fm.m // p for p in fm.primes])


def construct_resolving_set(fm) -> Certificate:
    """All vertices that are not divisors of m, plus p_i^{m_i} when n >= 2."""
    fm = _fm(fm)
    _require_connected(fm)
    m = fm.m
    chosen = {x for x in _vertices(fm) if m % x}
    if fm.n >= 2:
        chosen |= {p**e for p, e in fm.items()}
    return Certificate(RESOLVING_SET, m, sorted(chosen))


def hamiltonian_obstruction(fm) -> Certificate:
    """S = associates of m/p1, T = p1*s for units s < m/p1; every T-vertex sees only S."""
    fm = _fm(fm)
    _require_connected(fm)
    if fm.n == 1 and fm.exponents[0] == 2:
        raise DomainError(f"the graph of Z_{fm.m} is complete")
    m, p1 = fm.m, fm.p1
    q = m // p1
    S = [r * q for r in range(1, p1)]
    T = [p1 * s for s in range(1, q) if gcd(s, m) == 1]
    return Certificate(HAM_OBSTRUCTION, m, {"S": S, "T": T})


# -- verification --------------------------------------------------------------------


def _check_labels(g: Graph, labels) -> str | None:
    for v in labels:
        try:
            g.index_of(v)
        except DomainError:
            return f"{v!r} is not a vertex"
    return None


def verify_certificate(g: Graph, c: Certificate, dist: np.ndarray | None = None) -> Verdict:
    kind = c.kind
    if kind == CLIQUE:
        bad = _check_labels(g, c.payload)
        if bad:
            return Verdict(False, bad)
        if len(set(c.payload)) != len(c.payload):
            return Verdict(False, "repeated vertex")
        idx = g.indices_of(c.payload)
        sub = g.adj[np.ix_(idx, idx)] | np.eye(len(idx), dtype=bool)
        if not sub.all():
            a, b = np.argwhere(~sub)[0]
            return Verdict(False, f"{c.payload[a]} and {c.payload[b]} are not adjacent")
        return Verdict(True, f"clique of size {len(idx)}")

    if kind == COLORING:
        color = {v: col for v, col in c.payload}
        missing = [v for v in g.vertices if v not in color]
        if missing or len(color) != g.order:
            return Verdict(False, f"colouring does not cover the vertex set ({missing[:3]})")
        for i, j in g.edges.tolist():
            u, v = g.vertices[i], g.vertices[j]
            if color[u] == color[v]:
                return Verdict(False, f"edge {u}-{v} is monochromatic (colour {color[u]})")
        return Verdict(True, f"{len(set(color.values()))} colours")

    if kind == EDGE_COLORING:
        seen = {}
        at: dict = {}
        for u, v, col in c.payload:
            if not g.adjacent(u, v):
                return Verdict(False, f"{u}-{v} is not an edge")
            key = frozenset((u, v))
            if key in seen:
                return Verdict(False, f"edge {u}-{v} coloured twice")
            seen[key] = col
            for w in (u, v):
                if col in at.setdefault(w, set()):
                    return Verdict(False, f"colour {col} repeats at vertex {w}")
                at[w].add(col)
        if len(seen) != g.size:
            return Verdict(False, f"{g.size - len(seen)} edges left uncoloured")
        return Verdict(True, f"{len(set(seen.values()))} colours")

    if kind == DOMINATING_SET:
        bad = _check_labels(g, c.payload)
        if bad:
            return Verdict(False, bad)
        idx = g.indices_of(c.payload)
        covered = g.adj[idx].any(axis=0)
        covered[idx] = True
        if not covered.all():
            return Verdict(False, f"{g.vertices[int(np.flatnonzero(~covered)[0])]} not dominated")
        return Verdict(True, f"dominating set of size {len(idx)}")

    if kind == RESOLVING_SET:
        bad = _check_labels(g, c.payload)
        if bad:
            return Verdict(False, bad)
        if not connectivity(g).is_connected:
            return Verdict(False, "graph is disconnected")
        dist = distance_matrix(g) if dist is None else dist
        if not resolves(dist, g.indices_of(c.payload)):
            return Verdict(False, "two vertices share a distance vector")
        return Verdict(True, f"resolving set of size {len(c.payload)}")

    if kind == HAM_OBSTRUCTION:
        S, T = c.payload["S"], c.payload["T"]
        bad = _check_labels(g, list(S) + list(T))
        if bad:
            return Verdict(False, bad)
        if set(S) & set(T):
            return Verdict(False, "S and T overlap")
        allowed = set(S)
        for t in T:
            outside = [w for w in g.neighbor_labels(t) if w not in allowed]
            if outside:
                return Verdict(False, f"{t} has neighbour {outside[0]} outside S")
        if not len(S) < len(T):
            return Verdict(False, f"|S|={len(S)} is not below |T|={len(T)}")
        parts = connectivity(remove_vertices(g, S)).component_count
        if parts <= len(S):
            return Verdict(False, f"G-S has {parts} components, not more than |S|={len(S)}")
        return Verdict(True, f"G-S has {parts} components > |S|={len(S)}")

    raise DomainError(f"certificate kind {kind!r} is not checkable against a graph")
