"""Exhaustive checks of the structural ring lemmas behind connectivity.

Each checker scans a ring within its element budget and returns a list of
violations (empty when the statement holds).
"""

from __future__ import annotations

import numpy as np

from .graphs import Graph, build_total_zero_divisor_graph
from .ring import Ring, ann_of_ideal, associated_primes, ideal_generated_by


def zero_divisors_are_union_of_associated_primes(ring: Ring, primes=None) -> list[str]:
    primes = associated_primes(ring) if primes is None else primes
    union = np.zeros(ring.order, dtype=bool)
    for P in primes:
        union |= P.mask
    diff = np.flatnonzero(union != ring.zero_divisor_mask)
    return [f"{ring.label(int(i))} is in exactly one of Z(R) and the union" for i in diff[:5]]


def distinct_prime_annihilators_multiply_to_zero(ring: Ring, primes=None) -> list[str]:
    """If ann(a) and ann(b) are distinct primes then ab = 0."""
    primes = associated_primes(ring) if primes is None else primes
    if len(primes) < 2:
        return []
    everything = np.arange(ring.order)
    kills = ring.mul(everything[:, None], everything[None, :]) == 0
    keys = [P.mask.tobytes() for P in primes]
    groups: dict[bytes, list[int]] = {k: [] for k in keys}
    for a in everything.tolist():
        key = kills[a].tobytes()
        if key in groups:
            groups[key].append(a)
    members = [np.array(groups[k], dtype=np.int64) for k in keys]
    out = []
    for i in range(len(members)):
        for j in range(i + 1, len(members)):
            a, b = members[i], members[j]
            prods = ring.mul(a[:, None], b[None, :])
            bad = np.argwhere(prods != 0)
            for r, c in bad[:3]:
                out.append(f"{ring.label(int(a[r]))} * {ring.label(int(b[c]))} != 0")
    return out


def clique_ideal(ring: Ring, primes=None):
    """The ideal generated by the union of P ∩ ann(P) over associated primes P."""
    primes = associated_primes(ring) if primes is None else primes
    gens = []
    for P in primes:
        gens.extend(P.intersection(ann_of_ideal(P)).elements)
    return ideal_generated_by(ring, gens)


def clique_ideal_is_complete(ring: Ring, g: Graph | None = None, primes=None) -> list[str]:
    g = build_total_zero_divisor_graph(ring) if g is None else g
    ideal = clique_ideal(ring, primes)
    verts = [x for x in ideal.elements if ring.index(x) != 0]
    idx = g.indices_of(verts)
    sub = g.adj[np.ix_(idx, idx)] | np.eye(len(idx), dtype=bool)
    bad = np.argwhere(~sub)
    return [f"{verts[i]} and {verts[j]} are not adjacent" for i, j in bad[:5] if i < j]


def ring_lemma_violations(ring: Ring, g: Graph | None = None) -> dict[str, list[str]]:
    primes = associated_primes(ring)
    return {
        "zero_divisor_union": zero_divisors_are_union_of_associated_primes(ring, primes),
        "product_vanishing": distinct_prime_annihilators_multiply_to_zero(ring, primes),
        "ideal_clique": clique_ideal_is_complete(ring, g, primes),
    }
