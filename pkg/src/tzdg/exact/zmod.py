"""Exact invariants of the total zero-divisor graph of Z_m without a dense adjacency matrix.

Used where m is too large to materialise the graph (tens of thousands). Multiplying by
a unit is a graph automorphism (it preserves both xy = 0 and membership of x + y in
Z(Z_m)), so every vertex has the degree of its gcd-class representative d = gcd(x, m).
Degrees are counted by enumerating the multiples of m/d, the only candidates w with
d*w = 0. Connectivity uses a BFS over residues with the same candidate enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt

import numpy as np


def _zero_divisor_table(m: int) -> np.ndarray:
    zd = np.gcd(np.arange(m), m) > 1
    zd[0] = True
    return zd


def _class_reps(m: int) -> list[int]:
    """Proper divisors d > 1 of m: one representative per gcd class of vertices."""
    small = [d for d in range(2, isqrt(m) + 1) if m % d == 0]
    return sorted(set(small) | {m // d for d in small})


def class_degree(m: int, d: int, zd: np.ndarray | None = None) -> int:
    """Degree of the vertex d (any residue with gcd(d, m) = d)."""
    step = m // gcd(d, m)
    partners = np.arange(step, m, step, dtype=np.int64)
    sums = (d + partners) % m
    if zd is None:
        in_z = (sums == 0) | (np.gcd(sums, m) > 1)
    else:
        in_z = zd[sums]
    return int((in_z & (partners != d)).sum())


@dataclass(frozen=True)
class ClassProfile:
    m: int
    vertex_count: int
    degrees: dict  # gcd-class representative -> degree of every member
    class_sizes: dict

    @property
    def max_degree(self) -> int:
        return max(self.degrees.values())

    @property
    def min_degree(self) -> int:
        return min(self.degrees.values())


def _totient(k: int) -> int:
    return int(np.count_nonzero(np.gcd(np.arange(1, k + 1), k) == 1))


def class_profile(m: int) -> ClassProfile:
    reps = _class_reps(m)
    degrees = {d: class_degree(m, d) for d in reps}
    sizes = {d: _totient(m // d) for d in reps}
    return ClassProfile(m, sum(sizes.values()), degrees, sizes)


def degree_bounds_refute(m: int, x: int, y: int) -> bool:
    """Cheap exact refutation of (max degree, min degree) == (x, y).

    Scans classes from the smallest representative and stops at the first degree
    outside [y, x]. Returns True when the pair is refuted, False when every class
    degree lies in the interval (the caller must then compute exact extremes).
    A modulus with no vertices is refuted outright.
    """
    reps = _class_reps(m)
    if not reps:
        return True
    for d in reps:
        deg = class_degree(m, d)
        if deg < y or deg > x:
            return True
    return False


def is_connected(m: int) -> bool:
    """Implicit BFS connectivity over the nonzero zero-divisors of Z_m."""
    zd = _zero_divisor_table(m)
    verts = np.flatnonzero(zd)[1:]
    if verts.size == 0:
        return False
    visited = np.zeros(m, dtype=bool)
    visited[verts[0]] = True
    frontier = verts[:1]
    while frontier.size:
        g = np.gcd(frontier, m)
        reached = np.zeros(m, dtype=bool)
        for d in np.unique(g).tolist():
            members = frontier[g == d]
            step = m // d
            partners = np.arange(step, m, step)
            ok = zd[(members[:, None] + partners[None, :]) % m]
            ok &= members[:, None] != partners[None, :]
            reached[partners[ok.any(axis=0)]] = True
        reached &= ~visited
        visited |= reached
        frontier = np.flatnonzero(reached)
    return int(visited.sum()) == verts.size
