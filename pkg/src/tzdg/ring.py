"""Finite commutative rings Z_k1 x ... x Z_kr, represented by full element enumeration.

Elements are addressed by their position in lexicographic order (last factor varies
fastest). Labels are plain ints for a single factor and tuples otherwise. Every ideal
computation here is an exhaustive scan; nothing relies on structure theorems except
``Ring.zero_divisor_mask``, which is checked against the scan in the test-suite.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from math import gcd, prod
from typing import Iterable, Union

import numpy as np

from .arith import factor
from .errors import DomainError, ResourceError

Label = Union[int, tuple]

DEFAULT_ELEMENT_BUDGET = 10_000
_CHUNK = 1 << 22
_TABLE_LIMIT = 2048  # rings up to this order keep a full multiplication table


@dataclass(frozen=True)
class Ring:
    factors: tuple[int, ...]
    budget: int = field(default=DEFAULT_ELEMENT_BUDGET, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(int(k) for k in self.factors))
        if not self.factors or any(k < 2 for k in self.factors):
            raise DomainError(f"ring factors must be integers >= 2, got {self.factors}")

    @classmethod
    def parse(cls, text: str, budget: int = DEFAULT_ELEMENT_BUDGET) -> Ring:
        """Parse the textual form ``k1xk2x...`` (for example ``4x9``)."""
        if not re.fullmatch(r"\s*\d+(\s*[xX]\s*\d+)*\s*", text or ""):
            raise DomainError(f"bad ring spec {text!r}; expected e.g. '4x9'")
        return cls(tuple(int(t) for t in re.split(r"[xX]", text.replace(" ", ""))), budget)

    @classmethod
    def zmod(cls, m: int, budget: int = DEFAULT_ELEMENT_BUDGET) -> Ring:
        return cls((m,), budget)

    def __str__(self):
        return "x".join(map(str, self.factors))

    @property
    def order(self) -> int:
        return prod(self.factors)

    @property
    def is_cyclic(self) -> bool:
        return len(self.factors) == 1

    @property
    def is_local(self) -> bool:
        return len(self.factors) == 1 and factor(self.factors[0]).n == 1

    def check_budget(self):
        if self.order > self.budget:
            raise ResourceError(f"ring of order {self.order} exceeds element budget {self.budget}")

    # -- element encoding -------------------------------------------------

    @cached_property
    def _strides(self) -> np.ndarray:
        s = [1] * len(self.factors)
        for i in range(len(self.factors) - 2, -1, -1):
            s[i] = s[i + 1] * self.factors[i + 1]
        return np.array(s, dtype=np.int64)

    @cached_property
    def _moduli(self) -> np.ndarray:
        return np.array(self.factors, dtype=np.int64)

    @cached_property
    def coords(self) -> np.ndarray:
        """(order, r) array of residues, row i is element i."""
        self.check_budget()
        idx = np.arange(self.order, dtype=np.int64)
        return (idx[:, None] // self._strides) % self._moduli

    def encode(self, coords: np.ndarray) -> np.ndarray:
        coords = np.asarray(coords, dtype=np.int64)
        out = coords[..., -1] % self.factors[-1]
        for i in range(len(self.factors) - 1):
            out = out + (coords[..., i] % self.factors[i]) * int(self._strides[i])
        return out

    def label(self, i: int) -> Label:
        c = [int(i) // int(s) % k for s, k in zip(self._strides, self.factors)]
        return c[0] if self.is_cyclic else tuple(c)

    def index(self, x: Label) -> int:
        c = (x,) if isinstance(x, (int, np.integer)) else tuple(x)
        if len(c) != len(self.factors):
            raise DomainError(f"{x!r} is not an element of Z_{self}")
        return int(sum((int(a) % k) * int(s) for a, k, s in zip(c, self.factors, self._strides)))

    def labels(self, indices: Iterable[int]) -> list[Label]:
        return [self.label(i) for i in indices]

    @cached_property
    def _mul_table(self) -> np.ndarray | None:
        if self.order > _TABLE_LIMIT:
            return None
        ca = self.coords
        return self.encode(ca[:, None, :] * ca[None, :, :]).astype(np.int32)

    def mul(self, a, b) -> np.ndarray:
        """Elementwise (broadcasting) product of element indices."""
        table = self._mul_table
        if table is not None:
            return table[np.asarray(a), np.asarray(b)]
        ca, cb = self.coords[np.asarray(a)], self.coords[np.asarray(b)]
        return self.encode(ca * cb)

    def add(self, a, b) -> np.ndarray:
        ca, cb = self.coords[np.asarray(a)], self.coords[np.asarray(b)]
        return self.encode(ca + cb)

    @cached_property
    def one(self) -> int:
        return self.index(tuple(1 for _ in self.factors))

    # -- zero-divisors ----------------------------------------------------

    @cached_property
    def zero_divisor_mask(self) -> np.ndarray:
        """Z(R) including 0: some coordinate is a non-unit of its factor."""
        mask = np.zeros(self.order, dtype=bool)
        for i, k in enumerate(self.factors):
            nonunit = np.array([gcd(c, k) > 1 for c in range(k)])
            mask |= nonunit[self.coords[:, i]]
        return mask


def enumerate_elements(ring: Ring) -> list[Label]:
    ring.check_budget()
    if ring.is_cyclic:
        return list(range(ring.order))
    return [tuple(int(c) for c in row) for row in ring.coords]


def is_unit(ring: Ring, x: Label) -> bool:
    xi = ring.index(x)
    return bool((ring.mul(xi, np.arange(ring.order)) == ring.one).any())


def is_zero_divisor(ring: Ring, x: Label) -> bool:
    """Zero counts as a zero-divisor."""
    xi = ring.index(x)
    if xi == 0:
        return True
    return bool((ring.mul(xi, np.arange(1, ring.order)) == 0).any())


@dataclass(frozen=True)
class IdealSet:
    ring: Ring
    indices: frozenset[int]
    generators: tuple = ()

    @classmethod
    def from_mask(cls, ring: Ring, mask: np.ndarray, generators=()) -> IdealSet:
        return cls(ring, frozenset(np.flatnonzero(mask).tolist()), tuple(generators))

    @classmethod
    def from_labels(cls, ring: Ring, labels: Iterable[Label]) -> IdealSet:
        return cls(ring, frozenset(ring.index(x) for x in labels))

    def __eq__(self, other):
        return (
            isinstance(other, IdealSet)
            and self.ring == other.ring
            and self.indices == other.indices
        )

    def __hash__(self):
        return hash((self.ring, self.indices))

    def __len__(self):
        return len(self.indices)

    def __contains__(self, x: Label):
        return self.ring.index(x) in self.indices

    @property
    def mask(self) -> np.ndarray:
        m = np.zeros(self.ring.order, dtype=bool)
        m[list(self.indices)] = True
        return m

    @property
    def elements(self) -> list[Label]:
        return self.ring.labels(sorted(self.indices))

    @property
    def is_whole_ring(self) -> bool:
        return len(self.indices) == self.ring.order

    def is_ideal(self) -> bool:
        idx = np.array(sorted(self.indices))
        if 0 not in self.indices:
            return False
        mask = self.mask
        sums = self.ring.add(idx[:, None], idx[None, :])
        prods = self.ring.mul(idx[:, None], np.arange(self.ring.order)[None, :])
        return bool(mask[sums].all() and mask[prods].all())

    def __le__(self, other: IdealSet):
        return self.indices <= other.indices

    def __lt__(self, other: IdealSet):
        return self.indices < other.indices

    def intersection(self, other: IdealSet) -> IdealSet:
        return IdealSet(self.ring, self.indices & other.indices)

    def __repr__(self):
        return f"IdealSet(Z_{self.ring}, {self.elements})"


def _kills(ring: Ring, subset_idx: np.ndarray) -> np.ndarray:
    """Mask of elements r with r*s = 0 for every s in subset_idx."""
    everything = np.arange(ring.order)
    mask = np.ones(ring.order, dtype=bool)
    for s in subset_idx:
        mask &= ring.mul(everything, s) == 0
    return mask


def annihilator(ring: Ring, subset: Iterable[Label]) -> IdealSet:
    idx = np.array([ring.index(x) for x in subset], dtype=np.int64)
    if idx.size == 0:
        raise DomainError("annihilator of an empty set")
    return IdealSet.from_mask(ring, _kills(ring, idx))


def ann_of_ideal(ideal: IdealSet) -> IdealSet:
    return IdealSet.from_mask(ideal.ring, _kills(ideal.ring, np.array(sorted(ideal.indices))))


def is_prime_ideal(ring: Ring, ideal: IdealSet) -> bool:
    if ideal.is_whole_ring:
        raise DomainError("the whole ring is not a prime ideal candidate")
    mask = ideal.mask
    outside = np.flatnonzero(~mask)
    cap = max(1, _CHUNK // max(1, outside.size))
    # small blocks first: most non-prime candidates fail on the first few rows
    start, rows = 0, 8
    while start < outside.size:
        block = ring.mul(outside[start : start + rows, None], outside[None, :])
        if mask[block].any():
            return False
        start += rows
        rows = min(cap, rows * 4)
    return True


def associated_primes(ring: Ring) -> list[IdealSet]:
    """Distinct prime ideals of the form ann(a), ordered by their sorted element indices."""
    # the cache key ignores the budget, so check it on every call
    ring.check_budget()
    return list(_associated_primes(ring))


@lru_cache(maxsize=64)
def _associated_primes(ring: Ring) -> tuple[IdealSet, ...]:
    everything = np.arange(ring.order)
    seen: dict[bytes, IdealSet] = {}
    rows = max(1, _CHUNK // ring.order)
    for start in range(0, ring.order, rows):
        a = everything[start : start + rows]
        block = ring.mul(a[:, None], everything[None, :]) == 0
        for ai, row in zip(a, block):
            key = np.packbits(row).tobytes()
            if key not in seen:
                seen[key] = IdealSet.from_mask(ring, row, generators=(ring.label(int(ai)),))
    primes = [I for I in seen.values() if not I.is_whole_ring and is_prime_ideal(ring, I)]
    return tuple(sorted(primes, key=lambda I: sorted(I.indices)))


def maximal_associated_primes(ring: Ring, primes: list[IdealSet] | None = None) -> list[IdealSet]:
    primes = associated_primes(ring) if primes is None else primes
    return [P for P in primes if not any(P < Q for Q in primes)]


def ideal_generated_by(ring: Ring, gens: Iterable[Label]) -> IdealSet:
    """Sum of the principal ideals R*g."""
    gens = list(gens)
    everything = np.arange(ring.order)
    current = np.array([0], dtype=np.int64)
    mask = np.zeros(ring.order, dtype=bool)
    mask[0] = True
    for g in gens:
        gi = ring.index(g)
        if mask[gi]:
            continue
        principal = np.unique(ring.mul(everything, gi))
        current = np.unique(ring.add(current[:, None], principal[None, :]))
        mask[current] = True
    return IdealSet.from_mask(ring, mask, generators=tuple(gens))


def nilindex(ring: Ring, ideal: IdealSet) -> int | None:
    """Smallest l with every product of l elements of the ideal equal to 0; None if never."""
    base = np.array(sorted(ideal.indices), dtype=np.int64)
    products = base
    seen = set()
    ell = 1
    while True:
        if products.size == 1 and products[0] == 0:
            return ell
        key = products.tobytes()
        if key in seen:
            return None
        seen.add(key)
        products = np.unique(ring.mul(products[:, None], base[None, :]))
        ell += 1


def maximal_ideal(ring: Ring) -> IdealSet:
    """The unique maximal ideal of a local ring (its non-units)."""
    if not ring.is_local:
        raise DomainError(f"Z_{ring} is not local")
    return IdealSet.from_mask(ring, ring.zero_divisor_mask)
