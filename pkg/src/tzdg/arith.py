"""Factorization of the modulus and the arithmetic functions used by the predictors."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import prod

from .errors import DomainError


@dataclass(frozen=True)
class FactoredModulus:
    m: int
    primes: tuple[int, ...]
    exponents: tuple[int, ...]

    def __post_init__(self):
        if not self.primes or len(self.primes) != len(self.exponents):
            raise DomainError("factorization must list at least one prime")
        if any(a >= b for a, b in zip(self.primes, self.primes[1:])):
            raise DomainError("primes must be strictly increasing")
        if any(e < 1 for e in self.exponents):
            raise DomainError("exponents must be positive")
        if prod(p**e for p, e in zip(self.primes, self.exponents)) != self.m:
            raise DomainError(f"factorization does not multiply to {self.m}")

    @property
    def n(self) -> int:
        return len(self.primes)

    @property
    def p1(self) -> int:
        return self.primes[0]

    @property
    def is_prime(self) -> bool:
        return self.n == 1 and self.exponents[0] == 1

    def items(self):
        return zip(self.primes, self.exponents)

    def __str__(self):
        return "*".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self.items())

    @cached_property
    def profile(self) -> ArithProfile:
        return arith_profile(self)


@dataclass(frozen=True)
class ArithProfile:
    phi: int
    tau: int
    odd_exponent_count: int
    divisors: tuple[int, ...]


def factor(m: int) -> FactoredModulus:
    """Trial-division factorization; fine for m up to ~10^7."""
    if not isinstance(m, int) or isinstance(m, bool) or m < 2:
        raise DomainError(f"modulus must be an integer >= 2, got {m!r}")
    primes, exponents = [], []
    rest, p = m, 2
    while p * p <= rest:
        if rest % p == 0:
            e = 0
            while rest % p == 0:
                rest //= p
                e += 1
            primes.append(p)
            exponents.append(e)
        p += 1 if p == 2 else 2
    if rest > 1:
        primes.append(rest)
        exponents.append(1)
    return FactoredModulus(m, tuple(primes), tuple(exponents))


def arith_profile(fm: FactoredModulus) -> ArithProfile:
    phi = prod(p ** (e - 1) * (p - 1) for p, e in fm.items())
    tau = prod(e + 1 for e in fm.exponents)
    odd = sum(e % 2 for e in fm.exponents)
    divisors = [1]
    for p, e in fm.items():
        divisors = [d * p**k for d in divisors for k in range(e + 1)]
    return ArithProfile(phi, tau, odd, tuple(sorted(divisors)))


def is_prime(k: int) -> bool:
    return k >= 2 and factor(k).is_prime


def valuation(x: int, p: int, cap: int) -> int:
    """Exponent of p in x, truncated at cap (valuation of a residue mod p^cap)."""
    if x == 0:
        return cap
    v = 0
    while v < cap and x % p == 0:
        x //= p
        v += 1
    return v
