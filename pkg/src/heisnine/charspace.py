"""Finitely supported functions P3 -> F_3 and their cubic characters.

P3 is {3} together with the primes p = 1 (mod 3).  A support function f
encodes the character chi(f) = prod_p chi_p^f(p) (with chi_3 the order-3
character mod 9), of conductor Delta(f) or 9 Delta(f); the F_3 structure
(linear combinations, independence) mirrors composition of characters.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import isqrt
from typing import Iterator, Mapping

from ._primes import is_prime
from .eisenstein import ROOT, ZERO, CharValue, chi_nine, chi_p

__all__ = [
    "SupportFunction",
    "ZERO_FUNCTION",
    "delta",
    "conductor",
    "linear_combination",
    "is_linearly_independent",
    "chi_eval",
    "DeltaIndex",
    "enumerate_deltas",
    "enumerate_V",
]


def _valid_prime(p: int) -> bool:
    return p == 3 or (p % 3 == 1 and is_prime(p))


@dataclass(frozen=True, order=True)
class SupportFunction:
    """Sorted (prime, value) pairs with values in {1, 2}; zeros are dropped,
    so structural equality is equality of functions."""

    entries: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        last = 0
        for p, v in self.entries:
            if p <= last:
                raise ValueError(f"entries out of order at prime {p}")
            if v not in (1, 2):
                raise ValueError(f"value {v} at {p} must be 1 or 2")
            if not _valid_prime(p):
                raise ValueError(f"{p} is not 3 or a prime = 1 mod 3")
            last = p

    @classmethod
    def of(cls, values: Mapping[int, int]) -> "SupportFunction":
        ent = tuple(sorted((p, v % 3) for p, v in values.items() if v % 3))
        return cls(ent)

    def value(self, p: int) -> int:
        for q, v in self.entries:
            if q == p:
                return v
        return 0

    @property
    def f3(self) -> int:
        return self.value(3)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.entries)

    @property
    def supp3(self) -> tuple[int, ...]:
        """Support away from 3."""
        return tuple(p for p, _ in self.entries if p != 3)

    @property
    def is_zero(self) -> bool:
        return not self.entries

    def __str__(self) -> str:
        if not self.entries:
            return "0"
        return ",".join(f"{p}:{v}" for p, v in self.entries)


ZERO_FUNCTION = SupportFunction()


def delta(f: SupportFunction) -> int:
    """Product of the support primes away from 3."""
    out = 1
    for p in f.supp3:
        out *= p
    return out


def conductor(f: SupportFunction) -> int:
    return 9 * delta(f) if f.f3 else delta(f)


def linear_combination(
    z: int, f: SupportFunction, zp: int, fp: SupportFunction
) -> SupportFunction:
    vals: dict[int, int] = {}
    for p, v in f.entries:
        vals[p] = z * v
    for p, v in fp.entries:
        vals[p] = vals.get(p, 0) + zp * v
    return SupportFunction.of(vals)


def is_linearly_independent(f: SupportFunction, fp: SupportFunction) -> bool:
    """True iff no (z, z') != (0, 0) combines f, f' to the zero function."""
    if f.is_zero or fp.is_zero:
        return False
    return fp != f and fp != linear_combination(2, f, 0, f)


def chi_eval(f: SupportFunction, m: int) -> CharValue:
    """chi(f)(m): zero iff a support prime divides m."""
    e = 0
    for p, v in f.entries:
        t = chi_nine(m) if p == 3 else chi_p(p, m)
        if t.exp is None:
            return ZERO
        e += v * t.exp
    return ROOT(e)


# ---------------------------------------------------------------------------
# enumeration of squarefree moduli and their function spaces


@dataclass(frozen=True)
class DeltaIndex:
    """A squarefree product of primes = 1 (mod 3), with its factorization."""

    delta: int
    primes: tuple[int, ...]


def _split_primes_up_to(limit: int) -> list[int]:
    # simple local sieve; limits here stay small (<= X^(1/6) scale)
    if limit < 7:
        return []
    sieve = bytearray([1]) * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for p in range(2, isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = b"\x00" * len(sieve[p * p :: p])
    return [p for p in range(7, limit + 1) if sieve[p] and p % 3 == 1]


@lru_cache(maxsize=64)
def _deltas_cached(limit: int) -> tuple[DeltaIndex, ...]:
    out = [DeltaIndex(1, ())]
    for p in _split_primes_up_to(limit):
        out.extend(
            [
                DeltaIndex(d.delta * p, d.primes + (p,))
                for d in out
                if d.delta * p <= limit
            ]
        )
    return tuple(sorted(out, key=lambda d: d.delta))


def enumerate_deltas(limit: int) -> Iterator[DeltaIndex]:
    """All Delta <= limit that are squarefree products of primes = 1 mod 3,
    ascending, including Delta = 1."""
    if limit < 1:
        return iter(())
    return iter(_deltas_cached(limit))


def _factor_delta(d: int) -> tuple[int, ...]:
    primes = []
    m = d
    q = 2
    while q * q <= m:
        if m % q == 0:
            m //= q
            if m % q == 0 or q % 3 != 1:
                raise ValueError(f"{d} is not a squarefree product of split primes")
            primes.append(q)
        q += 1
    if m > 1:
        if m % 3 != 1:
            raise ValueError(f"{d} is not a squarefree product of split primes")
        primes.append(m)
    return tuple(primes)


def enumerate_V(d: int, star: bool) -> list[SupportFunction]:
    """V*(Delta) (star=True): f with Delta(f) = Delta and f(3) = 0, size
    2^omega; V(Delta) additionally ranges f(3) over F_3, size 3 * 2^omega.
    Delta = 1, star=True yields exactly the zero function."""
    if d < 1:
        raise ValueError("Delta must be positive")
    primes = _factor_delta(d)
    out: list[list[tuple[int, int]]] = [[]]
    for p in primes:
        out = [ent + [(p, v)] for ent in out for v in (1, 2)]
    star_funcs = [SupportFunction(tuple(ent)) for ent in out]
    if star:
        return star_funcs
    full = []
    for f in star_funcs:
        for v3 in (0, 1, 2):
            ent = ((3, v3),) + f.entries if v3 else f.entries
            full.append(SupportFunction(ent))
    return full
