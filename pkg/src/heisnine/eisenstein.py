"""Arithmetic in Z[j] and cubic residue symbols.

j denotes the primitive cube root of unity (-1 + sqrt(-3))/2, so j^2 = -1 - j
and elements are written a + b*j with integer a, b.  A prime p = 1 (mod 3)
splits as p = pi * conj(pi); the standard factor pi is pinned by three
conditions: pi is primary (a = 2, b = 0 mod 3), Im(pi) > 0 (b > 0), and the
residue r of j in Z[j]/(pi) = F_p is recorded alongside.  Cubic symbols are
evaluated either by Euler's criterion inside Z[j] or through the F_p image;
the two routes are kept as separate codepaths and cross-checked in tests.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from math import isqrt
from typing import Iterable, Iterator

from ._primes import is_prime, primes_in_class

__all__ = [
    "CharValue",
    "ZERO",
    "ROOT",
    "one_plus_v_plus_v2",
    "EisensteinInt",
    "UNITS",
    "norm",
    "divrem",
    "eis_gcd",
    "is_primary",
    "primary_associate",
    "StandardPrime",
    "standard_decompose",
    "cubic_symbol",
    "chi_p",
    "chi_nine",
    "load_standard_primes",
    "save_standard_primes",
    "standard_primes_up_to",
]


# ---------------------------------------------------------------------------
# values of cubic characters


@dataclass(frozen=True)
class CharValue:
    """Zero or a cube root of unity j^exp; exp is None for the zero value."""

    exp: int | None

    @property
    def is_zero(self) -> bool:
        return self.exp is None

    def __mul__(self, other: "CharValue") -> "CharValue":
        if self.exp is None or other.exp is None:
            return ZERO
        return CharValue((self.exp + other.exp) % 3)

    def __pow__(self, k: int) -> "CharValue":
        if k == 0:
            return CharValue(0)  # z^0 = 1 for every z, including zero
        if self.exp is None:
            return ZERO
        return CharValue(self.exp * k % 3)

    def conj(self) -> "CharValue":
        if self.exp is None:
            return ZERO
        return CharValue(-self.exp % 3)

    def as_complex(self) -> complex:
        if self.exp is None:
            return 0j
        return _OMEGA_POWERS[self.exp]

    def __repr__(self) -> str:
        if self.exp is None:
            return "CharValue(ZERO)"
        return f"CharValue(j^{self.exp})"


_OMEGA_POWERS = (
    complex(1.0, 0.0),
    complex(-0.5, 3**0.5 / 2),
    complex(-0.5, -(3**0.5) / 2),
)

ZERO = CharValue(None)


def ROOT(e: int) -> CharValue:
    return CharValue(e % 3)


def one_plus_v_plus_v2(v: CharValue) -> int:
    """1 + v + v^2 for a root of unity v: 3 at v = 1, else 0."""
    if v.is_zero:
        raise ValueError("one_plus_v_plus_v2 is undefined at the zero value")
    return 3 if v.exp == 0 else 0


# ---------------------------------------------------------------------------
# ring elements


@dataclass(frozen=True)
class EisensteinInt:
    """a + b*j with j^2 = -1 - j."""

    a: int
    b: int

    def __add__(self, other: "EisensteinInt") -> "EisensteinInt":
        return EisensteinInt(self.a + other.a, self.b + other.b)

    def __sub__(self, other: "EisensteinInt") -> "EisensteinInt":
        return EisensteinInt(self.a - other.a, self.b - other.b)

    def __neg__(self) -> "EisensteinInt":
        return EisensteinInt(-self.a, -self.b)

    def __mul__(self, other: "EisensteinInt") -> "EisensteinInt":
        a, b, c, d = self.a, self.b, other.a, other.b
        return EisensteinInt(a * c - b * d, a * d + b * c - b * d)

    def conj(self) -> "EisensteinInt":
        return EisensteinInt(self.a - self.b, -self.b)

    @property
    def norm(self) -> int:
        return self.a * self.a - self.a * self.b + self.b * self.b

    @property
    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    @property
    def is_unit(self) -> bool:
        return self.norm == 1

    def __str__(self) -> str:
        return f"{self.a}{self.b:+d}j"


ONE = EisensteinInt(1, 0)
J = EisensteinInt(0, 1)
# 1, -1, j, -j, j^2, -j^2
UNITS: tuple[EisensteinInt, ...] = (
    EisensteinInt(1, 0),
    EisensteinInt(-1, 0),
    EisensteinInt(0, 1),
    EisensteinInt(0, -1),
    EisensteinInt(-1, -1),
    EisensteinInt(1, 1),
)

_J_POWERS = (EisensteinInt(1, 0), EisensteinInt(0, 1), EisensteinInt(-1, -1))


def norm(z: EisensteinInt) -> int:
    return z.norm


def _round_half_to_zero(num: int, den: int) -> int:
    """Nearest integer to num/den (den > 0), ties toward zero."""
    q, rem = divmod(num, den)
    twice = 2 * rem
    if twice < den:
        return q
    if twice > den:
        return q + 1
    # exact half: candidates q, q+1; take the one of smaller magnitude
    return q + 1 if q < 0 else q


def divrem(n: EisensteinInt, d: EisensteinInt) -> tuple[EisensteinInt, EisensteinInt]:
    """Euclidean division: n = q*d + r with norm(r) < norm(d).

    The quotient rounds each component of n * conj(d) / norm(d) to the
    nearest integer, ties toward zero, which keeps norm(r) <= (3/4) norm(d).
    """
    dn = d.norm
    if dn == 0:
        raise ZeroDivisionError("division by zero in Z[j]")
    t = n * d.conj()
    q = EisensteinInt(_round_half_to_zero(t.a, dn), _round_half_to_zero(t.b, dn))
    return q, n - q * d


def eis_gcd(x: EisensteinInt, y: EisensteinInt) -> EisensteinInt:
    """A gcd of x and y, unique up to units."""
    while not y.is_zero:
        _, r = divrem(x, y)
        x, y = y, r
    return x


def is_primary(z: EisensteinInt) -> bool:
    return z.a % 3 == 2 and z.b % 3 == 0


def primary_associate(z: EisensteinInt) -> EisensteinInt:
    """The unique associate u*z with a = 2, b = 0 (mod 3).

    Exists iff norm(z) is not divisible by 3 (z prime to the ramified prime).
    """
    if z.is_zero or z.norm % 3 == 0:
        raise ValueError(f"no primary associate: {z!r} is not prime to 3")
    for u in UNITS:
        w = u * z
        if is_primary(w):
            return w
    raise AssertionError("unreachable: one of six associates must be primary")


# ---------------------------------------------------------------------------
# standard decomposition of split primes


@dataclass(frozen=True)
class StandardPrime:
    """Canonical factor pi of a split prime p, with r = image of j in F_p."""

    p: int
    pi: EisensteinInt
    r: int


def _divisible(n: EisensteinInt, d: EisensteinInt) -> bool:
    return divrem(n, d)[1].is_zero


@lru_cache(maxsize=None)
def standard_decompose(p: int) -> StandardPrime:
    """Split p = 1 (mod 3) as pi * conj(pi) and pin the standard pi.

    pi is primary with b > 0; r in [2, p-2] satisfies r^2 + r + 1 = 0 (mod p)
    and pi | (j - r), so j maps to r under Z[j]/(pi) = F_p.
    """
    if p % 3 != 1 or not is_prime(p):
        raise ValueError(f"{p} is not a prime congruent to 1 mod 3")
    e = (p - 1) // 3
    g = 2
    while pow(g, e, p) == 1:
        g += 1
    c = pow(g, e, p)  # a primitive cube root of unity mod p
    z = eis_gcd(EisensteinInt(p, 0), EisensteinInt(c, -1))
    pi = primary_associate(z)
    if pi.b < 0:
        pi = pi.conj()  # conj keeps primariness and flips the sign of b
    for r in (c, c * c % p):
        if _divisible(EisensteinInt(-r, 1), pi):
            return StandardPrime(p, pi, r)
    raise AssertionError(f"no root of x^2+x+1 maps to j mod {pi!r}")


# ---------------------------------------------------------------------------
# cubic residue symbols


def _mulmod(x: EisensteinInt, y: EisensteinInt, m: EisensteinInt) -> EisensteinInt:
    return divrem(x * y, m)[1]


def _symbol_eis(alpha: EisensteinInt, sp: StandardPrime) -> CharValue:
    """Euler criterion inside Z[j]: alpha^((p-1)/3) = j^m (mod pi)."""
    pi = sp.pi
    _, a0 = divrem(alpha, pi)
    if a0.is_zero:
        return ZERO
    acc = ONE
    base = a0
    e = (sp.p - 1) // 3
    while e:
        if e & 1:
            acc = _mulmod(acc, base, pi)
        base = _mulmod(base, base, pi)
        e >>= 1
    for m in range(3):
        if _divisible(acc - _J_POWERS[m], pi):
            return ROOT(m)
    raise AssertionError(f"Euler criterion produced a non-root mod {pi!r}")


def _symbol_fp(alpha: EisensteinInt, sp: StandardPrime) -> CharValue:
    """F_p image route: reduce a + b*r mod p and take the cube-power class."""
    p, r = sp.p, sp.r
    n = (alpha.a + alpha.b * r) % p
    if n == 0:
        return ZERO
    t = pow(n, (p - 1) // 3, p)
    if t == 1:
        return ROOT(0)
    if t == r:
        return ROOT(1)
    if t == r * r % p:
        return ROOT(2)
    raise AssertionError(f"cube-power class of {n} mod {p} is not a root of unity")


def cubic_symbol(
    alpha: EisensteinInt, sp: StandardPrime, *, method: str = "fp"
) -> CharValue:
    """Cubic residue symbol (alpha / pi)_3 for the standard prime sp.

    method selects the codepath: "fp" reduces through Z[j]/(pi) = F_p,
    "eis" runs Euler's criterion in Z[j].  Both agree everywhere.
    """
    if method == "fp":
        return _symbol_fp(alpha, sp)
    if method == "eis":
        return _symbol_eis(alpha, sp)
    raise ValueError(f"unknown cubic_symbol method {method!r}")


# Exponent tables make the rational-argument symbol O(1) for the small
# support primes that dominate the census and constant pipelines.
_TABLE_MAX = 20000


def _primitive_root(p: int) -> int:
    fac = []
    m = p - 1
    d = 2
    while d * d <= m:
        if m % d == 0:
            fac.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        fac.append(m)
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in fac):
            return g
    raise AssertionError(f"no primitive root mod {p}")


@lru_cache(maxsize=None)
def chi_p_table(p: int) -> bytes:
    """Exponent of chi_p(n) indexed by n mod p; 0xFF marks the zero value."""
    sp = standard_decompose(p)
    g = _primitive_root(p)
    t = _symbol_fp(EisensteinInt(g, 0), sp).exp
    if t not in (1, 2):
        raise AssertionError(f"chi_{p} of a primitive root must have order 3")
    tab = bytearray(p)
    tab[0] = 0xFF
    x = 1
    for k in range(p - 1):
        tab[x] = k * t % 3
        x = x * g % p
    return bytes(tab)


def chi_p(p: int, n: int) -> CharValue:
    """chi_p(n) = (n / pi)_3 for the standard prime above p."""
    if p <= _TABLE_MAX:
        e = chi_p_table(p)[n % p]
        return ZERO if e == 0xFF else ROOT(e)
    return _symbol_fp(EisensteinInt(n % p, 0), standard_decompose(p))


# Order-3 character mod 9 with chi_nine(2) = j; kills multiples of 3.
_CHI_NINE_EXP = {1: 0, 2: 1, 4: 2, 5: 2, 7: 1, 8: 0}


def chi_nine(n: int) -> CharValue:
    e = _CHI_NINE_EXP.get(n % 9)
    return ZERO if e is None else ROOT(e)


# ---------------------------------------------------------------------------
# standard-prime cache (TSV: p, a, b, r; sorted by p; revalidated on load)

CACHE_ENV = "HEIS_CACHE_DIR"
_CACHE_NAME = "standard_primes.tsv"


def _validate_row(p: int, a: int, b: int, r: int) -> StandardPrime:
    pi = EisensteinInt(a, b)
    if p % 3 != 1 or not is_prime(p):
        raise ValueError(f"cache row p={p}: not a split prime")
    if pi.norm != p or not is_primary(pi) or b <= 0:
        raise ValueError(f"cache row p={p}: {pi} is not the standard factor")
    if not 2 <= r <= p - 2 or (r * r + r + 1) % p != 0:
        raise ValueError(f"cache row p={p}: r={r} is not a primitive cube root")
    if not _divisible(EisensteinInt(-r, 1), pi):
        raise ValueError(f"cache row p={p}: pi does not divide j - {r}")
    return StandardPrime(p, pi, r)


def load_standard_primes(path: str) -> dict[int, StandardPrime]:
    out: dict[int, StandardPrime] = {}
    last = 0
    with open(path, "r", encoding="ascii") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                p, a, b, r = (int(x) for x in line.split("\t"))
            except ValueError as exc:
                raise ValueError(f"{path}:{lineno}: malformed row") from exc
            if p <= last:
                raise ValueError(f"{path}:{lineno}: rows out of order")
            last = p
            out[p] = _validate_row(p, a, b, r)
    return out


def save_standard_primes(path: str, rows: Iterable[StandardPrime]) -> None:
    tmp = f"{path}.tmp.{os.getpid()}"
    with open(tmp, "w", encoding="ascii") as fh:
        for sp in sorted(rows, key=lambda s: s.p):
            fh.write(f"{sp.p}\t{sp.pi.a}\t{sp.pi.b}\t{sp.r}\n")
    os.replace(tmp, path)


def standard_primes_up_to(
    limit: int, cache_dir: str | None = None
) -> Iterator[StandardPrime]:
    """Standard decompositions for every p = 1 (mod 3) up to limit, ascending.

    cache_dir (or the HEIS_CACHE_DIR environment variable) enables a TSV
    cache that is revalidated on load and extended on miss.
    """
    if cache_dir is None:
        cache_dir = os.environ.get(CACHE_ENV) or None
    cached: dict[int, StandardPrime] = {}
    path = None
    if cache_dir:
        path = os.path.join(cache_dir, _CACHE_NAME)
        if os.path.exists(path):
            cached = load_standard_primes(path)
    fresh = False
    rows = []
    for p in primes_in_class(limit, 3, 1):
        p = int(p)
        sp = cached.get(p)
        if sp is None:
            sp = standard_decompose(p)
            fresh = True
        rows.append(sp)
        yield sp
    if path and fresh:
        os.makedirs(cache_dir, exist_ok=True)
        merged = dict(cached)
        merged.update((sp.p, sp) for sp in rows)
        save_standard_primes(path, merged.values())
