"""Numeric pipeline for the leading constant of the census asymptotic.

Everything here is floating point with explicit truncation parameters and
reported tail bounds.  The conditionally convergent Euler products are
renormalized against |L(1, chi)|^2 |L(1, (./3)chi)|^2 before truncation, so
the truncated factors are 1 + O(p^(-3/2)) and the products converge
absolutely; the H-series over moduli Delta are accumulated with compensated
summation in a fixed deterministic order.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import log, sqrt

import numpy as np

from ._primes import primes_up_to
from .charspace import (
    SupportFunction,
    chi_eval,
    delta,
    enumerate_V,
    enumerate_deltas,
    linear_combination,
)
from .counting import WeightMode, heis_total
from .eisenstein import ROOT, cubic_symbol, standard_decompose, standard_primes_up_to
from .ksum import alpha_ell, psi_ell
from .lfunctions import character_values, chi_exponent_arrays, l_one, twisted_character_values

__all__ = [
    "TruncationParams",
    "lambda_delta",
    "euler_product_P",
    "HConstants",
    "h_constants",
    "ConstantReport",
    "constant_report",
    "CancellationSum",
    "char_cancellation",
    "char_cancellation_profile",
    "RatioRow",
    "ratio_report",
]


@dataclass(frozen=True)
class TruncationParams:
    delta_max: int = 2000
    p_max: int = 10**6
    series_terms: int = 10**6

    def __post_init__(self) -> None:
        if self.delta_max < 1 or self.p_max < 100 or self.series_terms < 1000:
            raise ValueError("truncation parameters out of range")


class _CompensatedSum:
    """Neumaier summation; insertion order is fixed by the callers."""

    __slots__ = ("s", "c")

    def __init__(self) -> None:
        self.s = 0.0
        self.c = 0.0

    def add(self, x: float) -> None:
        t = self.s + x
        if abs(self.s) >= abs(x):
            self.c += (self.s - t) + x
        else:
            self.c += (x - t) + self.s
        self.s = t

    @property
    def value(self) -> float:
        return self.s + self.c


def lambda_delta(d: int) -> float:
    """prod over p | d of (1 + 2 / (sqrt p (p + 2)))^(-1)."""
    out = 1.0
    m = d
    q = 2
    while q * q <= m:
        if m % q == 0:
            out /= 1.0 + 2.0 / (sqrt(q) * (q + 2))
            while m % q == 0:
                m //= q
        q += 1
    if m > 1:
        out /= 1.0 + 2.0 / (sqrt(m) * (m + 2))
    return out


# 2 Re of j^e
_C_OF_E = np.array([2.0, -1.0, -1.0])


@dataclass(frozen=True)
class _PrimeGrids:
    one: np.ndarray  # primes = 1 mod 3 up to p_max
    two: np.ndarray  # primes = 2 mod 3 up to p_max (includes 2)
    sqrt_one: np.ndarray


def _grids(p_max: int) -> _PrimeGrids:
    ps = primes_up_to(p_max)
    one = ps[ps % 3 == 1]
    two = ps[ps % 3 == 2]
    return _PrimeGrids(one, two, np.sqrt(one.astype(np.float64)))


_grid_cache: dict[int, _PrimeGrids] = {}


def _grids_cached(p_max: int) -> _PrimeGrids:
    g = _grid_cache.get(p_max)
    if g is None:
        g = _grids(p_max)
        if len(_grid_cache) > 4:
            _grid_cache.clear()
        _grid_cache[p_max] = g
    return g


def _c_arrays(f: SupportFunction, g: _PrimeGrids) -> tuple[np.ndarray, np.ndarray]:
    """(c_p on the p=1 grid with 0 at support primes, support mask)."""
    e1, ok1 = chi_exponent_arrays(f, g.one)
    c1 = np.where(ok1, _C_OF_E[e1], 0.0)
    return c1, ok1


def _l_factors(f: SupportFunction) -> float:
    lc = l_one(character_values(f))
    lt = l_one(twisted_character_values(f))
    return (abs(lc) * abs(lt)) ** 2


def _three_factor(f: SupportFunction) -> float:
    if f.f3:
        return 1.0  # chi(f)(3) = 0
    v = chi_eval(f, 3)
    c3 = 2.0 if v == ROOT(0) else -1.0
    return 1.0 - c3 / 3.0 + 1.0 / 9.0


def _two_grid_correction(f: SupportFunction, g: _PrimeGrids) -> float:
    e2, _ = chi_exponent_arrays(f, g.two)
    c2 = _C_OF_E[e2]
    return float(np.log1p((-c2 * g.two**2 + 1.0) / g.two**4).sum())


def euler_product_P(f: SupportFunction, params: TruncationParams) -> float:
    """P(f) = prod over primes p = 1 mod 3 of
    1 + 2 c_p / (p + 2) + 2 / (sqrt p (p + 2)), c_p = 2 Re chi(f)(p),
    renormalized through |L(1,chi)|^2 |L(1,(./3)chi)|^2 so the truncated
    local factors are 1 + 2 p^(-3/2) + O(p^-2)."""
    if f.is_zero:
        raise ValueError("P(f) needs a nonzero support function")
    g = _grids_cached(params.p_max)
    c1, ok1 = _c_arrays(f, g)
    p = g.one.astype(np.float64)
    big_f = 1.0 + 2.0 * c1 / (p + 2.0) + 2.0 / (g.sqrt_one * (p + 2.0))
    # |1 - chi(p)/p|^4, with |chi(p)| = 0 at support primes
    loc = np.where(ok1, (1.0 - c1 / p + 1.0 / p**2) ** 2, 1.0)
    log_one = float(np.log(big_f * loc).sum())
    log_two = _two_grid_correction(f, g)
    return _l_factors(f) * _three_factor(f) * float(np.exp(log_one + log_two))


def _euler_tail_bound(p_max: int) -> float:
    # sum over p > p_max, p = 1 mod 3 of ~2 p^(-3/2), prime density 1/log p
    return 2.0 / (sqrt(p_max) * log(p_max)) * 2.0


@dataclass(frozen=True)
class HConstants:
    h0: float
    h1: float
    h1_prime: float
    h2: float
    c_star_form1: float
    p_of_f_max: float


def h_constants(params: TruncationParams) -> HConstants:
    """The Delta-series H0, H1, H1', H2 and the literal first form of the
    starred constant (before the 2^-2 3^-3 alpha_3 prefactor)."""
    g = _grids_cached(params.p_max)
    p = g.one.astype(np.float64)
    h0 = _CompensatedSum()
    h1 = _CompensatedSum()
    h1p = _CompensatedSum()
    h2 = _CompensatedSum()
    form1 = _CompensatedSum()
    p_max_seen = 0.0
    for dI in enumerate_deltas(params.delta_max):
        d = dI.delta
        pref = float(psi_ell(d, 3)) * 3 ** len(dI.primes) / d**1.5
        lam = lambda_delta(d)
        for f in enumerate_V(d, True):
            for eta in (1, 2):
                gfn = linear_combination(1, f, eta, SupportFunction(((3, 1),)))
                h2.add(lam * pref * euler_product_P(gfn, params))
            if d == 1:
                continue  # H0, H1 and the starred form sum over Delta > 1
            pf = euler_product_P(f, params)
            p_max_seen = max(p_max_seen, pf)
            h0.add(lam * pref * pf)
            if chi_eval(f, 3) == ROOT(0):
                h1.add(lam * pref * pf)
            else:
                h1p.add(lam * pref * pf)
            form1.add(pref * _form1_term(f, g, p, params))
    return HConstants(
        h0=h0.value,
        h1=h1.value,
        h1_prime=h1p.value,
        h2=h2.value,
        c_star_form1=form1.value,
        p_of_f_max=p_max_seen,
    )


def _form1_term(
    f: SupportFunction, g: _PrimeGrids, p: np.ndarray, params: TruncationParams
) -> float:
    """Literal double product: prod(1 + 2c_p/(p+2)) renormalized the same
    way, times the absolutely convergent prod over p coprime to Delta(f) of
    1 + 2/(sqrt p (p + 2 + 2 c_p))."""
    c1, ok1 = _c_arrays(f, g)
    first = 1.0 + 2.0 * c1 / (p + 2.0)
    loc = np.where(ok1, (1.0 - c1 / p + 1.0 / p**2) ** 2, 1.0)
    log_first = float(np.log(first * loc).sum()) + _two_grid_correction(f, g)
    second = 1.0 + 2.0 / (g.sqrt_one * (p + 2.0 + 2.0 * c1))
    log_second = float(np.log(np.where(ok1, second, 1.0)).sum())
    return (
        _l_factors(f)
        * _three_factor(f)
        * float(np.exp(log_first + log_second))
    )


# exact rational coefficients of (H0, H1, H2) in c(Heis_3) / alpha_3, times 4
_C_H0 = 32.0 / 3**6
_C_H1 = 8.0 / 3**6
_C_H2 = 10.0 / 3**7


@dataclass(frozen=True)
class ConstantReport:
    alpha3: float
    h0: float
    h1: float
    h1_prime: float
    h2: float
    c_heis3: float
    c_heis_star: float
    tails: dict[str, float]
    params: TruncationParams

    def to_json(self) -> str:
        obj = {
            "alpha3": self.alpha3,
            "h0": self.h0,
            "h1": self.h1,
            "h1_prime": self.h1_prime,
            "h2": self.h2,
            "c_heis3": self.c_heis3,
            "c_heis_star": self.c_heis_star,
            "tails": self.tails,
            "params": {
                "delta_max": self.params.delta_max,
                "p_max": self.params.p_max,
                "series_terms": self.params.series_terms,
            },
        }
        return json.dumps(obj, separators=(",", ":"))

    def to_text(self) -> str:
        lines = [
            f"alpha3 = {self.alpha3!r}",
            f"h0 = {self.h0!r}",
            f"h1 = {self.h1!r}",
            f"h1_prime = {self.h1_prime!r}",
            f"h2 = {self.h2!r}",
            f"c_heis3 = {self.c_heis3!r}",
            f"c_heis_star = {self.c_heis_star!r}",
        ]
        lines += [f"tail.{k} = {v!r}" for k, v in self.tails.items()]
        lines += [
            f"params.delta_max = {self.params.delta_max}",
            f"params.p_max = {self.params.p_max}",
            f"params.series_terms = {self.params.series_terms}",
        ]
        return "\n".join(lines)


def _delta_tail_bound(params: TruncationParams, p_cap: float) -> float:
    """Positivity bound: the full Delta-series of 6^omega / Delta^(3/2) is
    an Euler product; whatever the truncation misses is below the product
    minus the partial sum, times the largest P(f) lambda psi seen."""
    ps = _grids_cached(params.p_max).one.astype(np.float64)
    full = float(np.exp(np.log1p(6.0 / ps**1.5).sum()))
    partial = 0.0
    for dI in enumerate_deltas(params.delta_max):
        partial += 6 ** len(dI.primes) / dI.delta**1.5
    return max(full - partial, 0.0) * p_cap


def constant_report(params: TruncationParams = TruncationParams()) -> ConstantReport:
    """alpha_3, the H-constants, and the assembled leading constants, with
    crude tail bounds for every truncation."""
    a3 = alpha_ell(3, params.p_max)
    hc = h_constants(params)
    c3 = 0.25 * (_C_H0 * hc.h0 + _C_H1 * hc.h1 + _C_H2 * hc.h2) * a3
    c_star = 0.25 / 27.0 * a3 * hc.h0
    c_star_f1 = 0.25 / 27.0 * a3 * hc.c_star_form1
    tails = {
        "euler": _euler_tail_bound(params.p_max),
        "delta": _delta_tail_bound(params, hc.p_of_f_max),
        "alpha": 3.0 / params.p_max,
        "c_star_forms_gap": abs(c_star_f1 - c_star) / c_star if c_star else 0.0,
    }
    return ConstantReport(
        alpha3=a3,
        h0=hc.h0,
        h1=hc.h1,
        h1_prime=hc.h1_prime,
        h2=hc.h2,
        c_heis3=c3,
        c_heis_star=c_star,
        tails=tails,
        params=params,
    )


# ---------------------------------------------------------------------------
# oscillation probe for twisted character sums over standard primes


@dataclass(frozen=True)
class CancellationSum:
    value: complex
    terms: int

    @property
    def normalized(self) -> float:
        return abs(self.value) / self.terms if self.terms else 0.0


def _check_pattern(
    f: SupportFunction,
    eps: tuple[int, int],
    pattern: dict[int, tuple[int, int]] | None,
) -> dict[int, tuple[int, int]]:
    if pattern is None:
        pattern = {r: (1, 0) for r in f.supp3}
    if eps[0] not in (0, 1) or eps[1] not in (0, 1) or sum(eps) > 1:
        raise ValueError("epsilon exponents must be 0/1 with sum <= 1")
    total = 0
    for r, (e1, e2) in pattern.items():
        if r not in f.supp3:
            raise ValueError(f"{r} is not a support prime of f away from 3")
        if e1 not in (0, 1) or e2 not in (0, 1) or e1 + e2 > 1:
            raise ValueError("per-prime exponents must be 0/1 with sum <= 1")
        total += e1 + e2
    if total < 1:
        raise ValueError("trivial exponent pattern: some e1 + e2 must be >= 1")
    return pattern


def char_cancellation_profile(
    f: SupportFunction,
    checkpoints: tuple[int, ...],
    eps: tuple[int, int] = (0, 0),
    pattern: dict[int, tuple[int, int]] | None = None,
    cache_dir: str | None = None,
) -> list[CancellationSum]:
    """Partial sums of M(pi) over standard primes with norm p <= x, at each
    checkpoint x, in one pass.

    M(pi) multiplies chi(f)(p)^eps1, chi(2f)(p)^eps2 and, for each chosen
    support prime r, [chi_r(p) (pi/rho_r)_3]^(2 e1 + e2); rho_r is the
    standard prime above r.  The sum is accumulated as exact counts of cube
    roots of unity, so reruns are bit-identical.
    """
    pattern = _check_pattern(f, eps, pattern)
    if any(x < 7 for x in checkpoints) or list(checkpoints) != sorted(checkpoints):
        raise ValueError("checkpoints must be ascending and >= 7")
    f2 = linear_combination(2, f, 0, f)
    rhos = {r: standard_decompose(r) for r in pattern}
    counts = [0, 0, 0]
    terms = 0
    out: list[CancellationSum] = []
    idx = 0
    w = np.exp(2j * np.pi * np.arange(3) / 3)
    for sp in standard_primes_up_to(checkpoints[-1], cache_dir):
        while idx < len(checkpoints) and sp.p > checkpoints[idx]:
            val = complex(counts[0] + counts[1] * w[1] + counts[2] * w[2])
            out.append(CancellationSum(val, terms))
            idx += 1
        terms += 1
        e = 0
        dead = False
        if eps[0] or eps[1]:
            v = chi_eval(f, sp.p)
            if v.is_zero:
                dead = True
            elif eps[0]:
                e += v.exp
            if not dead and eps[1]:
                v2 = chi_eval(f2, sp.p)
                if v2.is_zero:
                    dead = True
                else:
                    e += v2.exp
        if not dead:
            for r, (e1, e2) in pattern.items():
                k = 2 * e1 + e2
                if k == 0:
                    continue
                vr = chi_eval(SupportFunction(((r, 1),)), sp.p)
                vs = cubic_symbol(sp.pi, rhos[r])
                if vr.is_zero or vs.is_zero:
                    dead = True
                    break
                e += k * (vr.exp + vs.exp)
        if not dead:
            counts[e % 3] += 1
    while idx < len(checkpoints):
        val = complex(counts[0] + counts[1] * w[1] + counts[2] * w[2])
        out.append(CancellationSum(val, terms))
        idx += 1
    return out


def char_cancellation(
    f: SupportFunction,
    x: int,
    eps: tuple[int, int] = (0, 0),
    pattern: dict[int, tuple[int, int]] | None = None,
    cache_dir: str | None = None,
) -> CancellationSum:
    """One-checkpoint form of char_cancellation_profile."""
    return char_cancellation_profile(f, (x,), eps, pattern, cache_dir)[0]


# ---------------------------------------------------------------------------
# census-to-constant comparison grid


@dataclass(frozen=True)
class RatioRow:
    x: int
    count: float
    x_quarter: float
    ratio: float
    c_estimate: float
    ratio_over_c: float


RATIO_CSV_HEADER = "x,count,x_quarter,ratio,c_estimate,ratio_over_c"


def ratio_report(
    x_values: list[int],
    mode: WeightMode = WeightMode.OMEGA_FULL,
    c_estimate: float | None = None,
    params: TruncationParams = TruncationParams(),
) -> list[RatioRow]:
    """count(X) / X^(1/4) along a grid, against the predicted constant."""
    if c_estimate is None:
        c_estimate = constant_report(params).c_heis3
    rows = []
    for x in x_values:
        rep = heis_total(x, mode)
        count = float(rep.count)
        xq = x**0.25
        ratio = count / xq
        rows.append(
            RatioRow(
                x=x,
                count=count,
                x_quarter=xq,
                ratio=ratio,
                c_estimate=c_estimate,
                ratio_over_c=ratio / c_estimate,
            )
        )
    return rows


def ratio_csv(rows: list[RatioRow]) -> str:
    out = [RATIO_CSV_HEADER]
    for r in rows:
        out.append(
            f"{r.x},{r.count!r},{r.x_quarter!r},{r.ratio!r},"
            f"{r.c_estimate!r},{r.ratio_over_c!r}"
        )
    return "\n".join(out)
