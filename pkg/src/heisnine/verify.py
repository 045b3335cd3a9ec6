"""Self-contained verification suites behind the `verify` subcommand.

Each suite re-derives a property with an independent route where one exists
(general Euler criterion for reciprocity, trial-division brute force for the
K-sum) and reports a deterministic check count plus any failures.  Suites
never sample randomly, so two runs produce identical output.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import exp, isqrt, log

from ._primes import primes_up_to
from .charspace import SupportFunction, chi_eval, enumerate_V
from .counting import (
    SubsumClass,
    WeightMode,
    X_MAX,
    heis_subsum,
    heis_total,
    indicator,
)
from .eisenstein import (
    ROOT,
    CharValue,
    EisensteinInt,
    StandardPrime,
    ZERO,
    _J_POWERS,
    chi_p,
    cubic_symbol,
    divrem,
    is_primary,
    standard_primes_up_to,
)
from .ksum import k_direct

__all__ = ["SuiteResult", "SUITE_NAMES", "run_suite", "indicator_pairs"]


@dataclass(frozen=True)
class SuiteResult:
    suite: str
    bound: int
    checks: int
    failures: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_text(self) -> str:
        head = (
            f"suite={self.suite} bound={self.bound} checks={self.checks} "
            f"failures={len(self.failures)}"
        )
        return "\n".join([head, *self.failures])


class _Recorder:
    def __init__(self, cap: int = 20) -> None:
        self.checks = 0
        self.failures: list[str] = []
        self._cap = cap

    def check(self, ok: bool, msg: str) -> None:
        self.checks += 1
        if not ok and len(self.failures) < self._cap:
            self.failures.append(msg)


# ---------------------------------------------------------------------------
# general cubic symbol for primary denominators (independent of the
# StandardPrime-only routines in eisenstein)


def _divisible(n: EisensteinInt, d: EisensteinInt) -> bool:
    return divrem(n, d)[1].is_zero


def _symbol_primary(alpha: EisensteinInt, beta: EisensteinInt) -> CharValue:
    """(alpha / beta)_3 by Euler's criterion for any primary prime beta."""
    if not is_primary(beta):
        raise ValueError(f"{beta!r} is not primary")
    nb = beta.norm
    _, acc = divrem(alpha, beta)
    if acc.is_zero:
        return ZERO
    out = EisensteinInt(1, 0)
    e = (nb - 1) // 3
    while e:
        if e & 1:
            out = divrem(out * acc, beta)[1]
        acc = divrem(acc * acc, beta)[1]
        e >>= 1
    for m in range(3):
        if _divisible(out - _J_POWERS[m], beta):
            return ROOT(m)
    raise AssertionError(f"Euler criterion failed mod {beta!r}")


def _symbol_inert(alpha: EisensteinInt, q: int) -> CharValue:
    """(alpha / q)_3 for an inert prime q = 2 mod 3, working in F_{q^2}."""
    a, b = alpha.a % q, alpha.b % q
    if a == 0 and b == 0:
        return ZERO
    x, y = 1, 0
    e = (q * q - 1) // 3
    while e:
        if e & 1:
            x, y = (x * a - y * b) % q, (x * b + y * a - y * b) % q
        a, b = (a * a - b * b) % q, (2 * a * b - b * b) % q
        e >>= 1
    if y == 0 and x == 1:
        return ROOT(0)
    if x == 0 and y == 1:
        return ROOT(1)
    if x == q - 1 and y == q - 1:
        return ROOT(2)
    raise AssertionError(f"cube-power class mod {q} is not a root of unity")


def _primary_primes(
    norm_bound: int, cache_dir: str | None
) -> list[tuple[EisensteinInt, object]]:
    """Primary primes of Z[j] with norm <= norm_bound, prime to 3, each
    tagged with the data its fast symbol route needs."""
    out: list[tuple[EisensteinInt, object]] = []
    for sp in standard_primes_up_to(norm_bound, cache_dir):
        out.append((sp.pi, sp))
        out.append((sp.pi.conj(), sp))
    for q in map(int, primes_up_to(isqrt(norm_bound))):
        if q % 3 == 2:
            out.append((EisensteinInt(q, 0), q))
    out.sort(key=lambda t: (t[0].norm, t[0].a, t[0].b))
    return out


def _symbol_fast(alpha: EisensteinInt, beta: EisensteinInt, tag: object) -> CharValue:
    if isinstance(tag, int):
        return _symbol_inert(alpha, tag)
    sp: StandardPrime = tag
    if beta == sp.pi:
        return cubic_symbol(alpha, sp)
    return cubic_symbol(alpha.conj(), sp).conj()


def _suite_reciprocity(bound: int, cache_dir: str | None) -> _Recorder:
    rec = _Recorder()
    prs = _primary_primes(bound, cache_dir)
    slow_stride = 997
    n = 0
    for i, (a, ta) in enumerate(prs):
        for b, tb in prs[i + 1 :]:
            va = _symbol_fast(b, a, ta)
            vb = _symbol_fast(a, b, tb)
            rec.check(va == vb, f"reciprocity fails for {a} and {b}")
            n += 1
            if n % slow_stride == 0:
                # independent slow route keeps the fast residue routes honest
                rec.check(
                    va == _symbol_primary(b, a) and vb == _symbol_primary(a, b),
                    f"fast and general symbol routes differ at {a}, {b}",
                )
    return rec


def _suite_symbols(bound: int, cache_dir: str | None) -> _Recorder:
    rec = _Recorder()
    sps = list(standard_primes_up_to(bound, cache_dir))
    for sp in sps:
        # both library codepaths against the independent general routine
        for t in range(1, 8):
            alpha = EisensteinInt(t, (t * t + 1) % 7 - 3)
            want = _symbol_primary(alpha, sp.pi)
            rec.check(
                cubic_symbol(alpha, sp, method="fp") == want,
                f"fp symbol of {alpha} differs mod {sp.p}",
            )
            rec.check(
                cubic_symbol(alpha, sp, method="eis") == want,
                f"eis symbol of {alpha} differs mod {sp.p}",
            )
        # chi_p wraps the table route; spot-check and multiplicativity
        n1 = sp.p // 3 + 1
        n2 = sp.p // 2 + 1
        v1, v2 = chi_p(sp.p, n1), chi_p(sp.p, n2)
        rec.check(
            v1 == cubic_symbol(EisensteinInt(n1, 0), sp),
            f"chi_{sp.p}({n1}) differs from the symbol",
        )
        rec.check(
            v1 * v2 == chi_p(sp.p, n1 * n2),
            f"chi_{sp.p} not multiplicative at {n1},{n2}",
        )
        rec.check(
            chi_p(sp.p, sp.p) == ZERO and chi_p(sp.p, 1) == ROOT(0),
            f"chi_{sp.p} wrong at 0 or 1",
        )
    return rec


# ---------------------------------------------------------------------------
# indicator pairs: every independent ordered pair supported on at most two
# split primes besides 3, drawn from {3} + split primes <= prime_bound


def _pair_supports(prime_bound: int) -> list[tuple[int, ...]]:
    qs = [int(p) for p in primes_up_to(prime_bound) if p % 3 == 1]
    sups: list[tuple[int, ...]] = [(3,)]
    for i, q1 in enumerate(qs):
        sups.append((q1,))
        sups.append((3, q1))
        for q2 in qs[i + 1 :]:
            sups.append((q1, q2))
            sups.append((3, q1, q2))
    return sups


def _vector_pairs(k: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Ordered linearly independent pairs in F_3^k whose union support is
    all k coordinates."""
    vecs = [()]
    for _ in range(k):
        vecs = [v + (c,) for v in vecs for c in (0, 1, 2)]
    out = []
    for u in vecs:
        if not any(u):
            continue
        du = tuple(2 * c % 3 for c in u)
        for v in vecs:
            if not any(v) or v == u or v == du:
                continue
            if all(a or b for a, b in zip(u, v)):
                out.append((u, v))
    return out


def indicator_pairs(prime_bound: int) -> list[tuple[SupportFunction, SupportFunction]]:
    """Every ordered independent pair supported on at most two split primes
    besides 3, each pair listed once, at its exact union support."""
    out: list[tuple[SupportFunction, SupportFunction]] = []
    for sup in _pair_supports(prime_bound):
        vps = _vector_pairs(len(sup))
        fn: dict[tuple[int, ...], SupportFunction] = {}
        for pair in vps:
            for vec in pair:
                if vec not in fn:
                    fn[vec] = SupportFunction.of(dict(zip(sup, vec)))
        for u, v in vps:
            out.append((fn[u], fn[v]))
    return out


def _suite_indicator(bound: int, cache_dir: str | None) -> _Recorder:
    rec = _Recorder()
    for sup in _pair_supports(bound):
        vps = _vector_pairs(len(sup))
        fn = {vec: SupportFunction.of(dict(zip(sup, vec))) for p in vps for vec in p}
        vals: dict[tuple, int] = {}
        spans: dict[frozenset, set[int]] = {}
        bases: dict[frozenset, int] = {}
        for u, v in vps:
            w = indicator(fn[u], fn[v])
            rec.check(w in (0, 1), f"indicator on {sup} at {u},{v} is {w}")
            vals[(u, v)] = w
            key = frozenset(
                tuple((z * a + zp * b) % 3 for a, b in zip(u, v))
                for z in range(3)
                for zp in range(3)
                if z or zp
            )
            spans.setdefault(key, set()).add(w)
            bases[key] = bases.get(key, 0) + 1
        for (u, v), w in vals.items():
            rec.check(w == vals[(v, u)], f"indicator not symmetric on {sup} at {u},{v}")
        for key, got in spans.items():
            rec.check(
                len(got) == 1, f"indicator not constant on a span over {sup}"
            )
            rec.check(
                bases[key] == 48,
                f"a span over {sup} has {bases[key]} ordered bases, not 48",
            )
    return rec


def _log_grid(lo: int, hi: int, n: int) -> list[int]:
    if hi <= lo:
        return [lo]
    xs = {lo, hi}
    for i in range(1, n - 1):
        xs.add(int(round(exp(log(lo) + (log(hi) - log(lo)) * i / (n - 1)))))
    return sorted(xs)


def _suite_integrality(bound: int, cache_dir: str | None) -> _Recorder:
    rec = _Recorder()
    hi = min(bound, X_MAX)
    prev = None
    for x in _log_grid(10**9, hi, 12):
        rep = heis_total(x, WeightMode.OMEGA_FULL)
        rec.check(
            rep.raw_total % 108 == 0,
            f"raw_total({x}) = {rep.raw_total} not divisible by 108",
        )
        if prev is not None:
            rec.check(rep.count >= prev, f"count decreases at {x}")
        prev = rep.count
    if hi >= 10**9:
        rec.check(
            heis_total(10**9, WeightMode.OMEGA_FULL).count == 0,
            "count(10^9) is nonzero",
        )
    return rec


_STAR = WeightMode.OMEGA_STAR
_FULL = WeightMode.OMEGA_FULL


def _suite_subsums(bound: int, cache_dir: str | None) -> _Recorder:
    rec = _Recorder()
    hi = min(bound, X_MAX)
    for x in _log_grid(10**12, hi, 4):
        for mode in (_STAR, _FULL):
            total = heis_total(x, mode)
            parts = [heis_subsum(x, c, mode) for c in SubsumClass]
            rec.check(
                sum(parts) == total.raw_total,
                f"subsums do not add up at {x} under {mode.value}",
            )
        for k in range(2, 8):
            a = heis_subsum(x, SubsumClass(k), _STAR)
            b = heis_subsum(x, SubsumClass(k + 7), _STAR)
            rec.check(a == b, f"C{k+7}({x}) != C{k}({x}) under omega-star")
        c1 = heis_subsum(x // 3**12, SubsumClass.C1, _STAR)
        rec.check(
            heis_subsum(x, SubsumClass.C8, _STAR) == c1,
            f"C8({x}) != C1({x}//3^12) under omega-star",
        )
        c1f = heis_subsum(x // 3**12, SubsumClass.C1, _FULL)
        rec.check(
            heis_subsum(x, SubsumClass.C8, _FULL) == 2 * c1f,
            f"C8({x}) != 2 C1({x}//3^12) under omega-full",
        )
    return rec


def _squarefree_split_weight(n: int, d: int) -> int:
    """2^omega(n) if n is squarefree with all prime factors = 1 mod 3 and
    coprime to d, else 0.  Trial division; the brute route for the K-sum."""
    w = 1
    m = n
    q = 2
    while q * q <= m:
        if m % q == 0:
            m //= q
            if m % q == 0 or q % 3 != 1 or d % q == 0:
                return 0
            w *= 2
        q += 1
    if m > 1:
        if m % 3 != 1 or d % m == 0:
            return 0
        w *= 2
    return w


def _suite_ksum(bound: int, cache_dir: str | None) -> _Recorder:
    rec = _Recorder()
    hi = min(bound, 3000)
    for d in (1, 7, 13, 91):
        acc = 1 if d >= 1 else 0
        brute = {1: 1}
        for n in range(2, hi + 1):
            acc += _squarefree_split_weight(n, d)
            brute[n] = acc
        for x in (1, 2, 6, 7, 12, 48, 90, 91, hi // 2, hi):
            rec.check(
                k_direct(x, 3, d) == brute[x],
                f"k_direct({x},3,{d}) != brute force {brute[x]}",
            )
        rec.check(
            k_direct(hi, 3, d) <= k_direct(hi, 3, 1),
            f"K({hi};3,{d}) exceeds K({hi};3,1)",
        )
    rec.check(k_direct(10, 3, 1) == 3, "k_direct(10,3,1) != 3")
    rec.check(k_direct(100, 3, 1) == 27, "k_direct(100,3,1) != 27")
    rec.check(k_direct(100, 3, 7) == 21, "k_direct(100,3,7) != 21")
    return rec


_SUITES = {
    "reciprocity": (_suite_reciprocity, 10**4),
    "symbols": (_suite_symbols, 10**4),
    "indicator": (_suite_indicator, 200),
    "integrality": (_suite_integrality, 10**16),
    "subsum-identities": (_suite_subsums, 10**16),
    "ksum": (_suite_ksum, 2000),
}

SUITE_NAMES = tuple(_SUITES)


def run_suite(
    name: str, bound: int | None = None, cache_dir: str | None = None
) -> SuiteResult:
    if name not in _SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)}")
    fn, default = _SUITES[name]
    b = default if bound is None else bound
    if b < 1:
        raise ValueError("bound must be positive")
    rec = fn(b, cache_dir)
    return SuiteResult(name, b, rec.checks, tuple(rec.failures))
