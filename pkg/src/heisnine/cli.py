"""Command line front end.

Every subcommand writes one deterministic report to stdout (or --out) and
exits 0 on success, 1 on a domain error, 2 on a usage error.  Identical
invocations produce byte-identical output; --threads and the standard-prime
cache change timing only.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from decimal import Decimal, InvalidOperation

from .charspace import delta
from .constants import (
    RATIO_CSV_HEADER,
    TruncationParams,
    constant_report,
    ratio_csv,
    ratio_report,
)
from .counting import (
    CountReport,
    TermRecord,
    WeightMode,
    enumerate_terms,
    heis_total,
)
from .eisenstein import CACHE_ENV, EisensteinInt, chi_p, standard_decompose
from .ksum import k_direct
from .verify import SUITE_NAMES, run_suite

__all__ = ["main", "run"]


def _exact_int(text: str) -> int:
    """Integer flag parser; scientific notation is accepted when the value
    is exactly integral (6e12 yes, 1.23e1 no)."""
    try:
        return int(text)
    except ValueError:
        pass
    try:
        d = Decimal(text)
    except InvalidOperation:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if not d.is_finite() or d != d.to_integral_value():
        raise argparse.ArgumentTypeError(f"not an exact integer: {text!r}")
    return int(d)


def _weight_mode(text: str) -> WeightMode:
    for m in WeightMode:
        if m.value == text:
            return m
    raise argparse.ArgumentTypeError(f"unknown weight mode {text!r}")


def _add_common(sp: argparse.ArgumentParser, formats: tuple[str, ...]) -> None:
    sp.add_argument("--format", choices=formats, default="text")
    sp.add_argument("--out", default=None, help="write the report to this file")
    sp.add_argument(
        "--cache-dir",
        default=None,
        help=f"standard-prime cache directory (wins over ${CACHE_ENV})",
    )
    sp.add_argument(
        "--threads",
        type=int,
        default=None,
        help="worker cap for the census; results do not depend on it",
    )


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="heisnine",
        description="census and constant pipeline for nonic Heisenberg fields",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    for name in ("count", "subsums"):
        sp = sub.add_parser(name)
        sp.add_argument("--x", type=_exact_int, required=True)
        sp.add_argument(
            "--weight-mode", type=_weight_mode, default=WeightMode.OMEGA_FULL
        )
        _add_common(sp, ("json", "csv", "text"))

    sp = sub.add_parser("terms")
    sp.add_argument("--x", type=_exact_int, required=True)
    sp.add_argument("--limit", type=int, default=None)
    sp.add_argument("--weight-mode", type=_weight_mode, default=WeightMode.OMEGA_FULL)
    _add_common(sp, ("json", "csv", "text"))

    sp = sub.add_parser("constant")
    sp.add_argument("--delta-max", type=int, default=2000)
    sp.add_argument("--p-max", type=_exact_int, default=10**6)
    sp.add_argument("--series-terms", type=_exact_int, default=10**6)
    _add_common(sp, ("json", "text"))

    sp = sub.add_parser("ksum")
    sp.add_argument("--x", type=_exact_int, required=True)
    sp.add_argument("--ell", type=int, required=True)
    sp.add_argument("--d", type=_exact_int, default=1)
    _add_common(sp, ("json", "csv", "text"))

    sp = sub.add_parser("symbol")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--n", type=_exact_int, required=True)
    _add_common(sp, ("json", "csv", "text"))

    sp = sub.add_parser("decompose")
    sp.add_argument("--p", type=int, required=True)
    _add_common(sp, ("json", "csv", "text"))

    sp = sub.add_parser("verify")
    sp.add_argument("--suite", choices=SUITE_NAMES, required=True)
    sp.add_argument("--bound", type=_exact_int, default=None)
    _add_common(sp, ("json", "text"))

    sp = sub.add_parser("report")
    sp.add_argument("--x-min", type=_exact_int, required=True)
    sp.add_argument("--x-max", type=_exact_int, required=True)
    sp.add_argument("--points", type=int, required=True)
    sp.add_argument("--weight-mode", type=_weight_mode, default=WeightMode.OMEGA_FULL)
    _add_common(sp, ("json", "csv", "text"))

    return ap


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text + "\n")
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")


def _cache_dir(args: argparse.Namespace) -> str | None:
    if getattr(args, "cache_dir", None):
        return args.cache_dir
    return os.environ.get(CACHE_ENV) or None


def _count_text(rep: CountReport, fmt: str, subsums_only: bool) -> str:
    if fmt == "json":
        return rep.to_json()
    if fmt == "csv":
        return rep.csv_header() + "\n" + rep.to_csv_row()
    if subsums_only:
        return "\n".join(f"{c.name} = {rep.subsums[c]}" for c in rep.subsums)
    return rep.to_text()


def _term_cells(t: TermRecord) -> list[str]:
    return [
        str(t.f),
        str(t.fp),
        str(t.d_class),
        str(t.big_d),
        t.cls.name,
        str(t.weight),
    ]


def _terms_text(args: argparse.Namespace) -> str:
    records = list(enumerate_terms(args.x, args.weight_mode, args.limit))
    if args.format == "json":
        obj = {
            "x": args.x,
            "weight_mode": args.weight_mode.value,
            "terms": [
                {
                    "f": str(t.f),
                    "fp": str(t.fp),
                    "d_class": t.d_class,
                    "big_d": t.big_d,
                    "class": t.cls.name,
                    "weight": t.weight,
                }
                for t in records
            ],
        }
        return json.dumps(obj, separators=(",", ":"))
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["f", "fp", "d_class", "big_d", "class", "weight"])
        for t in records:
            w.writerow(_term_cells(t))
        return buf.getvalue().rstrip("\n")
    lines = [
        f"f={t.f} fp={t.fp} d_class={t.d_class} D={t.big_d} "
        f"class={t.cls.name} weight={t.weight}"
        for t in records
    ]
    lines.append(f"total_terms = {len(records)}")
    return "\n".join(lines)


def _symbol_text(p: int, n: int, fmt: str) -> str:
    v = chi_p(p, n)
    sym = "0" if v.is_zero else f"j^{v.exp}"
    if fmt == "json":
        return json.dumps(
            {"p": p, "n": n, "symbol": sym, "exp": v.exp}, separators=(",", ":")
        )
    if fmt == "csv":
        return f"p,n,symbol\n{p},{n},{sym}"
    return f"p={p} n={n} symbol={sym}"


def _decompose_text(p: int, fmt: str) -> str:
    sp = standard_decompose(p)
    if fmt == "json":
        obj = {"p": p, "pi": str(sp.pi), "a": sp.pi.a, "b": sp.pi.b, "r": sp.r}
        return json.dumps(obj, separators=(",", ":"))
    if fmt == "csv":
        return f"p,pi,r\n{p},{sp.pi},{sp.r}"
    return f"p={p} pi={sp.pi} r={sp.r}"


def _ratio_text(args: argparse.Namespace) -> str:
    rows = _log_points(args.x_min, args.x_max, args.points)
    out = ratio_report(rows, args.weight_mode)
    if args.format == "json":
        obj = [
            {
                "x": r.x,
                "count": r.count,
                "x_quarter": r.x_quarter,
                "ratio": r.ratio,
                "c_estimate": r.c_estimate,
                "ratio_over_c": r.ratio_over_c,
            }
            for r in out
        ]
        return json.dumps(obj, separators=(",", ":"))
    return ratio_csv(out)


def _log_points(lo: int, hi: int, n: int) -> list[int]:
    if lo < 1 or hi < lo or n < 1:
        raise ValueError("need 1 <= x-min <= x-max and points >= 1")
    if n == 1:
        return [hi]
    from math import exp, log

    pts = {lo, hi}
    for i in range(1, n - 1):
        pts.add(int(round(exp(log(lo) + (log(hi) - log(lo)) * i / (n - 1)))))
    return sorted(pts)


def run(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    cache = _cache_dir(args)
    try:
        if args.command in ("count", "subsums"):
            rep = heis_total(args.x, args.weight_mode, args.threads)
            _emit(_count_text(rep, args.format, args.command == "subsums"), args.out)
        elif args.command == "terms":
            _emit(_terms_text(args), args.out)
        elif args.command == "constant":
            params = TruncationParams(args.delta_max, args.p_max, args.series_terms)
            rep = constant_report(params)
            _emit(rep.to_json() if args.format == "json" else rep.to_text(), args.out)
        elif args.command == "ksum":
            k = k_direct(args.x, args.ell, args.d)
            if args.format == "json":
                obj = {"x": args.x, "ell": args.ell, "d": args.d, "k": k}
                _emit(json.dumps(obj, separators=(",", ":")), args.out)
            elif args.format == "csv":
                _emit(f"x,ell,d,k\n{args.x},{args.ell},{args.d},{k}", args.out)
            else:
                _emit(f"x={args.x} ell={args.ell} d={args.d} k={k}", args.out)
        elif args.command == "symbol":
            _emit(_symbol_text(args.p, args.n, args.format), args.out)
        elif args.command == "decompose":
            _emit(_decompose_text(args.p, args.format), args.out)
        elif args.command == "verify":
            res = run_suite(args.suite, args.bound, cache)
            if args.format == "json":
                obj = {
                    "suite": res.suite,
                    "bound": res.bound,
                    "checks": res.checks,
                    "failures": list(res.failures),
                }
                _emit(json.dumps(obj, separators=(",", ":")), args.out)
            else:
                _emit(res.to_text(), args.out)
            if not res.ok:
                return 1
        elif args.command == "report":
            _emit(_ratio_text(args), args.out)
    except (ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
