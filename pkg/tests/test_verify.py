"""The verification suites at reduced bounds, and their helpers."""

import pytest

from heisnine.eisenstein import EisensteinInt, standard_decompose
from heisnine.verify import (
    SUITE_NAMES,
    _symbol_inert,
    _symbol_primary,
    indicator_pairs,
    run_suite,
)

from oracles import symbol_exp_by_euler


SMALL_BOUNDS = {
    "reciprocity": 600,
    "symbols": 600,
    "indicator": 31,
    "integrality": 10**13,
    "subsum-identities": 10**13,
    "ksum": 300,
}


@pytest.mark.parametrize("name", SUITE_NAMES)
def test_suites_pass_at_small_bounds(name):
    res = run_suite(name, SMALL_BOUNDS[name])
    assert res.ok, res.failures
    assert res.checks > 0
    assert res.suite == name


def test_unknown_suite_rejected():
    with pytest.raises(ValueError):
        run_suite("everything")
    with pytest.raises(ValueError):
        run_suite("ksum", 0)


def test_result_text_shape():
    res = run_suite("ksum", 200)
    line = res.to_text().splitlines()[0]
    assert line == f"suite=ksum bound=200 checks={res.checks} failures=0"


def test_general_symbol_matches_oracle():
    for p in (7, 13, 19, 31):
        sp = standard_decompose(p)
        for a in range(-3, 4):
            for b in range(-3, 4):
                alpha = EisensteinInt(a, b)
                e = symbol_exp_by_euler((a, b), p)
                got = _symbol_primary(alpha, sp.pi)
                assert (got.exp is None) == (e is None)
                if e is not None:
                    assert got.exp == e


def test_inert_symbol_cube_classes():
    # (alpha/q) = 1 exactly on nonzero cubes of F_{q^2} = Z[j]/(q)
    q = 5
    cubes = set()
    for a in range(q):
        for b in range(q):
            if a or b:
                c = EisensteinInt(a, b)
                c3 = c * c * c
                cubes.add((c3.a % q, c3.b % q))
    for a in range(q):
        for b in range(q):
            v = _symbol_inert(EisensteinInt(a, b), q)
            if a == 0 and b == 0:
                assert v.is_zero
            else:
                assert (v.exp == 0) == ((a % q, b % q) in cubes)


def test_indicator_pair_universe_census():
    pairs = indicator_pairs(31)
    # split primes 7, 13, 19, 31: 4 two-prime supports with 3, 6 without,
    # 6 three-prime supports, each span contributing 48 ordered bases
    assert len(pairs) == 4 * 48 + 6 * 48 + 6 * 480
    assert len({(f.entries, fp.entries) for f, fp in pairs}) == len(pairs)
    for f, fp in pairs:
        assert not f.is_zero and not fp.is_zero
        assert fp.entries != f.entries
