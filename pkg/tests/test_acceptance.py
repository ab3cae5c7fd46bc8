"""Acceptance suite.

One test per acceptance criterion, each exercised at its full stated range;
every comparison is exact (integer or rational equality, no tolerances).
A human-readable PASS line is printed per criterion (visible with ``pytest -s``);
the per-test PASSED/FAILED line of ``pytest -v`` mirrors it.
"""

import random
import time
from fractions import Fraction

import pytest

from invol.census import (
    CensusQuery,
    GroupBy,
    appendix_listing,
    enumerate_involutions,
    reconcile,
    run_census,
)
from invol.paths import enumerate_paths, involution_of_path, path_of_involution
from invol.perms import Permutation, all_involutions
from invol.series import (
    Series,
    gf_f_xy,
    gf_gamma_plus_delta_xy,
    gf_system_I4321,
    series_by_name,
    system_I3412_123,
    system_I3412_1234,
    system_I3412_132,
    system_I4321_132,
    system_I4321_312,
    verify_inflation_identity,
)
from invol.structure import (
    FineClass,
    classify,
    connected_components,
    is_simple,
    is_simple_via_path,
    type21_normal_form,
)

P = Permutation.parse
P4321 = P("4321")
P3412 = P("3412")


def report(name: str) -> None:
    print(f"ACCEPTANCE {name}: PASS")


def fixed_point_count(p: Permutation) -> int:
    return sum(1 for i in range(1, len(p) + 1) if p(i) == i)


def test_motzkin_counts():
    """Census of I_n(4321) equals the Motzkin series exactly through n = 14."""
    start = time.monotonic()
    series = series_by_name("I4321", 14)
    printed = [1, 2, 4, 9, 21, 51, 127]
    for n in range(1, 15):
        count = sum(1 for _ in enumerate_involutions(n, [P4321]))
        assert count == int(series.coefficient(n)), f"n={n}"
        if n <= 7:
            assert count == printed[n - 1]
    elapsed = time.monotonic() - start
    assert int(series.coefficient(14)) == 113634
    assert elapsed < 120, f"census took {elapsed:.1f}s"
    report(f"motzkin counts through n=14 ({elapsed:.1f}s)")


def test_simple_counts_and_dual_simplicity_routes():
    """Simple members of I_n(4321) match gamma(x) for n = 5..12, and the path
    criterion agrees with the interval oracle on every involution tested."""
    gamma = series_by_name("gamma_x", 12)
    printed = {5: 2, 6: 4, 7: 6, 8: 15, 9: 31, 10: 67, 11: 155, 12: 343}
    for n in range(1, 13):
        simple_count = 0
        for p in enumerate_involutions(n, [P4321]):
            brute = is_simple(p)
            assert is_simple_via_path(p) == brute
            if brute:
                simple_count += 1
        assert simple_count == int(gamma.coefficient(n)), f"n={n}"
        if n >= 5:
            assert simple_count == printed[n]
    report("simple counts 2,4,6,15,31,67,155,343 at n=5..12; dual routes agree")


def test_gamma_plus_delta_counts():
    """Simple-plus-inflation members match 2,6,18,47,123,318 for n = 5..10."""
    printed = {5: 2, 6: 6, 7: 18, 8: 47, 9: 123, 10: 318}
    series = series_by_name("gamma_plus_delta", 10)
    for n in range(1, 11):
        count = sum(
            1
            for p in enumerate_involutions(n, [P4321])
            if classify(p) in (FineClass.SIMPLE, FineClass.INFLATION_OF_SIMPLE)
        )
        assert count == int(series.coefficient(n)), f"n={n}"
        if n >= 5:
            assert count == printed[n]
    report("gamma+delta counts 2,6,18,47,123,318 at n=5..10")


def test_appendix_golden_sets():
    """Exact set equality with the published simple involutions, n = 5, 6, 7."""
    golden = {
        5: {"35142", "42513"},
        6: {"351624", "426153", "526413", "463152"},
        7: {"4261735", "4631725", "3614725", "3617524", "3517264", "5274163"},
    }
    for n, expected in golden.items():
        assert {p.compact() for p in appendix_listing(n)} == expected
    report("appendix golden sets n=5,6,7")


def test_fixed_point_refinement():
    """Census histograms equal the bivariate series through n = 10, including
    the census-resolved x^4 term of the full class series."""
    f_xy = gf_f_xy(10)
    gd_xy = gf_gamma_plus_delta_xy(10)
    assert f_xy.y_polynomial(4) == (2, 0, 6, 0, 1)  # the corrected term
    for n in range(1, 11):
        whole = run_census(CensusQuery(n, (P4321,), GroupBy.FIXED_POINTS))
        for k in range(n + 1):
            expected = int(f_xy.coefficient(n, k))
            assert whole.buckets.get(k, 0) == expected, f"f(x,y) n={n} k={k}"
        fine = run_census(CensusQuery(n, (P4321,), GroupBy.FINE_CLASS_FIXED_POINTS))
        for k in range(n + 1):
            count = fine.buckets.get((FineClass.SIMPLE, k), 0) + fine.buckets.get(
                (FineClass.INFLATION_OF_SIMPLE, k), 0
            )
            assert count == int(gd_xy.coefficient(n, k)), f"(g+d)(x,y) n={n} k={k}"
    report("fixed-point refinement matches f(x,y) and (gamma+delta)(x,y) to n=10")


def test_double_avoidance():
    """All five double-avoidance systems match their census exactly to n = 10;
    the printed sequences and closed forms hold; two classes coincide."""
    printed = {
        "I4321_132": [1, 2, 3, 5, 7, 10, 13, 17],
        "I4321_312": [1, 2, 4, 7, 13, 24, 44, 81],
        "I3412_1234": [1, 2, 4, 8, 16, 29, 51],
        "I3412_132": [1, 2, 3, 5, 8, 13],
        "I3412_213": [1, 2, 3, 5, 8, 13],
        "I3412_123": [1, 2, 3, 5, 7, 10, 13, 17],
    }
    for name, seq in printed.items():
        rep = reconcile(name, 10)
        assert rep.passed, name
        assert [r.census_count for r in rep.rows[: len(seq)]] == seq, name
    half_grid = series_by_name("I4321_132", 10)
    for n in range(1, 11):
        assert int(half_grid.coefficient(n)) == 1 + ((n + 1) // 2) * (n // 2)
    assert series_by_name("I3412_123", 10) == half_grid
    report("double avoidance sequences exact through n=10")


def test_structure_theorems():
    """The structural properties hold exhaustively over their stated ranges."""
    # adjacent deficiencies correspond to ascending-consecutive excedance
    # values (and the excedance-side mirror), n <= 10
    for n in range(1, 11):
        for p in enumerate_involutions(n, [P4321]):
            trans = p.cycle_decomposition().transpositions
            for (m1, b1), (m2, b2) in zip(trans, trans[1:]):
                assert (abs(b2 - b1) == 1) == (b2 == b1 + 1)
                assert (abs(m2 - m1) == 1) == (m2 == m1 + 1)
    # negative control from outside the class
    trans = P("932857641").cycle_decomposition().transpositions
    assert any(
        abs(b2 - b1) == 1 and b2 != b1 + 1
        for (_, b1), (_, b2) in zip(trans, trans[1:])
    )

    # simple members have no adjacent fixed points (no HH), n <= 12
    for n in range(1, 13):
        for p in enumerate_involutions(n, [P4321]):
            if is_simple(p):
                assert "HH" not in path_of_involution(p).steps

    # every inflation of 21 in the class has a run normal form, n <= 10
    for n in range(2, 11):
        for p in enumerate_involutions(n, [P4321]):
            if classify(p) is FineClass.TYPE21:
                assert type21_normal_form(p) is not None

    # reverse-complement preserves the fine class and simplicity, n <= 10
    for n in range(1, 11):
        for p in enumerate_involutions(n, [P4321]):
            mirror = p.reverse_complement()
            assert classify(mirror) is classify(p)
            assert is_simple(mirror) == is_simple(p)

    # the 3412-avoiding class has no simple member of length 3..12
    for n in range(3, 13):
        for p in enumerate_involutions(n, [P3412]):
            assert not is_simple(p)

    # connected 3412-avoiding members pin n first and 1 last, 2 <= n <= 12
    for n in range(2, 13):
        for p in enumerate_involutions(n, [P3412]):
            if len(connected_components(p)) == 1:
                assert p(1) == n and p(n) == 1
    report("structure theorem property suites exhaustive at stated ranges")


def test_bijection_round_trips():
    """Exact path round trips: involutions n <= 10, labelled paths n <= 8."""
    for n in range(1, 11):
        for p in all_involutions(n):
            assert involution_of_path(path_of_involution(p)) == p
    for n in range(1, 9):
        for path in enumerate_paths(n):
            assert path_of_involution(involution_of_path(path)) == path
    report("bijection round trips involutions n<=10, paths n<=8")


def test_series_engine():
    """Ring-operation round trips, systems verified by back-substitution to
    order 24, and the inflation identity to order 14."""
    rng = random.Random(20250809)

    def random_series(order, unit_constant):
        head = [Fraction(1)] if unit_constant else [Fraction(rng.randint(-3, 3))]
        tail = [
            Fraction(rng.randint(-6, 6), rng.randint(1, 5)) for _ in range(order)
        ]
        return Series(head + tail)

    for _ in range(100):
        s = random_series(10, unit_constant=True)
        root = s.sqrt()
        assert root * root == s
        a = random_series(10, unit_constant=False)
        b = random_series(10, unit_constant=True)
        assert (a / b) * b == a
        inner = Series([Fraction(0)] + list(random_series(9, False).coeffs))
        composed = a.compose(inner)
        assert composed.coefficient(0) == a.coefficient(0)

    order = 24
    x = Series.x(order)
    parts = gf_system_I4321(order)
    assert parts["f"] == x + parts["alpha"] + parts["beta"] + parts["gamma_plus_delta"]
    assert parts["beta"] == x**2 / ((1 - x**2) * (1 - x))
    assert parts["alpha"] == (x + parts["beta"] + parts["gamma_plus_delta"]) * (
        x + parts["alpha"] + parts["beta"] + parts["gamma_plus_delta"]
    )

    xr = x / (1 - x)
    s132 = system_I4321_132(order)
    assert s132["f"] == x + s132["alpha"] + s132["beta"]
    assert s132["beta"] == x**2 / ((1 - x**2) * (1 - x))
    assert s132["alpha"] == (x + s132["beta"]) * xr

    s312 = system_I4321_312(order)
    assert s312["f"] == x + s312["alpha"] + s312["beta"]
    assert s312["beta"] == x**2 + x**3
    assert s312["alpha"] == (x + s312["beta"]) * s312["f"]

    s123 = system_I3412_123(order)
    assert s123["f"] == x + s123["alpha"] + s123["beta"]
    assert s123["beta"] == x**2 * s123["f"] + x**2
    assert s123["alpha"] == (x + x**2 / (1 - x)) * xr

    s1234 = system_I3412_1234(order)
    g = s123["f"]
    assert s1234["f"] == x + s1234["alpha"] + s1234["beta"]
    assert s1234["beta"] == x**2 * s1234["f"] + x**2
    assert s1234["alpha"] == (g * x**2 + x**2 - x**2 / (1 - x)) * xr + xr * g

    s_fib = system_I3412_132(order)
    assert s_fib["f"] == x + s_fib["alpha"] + s_fib["beta"]
    assert s_fib["beta"] == x**2 * s_fib["f"] + x**2
    assert s_fib["alpha"] == (x + s_fib["beta"]) * xr

    verify_inflation_identity(14)
    report("series engine: properties, systems to order 24, inflation identity to 14")


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-v", "-s"]))
