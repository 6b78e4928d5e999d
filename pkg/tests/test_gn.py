"""Bracketing and solving the angular zero-counting function."""

import math
from fractions import Fraction

import mpmath as mp
import pytest

from hyprec.gn import (
    BracketError,
    GnProblem,
    _g_value_mp,
    brackets,
    g_value,
    predicted_roots,
    solve,
)
from hyprec.poly import all_roots
from hyprec.recurrence import RecurrenceParams, generate

ALPHAS = [Fraction(1, 9), Fraction(1, 20), Fraction(-1), Fraction(-10)]


class TestProblem:
    def test_validates_alpha(self):
        with pytest.raises(ValueError):
            GnProblem(3, Fraction(1, 8))
        with pytest.raises(ValueError):
            GnProblem(3, 0)
        GnProblem(3, Fraction(1, 9))

    def test_validates_n(self):
        with pytest.raises(ValueError):
            GnProblem(0, Fraction(-1))


class TestGValue:
    def test_domain(self):
        pr = GnProblem(4, Fraction(-1))
        with pytest.raises(ValueError):
            g_value(pr, 0.0)
        with pytest.raises(ValueError):
            g_value(pr, math.pi)
        with pytest.raises(ValueError):
            g_value(pr, math.pi / 2)

    @pytest.mark.parametrize("alpha", ALPHAS)
    @pytest.mark.parametrize("n", [2, 5, 9])
    def test_matches_high_precision_oracle(self, alpha, n):
        pr = GnProblem(n, alpha)
        for th in (0.17, 0.9, 1.3, 1.9, 2.6, 3.0):
            want = float(_g_value_mp(n, alpha, th, dps=50))
            got = g_value(pr, th)
            assert got == pytest.approx(want, rel=1e-9, abs=1e-9)

    def test_interior_grid_signs(self):
        # at theta_k = k pi/(n+1) the oscillatory part collapses and the
        # sign is -(-1)^k up to the small zeta tail
        pr = GnProblem(6, Fraction(-1))
        m = 7
        for k in (1, 2, 5, 6):
            th = k * math.pi / m
            v = g_value(pr, th)
            assert v * (-((-1) ** k)) > 0


class TestBrackets:
    # interval counts checked by hand against the sign layout
    CASES = [
        (4, Fraction(-1), 4, False),
        (4, Fraction(1, 20), 4, False),
        (5, Fraction(1, 20), 4, True),
        (2, Fraction(1, 9), 2, False),
        (1, Fraction(-1), 0, True),
        (3, Fraction(-1), 2, True),
        (8, Fraction(1, 9), 8, False),
        (9, Fraction(-10), 8, True),
    ]

    @pytest.mark.parametrize("n,alpha,count,origin", CASES)
    def test_counts(self, n, alpha, count, origin):
        bs = brackets(GnProblem(n, alpha))
        assert len(bs.intervals) == count
        assert bs.includes_origin_root is origin

    @pytest.mark.parametrize("n,alpha,count,origin", CASES)
    def test_endpoints_have_opposite_signs(self, n, alpha, count, origin):
        bs = brackets(GnProblem(n, alpha))
        for (lo, hi), (slo, shi) in zip(bs.intervals, bs.signs):
            assert lo < hi
            assert slo * shi < 0

    def test_intervals_disjoint_and_sorted(self):
        bs = brackets(GnProblem(12, Fraction(1, 9)))
        flat = [v for pair in bs.intervals for v in pair]
        assert flat == sorted(flat)


class TestSolve:
    @pytest.mark.parametrize("alpha", ALPHAS)
    @pytest.mark.parametrize("n", [4, 5, 11])
    def test_roots_annihilate_g(self, alpha, n):
        pr = GnProblem(n, alpha)
        for th in solve(pr):
            assert abs(g_value(pr, th)) < 1e-8

    def test_roots_strictly_ordered(self):
        ths = solve(GnProblem(14, Fraction(-1)))
        assert all(b > a for a, b in zip(ths, ths[1:]))

    def test_refined_against_high_precision(self):
        pr = GnProblem(7, Fraction(1, 20))
        for th in solve(pr):
            lo, hi = th - 1e-9, th + 1e-9
            flo = _g_value_mp(7, Fraction(1, 20), lo, dps=50)
            fhi = _g_value_mp(7, Fraction(1, 20), hi, dps=50)
            assert mp.sign(flo) != mp.sign(fhi)


class TestPredictedRoots:
    @pytest.mark.parametrize("alpha", ALPHAS)
    @pytest.mark.parametrize("n", [1, 4, 9, 16])
    def test_count_equals_degree(self, alpha, n):
        zs = predicted_roots(GnProblem(n, alpha))
        assert len(zs) == n
        assert zs == sorted(zs)

    def test_odd_n_contains_origin(self):
        zs = predicted_roots(GnProblem(7, Fraction(-1)))
        assert 0.0 in zs

    @pytest.mark.parametrize("alpha", ALPHAS)
    def test_matches_polynomial_roots(self, alpha):
        n = 12
        zs = predicted_roots(GnProblem(n, alpha))
        p = generate(RecurrenceParams(1, 1, alpha), n)[n]
        direct = sorted(r.real for r in all_roots(p))
        assert max(abs(a - b) for a, b in zip(zs, direct)) < 1e-9

    def test_symmetric_about_origin(self):
        zs = predicted_roots(GnProblem(10, Fraction(1, 9)))
        for a, b in zip(zs, reversed(zs)):
            assert a == pytest.approx(-b, abs=1e-9)
