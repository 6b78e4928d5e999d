"""Certification reports, counterexample search, dominance probes,
density, and the pure-imaginary diagnostic family."""

import math
from fractions import Fraction

import pytest

from hyprec.analysis import (
    certify,
    cubic_discriminant,
    density_profile,
    dominance_at,
    first_nonreal,
    imaginary_axis_check,
    reciprocal_dominance,
    zero_approach,
)
from hyprec.params import lambda_bound
from hyprec.poly import count_real_roots
from hyprec.recurrence import RecurrenceParams, generate


class TestCertify:
    def test_boundary_family_all_real(self):
        reps = certify(RecurrenceParams(1, 1, Fraction(1, 9)), 25)
        assert len(reps) == 25
        for r in reps:
            assert r.hyperbolic
            assert r.sturm_count == r.degree == r.n
            assert r.contained
            assert r.max_abs_root < r.lam
        assert reps[0].lam == pytest.approx(math.sqrt(3), abs=1e-12)

    def test_sturm_count_matches_direct_interval_count(self):
        params = RecurrenceParams(1, 1, Fraction(1, 20))
        reps = certify(params, 12)
        seq = generate(params, 12)
        bound = Fraction(2)  # lam(1/20) < 1.9
        for r in reps:
            assert r.sturm_count == count_real_roots(seq[r.n], -bound, bound)

    def test_above_boundary_fails_eventually(self):
        reps = certify(RecurrenceParams(1, 1, Fraction(1, 5)), 12)
        flags = [r.hyperbolic for r in reps]
        assert flags[:6] == [True] * 6
        assert not flags[6]  # n = 7 is the first failure
        assert all(r.lam is None for r in reps)
        assert not any(r.contained for r in reps)

    def test_negative_alpha_admissible(self):
        reps = certify(RecurrenceParams(1, 1, -9), 10)
        assert all(r.hyperbolic and r.contained for r in reps)

    def test_general_parameters_scale_the_interval(self):
        # (a, b, c) = (2, 4, 8/9): alpha = 1/9, zeros shrink by sqrt(b)/|a| = 1
        reps = certify(RecurrenceParams(Fraction(2), Fraction(4), Fraction(8, 9)), 8)
        assert all(r.hyperbolic and r.contained for r in reps)
        assert reps[0].lam == pytest.approx(math.sqrt(3), abs=1e-12)

    def test_degenerate_three_term_family(self):
        reps = certify(RecurrenceParams(1, -1, 0), 6)
        assert reps[0].hyperbolic  # P_1 = -z has the real zero 0
        assert not reps[1].hyperbolic  # z^2 + 1
        assert all(r.lam is None and not r.contained for r in reps)

    def test_float_params_rejected(self):
        with pytest.raises(ValueError):
            certify(RecurrenceParams(1.0, 1.0, 0.05), 5)


class TestFirstNonreal:
    def test_integer_alpha_two(self):
        rec = first_nonreal(RecurrenceParams(1, 1, 2), 50)
        assert rec.first_nonreal_n == 4
        assert abs(rec.witness_root.imag) > 0.5

    def test_negative_b_family(self):
        rec = first_nonreal(RecurrenceParams(1, -1, Fraction(1, 10)), 50)
        assert rec.first_nonreal_n == 2

    def test_clean_scan_returns_empty_record(self):
        rec = first_nonreal(RecurrenceParams(1, 1, Fraction(1, 9)), 40)
        assert rec.first_nonreal_n is None
        assert rec.witness_root is None

    def test_witness_certified_before_reported(self):
        # the reported n must genuinely lose a real root: cross-check with
        # the exact interval count on a generous interval
        rec = first_nonreal(RecurrenceParams(1, 1, Fraction(1, 5)), 20)
        n = rec.first_nonreal_n
        p = generate(RecurrenceParams(1, 1, Fraction(1, 5)), n)[n]
        assert count_real_roots(p, -100, 100) < n


class TestCubicDiscriminant:
    def test_depressed_cube(self):
        assert cubic_discriminant(1, 0, 0, -1) == -27  # y^3 - 1

    def test_section_family_values(self):
        # disc(1 + y - y^2 - alpha y^3) = 5 + 22 alpha - 27 alpha^2
        for alpha in (Fraction(1), Fraction(2), Fraction(1, 3), Fraction(-2)):
            got = cubic_discriminant(-alpha, Fraction(-1), Fraction(1), Fraction(1))
            assert got == 5 + 22 * alpha - 27 * alpha**2
        assert cubic_discriminant(-1, -1, 1, 1) == 0
        assert cubic_discriminant(-2, -1, 1, 1) == -59

    def test_leading_zero_rejected(self):
        with pytest.raises(ValueError):
            cubic_discriminant(0, 1, 1, 1)


def _bisect_real_root(f, lo, hi):
    flo = f(lo)
    for _ in range(100):
        mid = (lo + hi) / 2
        fm = f(mid)
        if flo * fm <= 0:
            hi = mid
        else:
            lo, flo = mid, fm
    return (lo + hi) / 2


class TestDominance:
    def test_alpha_two_matches_independent_moduli(self):
        # map t -> -i y turns the probe cubic at z = i into the real cubic
        # 1 + y - y^2 - 2 y^3 whose positive root fixes all three moduli
        y3 = _bisect_real_root(lambda y: 1 + y - y * y - 2 * y**3, 0.5, 1.0)
        rep = dominance_at(1j, 2)
        assert rep.t_moduli[2] == pytest.approx(y3, abs=1e-9)
        assert rep.t_moduli[0] == pytest.approx(1 / math.sqrt(2 * y3), abs=1e-9)
        assert rep.t_moduli[0] == pytest.approx(rep.t_moduli[1], abs=1e-12)
        assert rep.two_dominant
        assert rep.distinct_nonzero
        assert rep.t_moduli[1] <= rep.t_moduli[2]

    def test_alpha_one_repeated_root(self):
        rep = dominance_at(1j, 1)
        assert not rep.distinct_nonzero
        assert not rep.two_dominant
        for m in rep.t_moduli:
            assert m == pytest.approx(1.0, abs=1e-6)

    def test_degenerate_rejected(self):
        with pytest.raises(ValueError):
            dominance_at(0j, 2)

    def test_moduli_sorted(self):
        rep = dominance_at(0.3 + 0.7j, Fraction(3, 2))
        assert list(rep.t_moduli) == sorted(rep.t_moduli)
        assert rep.star_roots is None


class TestReciprocalDominance:
    def test_small_probe_near_limit_roots(self):
        rep = reciprocal_dominance(complex(0, 1e-6), Fraction(1, 10))
        mags = sorted(abs(r) for r in rep.star_roots)
        # reversed-cubic roots tend to {0, -1, 1}
        assert mags[0] < 1e-5
        assert mags[1] == pytest.approx(1.0, abs=1e-5)
        assert mags[2] == pytest.approx(1.0, abs=1e-5)
        assert rep.two_dominant
        assert rep.distinct_nonzero

    def test_translated_moduli_are_reciprocals(self):
        rep = reciprocal_dominance(complex(0, 1e-4), Fraction(1, 10))
        inv = sorted(1 / abs(r) for r in rep.star_roots)
        assert list(rep.t_moduli) == pytest.approx(inv, rel=1e-12)

    def test_zero_c_rejected(self):
        with pytest.raises(ValueError):
            reciprocal_dominance(1e-3j, 0)

    def test_origin_probe_rejected(self):
        with pytest.raises(ValueError):
            reciprocal_dominance(0j, Fraction(1, 10))


class TestZeroApproach:
    def test_distances_shrink_toward_limit_point(self):
        d = zero_approach(1j, RecurrenceParams(1, 1, 2), [20, 60])
        assert d[1] < d[0]

    def test_requires_ascending_list(self):
        with pytest.raises(ValueError):
            zero_approach(1j, RecurrenceParams(1, 1, 2), [20, 10])

    def test_point_off_the_locus_stays_far(self):
        d = zero_approach(5 + 5j, RecurrenceParams(1, 1, Fraction(1, 9)), [10, 30])
        assert min(d) > 4.0


class TestDensity:
    def test_gap_shrinks_with_n(self):
        small = density_profile(Fraction(-1), 25)
        big = density_profile(Fraction(-1), 60)
        assert big.max_gap_central < small.max_gap_central

    def test_roots_inside_open_interval(self):
        prof = density_profile(Fraction(-1), 40)
        lam = lambda_bound(Fraction(-1))
        assert prof.lam == pytest.approx(lam)
        assert all(-lam < r < lam for r in prof.union_roots)
        assert list(prof.union_roots) == sorted(prof.union_roots)

    def test_root_count_is_triangular(self):
        prof = density_profile(Fraction(1, 9), 12)
        assert len(prof.union_roots) == 12 * 13 // 2

    def test_single_polynomial_profile(self):
        prof = density_profile(Fraction(-1), 1)
        assert len(prof.union_roots) == 1
        assert prof.max_gap_central == pytest.approx(2 * 0.95 * prof.lam)


class TestImaginaryAxis:
    def test_family_stays_on_axis(self):
        assert imaginary_axis_check(30)
