"""Polynomial container, exact real-root counting, and the certified
root-extraction pipeline."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyprec.poly import (
    Polynomial,
    all_roots,
    count_real_roots,
    squarefree_part,
)

rational = st.fractions(
    min_value=Fraction(-50), max_value=Fraction(50), max_denominator=20
)


class TestContainer:
    def test_exact_coefficients_stay_exact(self):
        p = Polynomial([Fraction(1, 3), 1, 2])
        assert p.backend == "exact"
        assert p.coefficient(0) == Fraction(1, 3)
        assert p.coefficient(5) == 0

    def test_float_contaminates(self):
        p = Polynomial([Fraction(1, 3), 0.5])
        assert p.backend == "float"

    def test_trailing_zeros_trimmed(self):
        assert Polynomial([1, 2, 0, 0]).degree == 1

    def test_zero_polynomial_degree_none(self):
        assert Polynomial([0]).degree is None

    def test_eval_matches_horner_by_hand(self):
        p = Polynomial([6, -5, -2, 1])
        assert p(Fraction(1, 2)) == Fraction(25, 8)
        assert p(1) == 0

    def test_derivative(self):
        p = Polynomial([6, -5, -2, 1])
        assert p.derivative() == Polynomial([-5, -4, 3])

    def test_ring_ops(self):
        p = Polynomial([1, 1])
        q = Polynomial([-1, 1])
        assert p * q == Polynomial([-1, 0, 1])
        assert p + q == Polynomial([0, 2])
        assert p - p == Polynomial([])
        assert 3 * p == Polynomial([3, 3])

    def test_nonfinite_rejected(self):
        with pytest.raises(ValueError):
            Polynomial([1.0, float("inf")])

    @given(st.lists(rational, min_size=1, max_size=6), rational)
    @settings(max_examples=40, deadline=None)
    def test_eval_is_linear_in_coefficients(self, cs, x):
        p = Polynomial(cs)
        q = Polynomial(list(reversed(cs)))
        assert (p + q)(x) == p(x) + q(x)

    @given(
        st.lists(rational, min_size=1, max_size=5),
        st.lists(rational, min_size=1, max_size=5),
        rational,
    )
    @settings(max_examples=40, deadline=None)
    def test_product_evaluates_pointwise(self, a, b, x):
        assert (Polynomial(a) * Polynomial(b))(x) == Polynomial(a)(x) * Polynomial(b)(x)


class TestSquarefree:
    def test_strips_multiplicity(self):
        # (x-1)^3 (x+2)^2 -> monic (x-1)(x+2)
        cube = Polynomial([-1, 1]) * Polynomial([-1, 1]) * Polynomial([-1, 1])
        sq = Polynomial([2, 1]) * Polynomial([2, 1])
        out = squarefree_part(cube * sq)
        assert out == Polynomial([-1, 1]) * Polynomial([2, 1])

    def test_already_squarefree_becomes_monic(self):
        p = Polynomial([Fraction(6), -5, -2, 1]) * 7
        assert squarefree_part(p) == Polynomial([6, -5, -2, 1])

    def test_float_input_handled_exactly(self):
        out = squarefree_part(Polynomial([0.25, -1.0, 1.0]))  # (x - 1/2)^2
        assert out == Polynomial([Fraction(-1, 2), 1])


class TestCountRealRoots:
    def test_cubic_with_known_roots(self):
        p = Polynomial([6, -5, -2, 1])  # roots 1, -2, 3
        assert count_real_roots(p, -10, 10) == 3
        assert count_real_roots(p, 0, 2) == 1
        assert count_real_roots(p, Fraction(3, 2), 10) == 1

    def test_endpoint_on_root_is_nudged_outward(self):
        p = Polynomial([6, -5, -2, 1])
        assert count_real_roots(p, 1, 3) == 2
        assert count_real_roots(p, -2, 3) == 3

    def test_counts_distinct_not_multiplicity(self):
        q = Polynomial([1, -2, 1])  # (x-1)^2
        assert count_real_roots(q, 0, 2) == 1
        tri = q * Polynomial([-1, 1])  # (x-1)^3
        assert count_real_roots(tri, 0, 2) == 1

    def test_no_real_roots(self):
        assert count_real_roots(Polynomial([1, 0, 1]), -10, 10) == 0

    def test_float_backend_rejected(self):
        with pytest.raises(ValueError):
            count_real_roots(Polynomial([1.5, 1.0]), -1, 1)

    @given(st.lists(st.integers(-9, 9), min_size=2, max_size=5))
    @settings(max_examples=50, deadline=None)
    def test_count_never_exceeds_degree(self, roots_ints):
        p = Polynomial([1])
        for r in roots_ints:
            p = p * Polynomial([-r, 1])
        n = count_real_roots(p, -100, 100)
        assert n == len(set(roots_ints))


class TestAllRoots:
    def test_linear(self):
        assert all_roots(Polynomial([Fraction(3), 2])) == [complex(-1.5, 0)]

    def test_constant_rejected(self):
        with pytest.raises(ValueError):
            all_roots(Polynomial([5]))

    def test_origin_roots_deflated_exactly(self):
        p = Polynomial([0, 0, 0, 1, 1])  # z^3 (z + 1)
        roots = all_roots(p)
        assert sum(1 for r in roots if r == 0) == 3
        assert min(abs(r + 1) for r in roots) < 1e-12

    def test_multiplicity_preserved_in_length(self):
        p = Polynomial([1, -2, 1]) * Polynomial([1, 1])  # (x-1)^2 (x+1)
        roots = all_roots(p)
        assert len(roots) == 3
        assert sum(1 for r in roots if abs(r - 1) < 1e-6) == 2

    def test_wilkinson_style_integer_roots(self):
        p = Polynomial([1])
        for k in range(1, 13):
            p = p * Polynomial([-k, 1])
        roots = sorted(r.real for r in all_roots(p))
        assert max(abs(roots[k - 1] - k) for k in range(1, 13)) < 1e-7

    def test_output_sorted_and_deterministic(self):
        p = Polynomial([6, -5, -2, 1])
        a = all_roots(p)
        b = all_roots(p)
        assert a == b
        assert a == sorted(a, key=lambda z: (z.real, z.imag))

    def test_pure_imaginary_quartet(self):
        p = Polynomial([1, 0, 3, 0, 1])  # z^4 + 3 z^2 + 1, roots on i*R
        for r in all_roots(p):
            assert abs(r.real) < 1e-12
        golden = (3 - math.sqrt(5)) / 2
        assert min(abs(r.imag**2 - golden) for r in all_roots(p)) < 1e-12

    def test_float_polynomial_accepted(self):
        roots = all_roots(Polynomial([-1.0, 0.0, 1.0]))
        assert min(abs(r - 1) for r in roots) < 1e-12
        assert min(abs(r + 1) for r in roots) < 1e-12
