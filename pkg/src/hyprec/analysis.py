"""End-to-end analysis: exact hyperbolicity certification, counterexample
search, root-dominance probes, zero density, and the b < 0 diagnostic.

Certification never trusts floating point: a polynomial counts as
hyperbolic only when an exact Sturm census finds as many distinct real
roots inside the certified interval as it has distinct complex roots in
total. Float roots appear in reports for location data, not for decisions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ._kernels import sign_variations, sturm_chain
from .gn import BracketError, GnProblem, predicted_roots
from .params import lambda_bound, predict_hyperbolic
from .poly import (
    _cauchy_bound,
    _exact_coeffs,
    _integer_coeffs,
    _nudged,
    _parity_split,
    _polish,
    all_roots,
)
from .recurrence import RecurrenceParams, generate

__all__ = [
    "CounterexampleRecord",
    "DensityProfile",
    "DominanceReport",
    "HyperbolicityReport",
    "certify",
    "cubic_discriminant",
    "density_profile",
    "dominance_at",
    "first_nonreal",
    "imaginary_axis_check",
    "reciprocal_dominance",
    "zero_approach",
]

_MODULUS_TOL = 1e-10


@dataclass(frozen=True)
class HyperbolicityReport:
    """Per-n certification: degree, exact real-root count on the certified
    interval, the all-real verdict, and float root containment data. lam is
    the interval half-width in original coordinates (None outside the
    predicted-hyperbolic class, where no closed-form interval exists)."""

    n: int
    degree: int
    sturm_count: int
    hyperbolic: bool
    max_abs_root: float
    lam: object
    contained: bool


@dataclass(frozen=True)
class DominanceReport:
    """Moduli ordering of the three t-roots at a probe point. two_dominant
    holds when the smallest two moduli agree to 1e-10 relative and the roots
    are simple and nonzero; star_roots carries the pre-reciprocal roots in
    the reversed-cubic probe."""

    z_probe: complex
    t_moduli: tuple
    two_dominant: bool
    distinct_nonzero: bool
    star_roots: tuple = None


@dataclass(frozen=True)
class DensityProfile:
    alpha: float
    n_max: int
    union_roots: tuple
    max_gap_central: float
    lam: float


@dataclass(frozen=True)
class CounterexampleRecord:
    params: RecurrenceParams
    first_nonreal_n: object
    witness_root: object


def _real_root_census(ints, bound):
    """(distinct real roots in (-bound, bound), distinct roots overall).

    Origin roots are deflated first; an even-powers-only remainder is
    counted through its half-degree reduction, where w > 0 corresponds to a
    symmetric pair of real roots and any other w to a nonreal pair.
    """
    sigma = 0
    while ints[sigma] == 0:
        sigma += 1
    work = ints[sigma:]
    d = len(work) - 1
    origin = 1 if sigma > 0 else 0
    if d == 0:
        return origin, origin
    h = _parity_split(work)
    if h is not None:
        chain = sturm_chain(h)
        gdeg = len(chain[-1]) - 1
        total = origin + 2 * ((len(h) - 1) - gdeg)
        hi = _nudged(h, bound * bound, +1)
        pos = sign_variations(chain, 0, 1) - sign_variations(
            chain, hi.numerator, hi.denominator
        )
        return origin + 2 * pos, total
    chain = sturm_chain(work)
    gdeg = len(chain[-1]) - 1
    total = origin + (d - gdeg)
    lo = _nudged(work, -bound, -1)
    hi = _nudged(work, bound, +1)
    inside = sign_variations(chain, lo.numerator, lo.denominator) - sign_variations(
        chain, hi.numerator, hi.denominator
    )
    return origin + inside, total


def _scaled_lambda(params):
    """Interval half-width mapped back to original coordinates: the
    normalized zeros scale by sqrt(b)/|a|."""
    alpha = Fraction(params.c) / (Fraction(params.a) * Fraction(params.b))
    lam = lambda_bound(alpha)
    return lam * math.sqrt(float(params.b)) / abs(float(params.a))


def _extreme_abs_root(params, n, hyperbolic):
    """Largest |zero| of P_n. When the family is certified all-real the
    extreme zeros come from the endpoint brackets of the parametrization
    (the zeros are monotone in theta), which avoids the much costlier
    escalated polynomial solver at high degree."""
    if hyperbolic:
        alpha = Fraction(params.c) / (Fraction(params.a) * Fraction(params.b))
        scale = math.sqrt(float(params.b)) / abs(float(params.a))
        try:
            zs = predicted_roots(GnProblem(n, alpha))
            return max(abs(zs[0]), abs(zs[-1])) * scale
        except BracketError:
            pass
    return max(abs(z) for z in all_roots(generate(params, n)[n]))


def certify(params, n_max):
    """Exact per-n hyperbolicity reports for n = 1 .. n_max.

    In the predicted-hyperbolic class the Sturm census runs on the interval
    (-B, B) with B one more than the closed-form half-width; outside it a
    Cauchy bound guarantees every real root is inside. The verdict is exact
    either way; float roots only fill the location columns.
    """
    if params.backend != "exact":
        raise ValueError("certification requires exact rational parameters")
    predicted = predict_hyperbolic(params)
    lam = _scaled_lambda(params) if predicted else None
    fixed_bound = Fraction(lam).limit_denominator(1 << 62) + 1 if predicted else None
    seq = generate(params, n_max)
    out = []
    for n in range(1, n_max + 1):
        p = seq[n]
        ints = _integer_coeffs(_exact_coeffs(p))
        bound = fixed_bound if predicted else _cauchy_bound(ints)
        real, total = _real_root_census(ints, bound)
        hyperbolic = real == total
        if predicted and hyperbolic:
            max_abs = _extreme_abs_root(params, n, True)
        else:
            max_abs = max(abs(z) for z in all_roots(p))
        out.append(
            HyperbolicityReport(
                n=n,
                degree=n,
                sturm_count=real,
                hyperbolic=hyperbolic,
                max_abs_root=max_abs,
                lam=lam,
                contained=lam is not None and max_abs < lam,
            )
        )
    return out


def first_nonreal(params, n_max=300):
    """Smallest n <= n_max whose P_n has a certified nonreal zero.

    The certificate is the exact census (never float imaginary parts); the
    witness root reported alongside is the float root with the largest
    imaginary part. Returns an empty record when every n passes.
    """
    exact = RecurrenceParams(
        Fraction(params.a), Fraction(params.b), Fraction(params.c)
    )
    seq = generate(exact, n_max)
    for n in range(1, n_max + 1):
        p = seq[n]
        ints = _integer_coeffs(_exact_coeffs(p))
        real, total = _real_root_census(ints, _cauchy_bound(ints))
        if real < total:
            witness = max(all_roots(p), key=lambda z: abs(z.imag))
            return CounterexampleRecord(
                params=params, first_nonreal_n=n, witness_root=witness
            )
    return CounterexampleRecord(params=params, first_nonreal_n=None, witness_root=None)


def cubic_discriminant(a3, a2, a1, a0):
    """Discriminant of a3 x**3 + a2 x**2 + a1 x + a0; negative exactly when
    there is one real root and a conjugate pair."""
    if a3 == 0:
        raise ValueError("leading coefficient must be nonzero")
    return (
        18 * a3 * a2 * a1 * a0
        - 4 * a2 ** 3 * a0
        + a2 ** 2 * a1 ** 2
        - 4 * a3 * a1 ** 3
        - 27 * a3 ** 2 * a0 ** 2
    )


def _cubic_roots(descending):
    rts = np.roots(descending)
    ascending = list(reversed(descending))
    return _polish(ascending, [complex(r) for r in rts])


def _distinct_nonzero(roots):
    scale = 1.0 + max(abs(r) for r in roots)
    for i in range(len(roots)):
        if abs(roots[i]) <= 1e-12:
            return False
        for j in range(i + 1, len(roots)):
            if abs(roots[i] - roots[j]) <= 1e-6 * scale:
                return False
    return True


def dominance_at(z_probe, alpha):
    """Moduli report for the roots of 1 + z t + t**2 + alpha z t**3.

    Dominant indices correspond to the smallest |t| (the exponential-sum
    weights are reciprocals of the t-roots), so the headline flag asks
    whether the two smallest moduli coincide.
    """
    z = complex(z_probe)
    a = complex(float(alpha)) if not isinstance(alpha, complex) else alpha
    lead = a * z
    if abs(lead) == 0:
        raise ValueError("alpha * z_probe must be nonzero for a degree-3 probe")
    roots = _cubic_roots([lead, 1.0 + 0j, z, 1.0 + 0j])
    roots.sort(key=abs)
    m = tuple(abs(r) for r in roots)
    simple = _distinct_nonzero(roots)
    equal_pair = abs(m[0] - m[1]) <= _MODULUS_TOL * max(1.0, m[1])
    return DominanceReport(
        z_probe=z,
        t_moduli=m,
        two_dominant=equal_pair and simple,
        distinct_nonzero=simple,
    )


def reciprocal_dominance(z_probe, c):
    """Dominance probe through the reversed cubic t**3 + z t**2 - t + c z.

    Its roots are the reciprocals of the b < 0 family's t-roots, so here the
    LARGEST two moduli must agree; the report translates back through the
    reciprocal map so two_dominant keeps its usual smallest-two meaning,
    and the raw reversed-cubic roots ride along in star_roots.
    """
    z = complex(z_probe)
    cc = complex(float(c)) if not isinstance(c, complex) else c
    if abs(cc) == 0:
        raise ValueError("c must be nonzero")
    star = _cubic_roots([1.0 + 0j, z, -1.0 + 0j, cc * z])
    star.sort(key=abs)
    if abs(star[0]) < 1e-300:
        raise ValueError("degenerate probe: a reversed root at the origin")
    translated = sorted((1 / r for r in star), key=abs)
    m = tuple(abs(r) for r in translated)
    simple = _distinct_nonzero(star)
    equal_pair = abs(m[0] - m[1]) <= _MODULUS_TOL * max(1.0, m[1])
    return DominanceReport(
        z_probe=z,
        t_moduli=m,
        two_dominant=equal_pair and simple,
        distinct_nonzero=simple,
        star_roots=tuple(star),
    )


def zero_approach(z_star, params, n_list):
    """Distance from z_star to the nearest zero of P_n, for each listed n.

    A point in the limit set of the zeros sees these distances shrink as n
    grows; a point outside the closed zero interval of a hyperbolic family
    stays bounded away.
    """
    if list(n_list) != sorted(n_list):
        raise ValueError("n_list must be ascending")
    z = complex(z_star)
    seq = generate(params, max(n_list))
    out = []
    for n in n_list:
        roots = all_roots(seq[n])
        out.append(min(abs(r - z) for r in roots))
    return out


def density_profile(alpha, n_max):
    """Union of the zero sets for n <= n_max and the largest root-free gap
    inside the central 95% of (-lambda, lambda).

    Zeros come through the theta parametrization, which scales to large n
    without any polynomial arithmetic. Fewer than two roots in the window
    report the full window width as the gap.
    """
    lam = lambda_bound(alpha)
    roots = []
    for n in range(1, n_max + 1):
        roots.extend(predicted_roots(GnProblem(n, alpha)))
    roots.sort()
    w = 0.95 * lam
    inside = [r for r in roots if -w < r < w]
    if len(inside) < 2:
        gap = 2 * w
    else:
        gap = max(b - a for a, b in zip(inside, inside[1:]))
    return DensityProfile(
        alpha=float(alpha),
        n_max=n_max,
        union_roots=tuple(roots),
        max_gap_central=gap,
        lam=lam,
    )


def imaginary_axis_check(n_max):
    """True when every zero of the (1, -1, 0) family up to n_max lies on the
    imaginary segment strictly inside (-2i, 2i)."""
    seq = generate(RecurrenceParams(1, -1, 0), n_max)
    for n in range(1, n_max + 1):
        for r in all_roots(seq[n]):
            if abs(r.real) >= 1e-9 or abs(r.imag) >= 2.0:
                return False
    return True
