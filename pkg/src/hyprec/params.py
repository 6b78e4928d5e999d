"""Parameter normalization, the interval half-width lambda, and the
hyperbolicity predicate.

A family (a, b, c) with b > 0 reduces to the single parameter
alpha = c/(a*b); the zero sets of the original and normalized families are
related by the linear map z -> (a/sqrt(b)) * z. All zeros are real exactly
when b > 0 and alpha <= 1/9, and in that case they fill out the open
interval (-lambda, lambda) whose half-width has a closed form in alpha.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath as mp

__all__ = [
    "NormalizedParams",
    "ScalingMap",
    "lambda_bound",
    "normalize",
    "predict_hyperbolic",
]

_ONE_NINTH = Fraction(1, 9)


@dataclass(frozen=True)
class NormalizedParams:
    """alpha = c/(a*b); valid records that b > 0 so the reduction is real."""

    alpha: object
    valid: bool


@dataclass(frozen=True)
class ScalingMap:
    """z is a zero of the original family iff factor * z is one of the
    normalized family (same index n)."""

    factor: object

    def apply(self, z):
        return self.factor * z

    def invert(self, z):
        return z / self.factor


def _exact(x):
    return x if isinstance(x, Fraction) else Fraction(x)


def _sqrt_scalar(b):
    """sqrt of a positive scalar, exact when the rational is a perfect square."""
    if not isinstance(b, float):
        b = Fraction(b)
        rn = math.isqrt(b.numerator)
        rd = math.isqrt(b.denominator)
        if rn * rn == b.numerator and rd * rd == b.denominator:
            return Fraction(rn, rd)
        return math.sqrt(float(b))
    return math.sqrt(b)


def normalize(params):
    """Reduce (a, b, c) to alpha and the zero-set scaling factor a/sqrt(b)."""
    if params.b <= 0:
        raise ValueError("normalization requires b > 0")
    if params.backend == "exact":
        alpha = _exact(params.c) / (_exact(params.a) * _exact(params.b))
    else:
        alpha = float(params.c) / (float(params.a) * float(params.b))
    factor = params.a / _sqrt_scalar(params.b)
    return NormalizedParams(alpha=alpha, valid=True), ScalingMap(factor=factor)


def _lambda_mp(alpha):
    """The closed form at the current mpmath precision; alpha exact on entry."""
    if isinstance(alpha, Fraction):
        a = mp.mpf(alpha.numerator) / alpha.denominator
    else:
        a = mp.mpf(alpha)
    root = mp.sqrt((9 * a - 1) * (a - 1))
    num = 3 * a + 1 + root
    den = -5 * a + 1 + root
    return 4 / ((num / den) ** mp.mpf("1.5") * den)


def lambda_bound(alpha):
    """Half-width of the zero interval for the normalized family.

    Closed form evaluated at 30 significant digits before rounding to
    float, so the result is fully accurate even at the boundary
    alpha = 1/9 where the radicand vanishes. Rejects alpha = 0 and
    alpha > 1/9 (negative radicand).
    """
    check = Fraction(alpha)
    if check == 0:
        raise ValueError("alpha = 0 is outside the family")
    if check > _ONE_NINTH:
        raise ValueError("lambda is defined only for alpha <= 1/9")
    with mp.workdps(30):
        return float(_lambda_mp(check))


def predict_hyperbolic(params):
    """Exact test of the real-rootedness criterion: b > 0 and c/(a*b) <= 1/9.

    Float parameters are binary rationals, so the comparison is still exact.
    """
    a = Fraction(params.a)
    b = Fraction(params.b)
    c = Fraction(params.c)
    if b <= 0:
        return False
    return c / (a * b) <= _ONE_NINTH
