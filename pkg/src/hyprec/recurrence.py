"""Generation of the polynomial family from its four-term recurrence.

Two independent construction routes are provided on purpose: the recurrence
itself, and coefficient extraction from the reciprocal power series
1 / (1 + a*z*t + b*t**2 + c*z*t**3). They must agree term for term, which
makes each one an oracle for the other.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .poly import Polynomial

__all__ = [
    "PolySequence",
    "RecurrenceParams",
    "generate",
    "series_oracle",
    "value_at_zero",
]


def _coerce_scalar(x):
    if isinstance(x, float):
        return x
    return Fraction(x)


@dataclass(frozen=True)
class RecurrenceParams:
    """The coefficient triple (a, b, c) defining one polynomial family.

    a and b are nonzero; c = 0 is admitted only together with b < 0, the
    diagnostic regime where the family degenerates to a three-term
    recurrence with purely imaginary zeros.
    """

    a: object
    b: object
    c: object

    def __post_init__(self):
        object.__setattr__(self, "a", _coerce_scalar(self.a))
        object.__setattr__(self, "b", _coerce_scalar(self.b))
        object.__setattr__(self, "c", _coerce_scalar(self.c))
        if self.a == 0:
            raise ValueError("parameter a must be nonzero")
        if self.b == 0:
            raise ValueError("parameter b must be nonzero")
        if self.c == 0 and self.b > 0:
            raise ValueError("c = 0 is only supported in the b < 0 diagnostic mode")

    @property
    def main_regime(self):
        """True when all three parameters are nonzero."""
        return self.c != 0

    @property
    def backend(self):
        if any(isinstance(v, float) for v in (self.a, self.b, self.c)):
            return "float"
        return "exact"


@dataclass(frozen=True)
class PolySequence:
    """P_0 .. P_N for one parameter triple; immutable after construction."""

    params: RecurrenceParams
    polys: tuple

    def __len__(self):
        return len(self.polys)

    def __getitem__(self, n):
        return self.polys[n]


def generate(params, n_max):
    """Unroll P_n = -(a z P_{n-1} + b P_{n-2} + c z P_{n-3}), P_0 = 1.

    Indices below zero are treated as the zero polynomial. On the exact
    backend every coefficient is an exact rational.
    """
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    az = Polynomial([0, params.a])
    cz = Polynomial([0, params.c])
    b = params.b
    polys = [Polynomial([1])]
    for n in range(1, n_max + 1):
        acc = az * polys[n - 1]
        if n >= 2:
            acc = acc + b * polys[n - 2]
        if n >= 3:
            acc = acc + cz * polys[n - 3]
        polys.append(-acc)
    return PolySequence(params=params, polys=tuple(polys))


def _invert_unit_series(bs, n_max):
    """Coefficients of 1/B for a series B with B_0 = 1.

    Standard convolution inversion: A_0 = 1 and
    A_n = -sum_{k>=1} B_k * A_{n-k}. Works over any coefficient ring with
    + and *; here the coefficients are polynomials in z.
    """
    out = [Polynomial([1])]
    for n in range(1, n_max + 1):
        acc = Polynomial()
        for k in range(1, min(n, len(bs) - 1) + 1):
            acc = acc + bs[k] * out[n - k]
        out.append(-acc)
    return out


def series_oracle(params, n_max):
    """P_n as the t**n coefficient of 1/(1 + a z t + b t**2 + c z t**3)."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    bs = [
        Polynomial([1]),
        Polynomial([0, params.a]),
        Polynomial([params.b]),
        Polynomial([0, params.c]),
    ]
    return PolySequence(params=params, polys=tuple(_invert_unit_series(bs, n_max)))


def value_at_zero(n):
    """P_n(0) for any family with b = 1: zero at odd n, (-1)**(n//2) at even n.

    Setting z = 0 collapses the generating series to 1/(1 + b t**2), whose
    coefficients are 1, 0, -b, 0, b**2, ... The closed pattern returned here
    is the b = 1 case, which covers every normalized family regardless of
    a and c. For general b, P_{2k}(0) = (-b)**k.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if n % 2 == 1:
        return Fraction(0)
    return Fraction(-1) ** (n // 2)
