"""The theta-parametrization of the zero locus.

For each theta in (0, pi) away from pi/2 the frame produces the
discriminant Delta(theta), the quadratic roots zeta+/zeta-, the radius
tau(theta), the curve point z(theta), and the three roots t1, t2, t3 of
the cubic 1 + z t + t**2 + alpha z t**3. In the real regime
(alpha <= 1/9, alpha != 0) everything is real except the conjugate pair
t1, t2; when Delta < 0 the same formulas run over complex scalars.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

__all__ = [
    "MonotonicityReport",
    "ThetaSample",
    "VietaResidual",
    "delta",
    "delta_from_cos2",
    "monotonicity_scan",
    "sample",
    "t_roots",
    "tau",
    "theta_grid",
    "vieta_residuals",
    "z_of_theta",
    "zeta_pair",
]

_HALF_PI = math.pi / 2


@dataclass(frozen=True)
class ThetaSample:
    """One frame evaluation: every derived quantity at a single theta."""

    theta: float
    alpha: float
    delta: object
    zeta_plus: object
    zeta_minus: object
    tau: object
    z: object
    t1: complex
    t2: complex
    t3: complex


@dataclass(frozen=True)
class VietaResidual:
    """Deviations of the three elementary symmetric functions of t1, t2, t3
    from -1/(alpha z), 1/alpha, -1/(alpha z); max_relative scales each by the
    magnitude of its target."""

    r1: complex
    r2: complex
    r3: complex
    max_relative: float


@dataclass(frozen=True)
class MonotonicityReport:
    alpha: float
    grid_size: int
    strictly_increasing: bool
    min_gap: float
    min_slope: float


def delta_from_cos2(cos2, alpha):
    """Delta as a polynomial in cos(theta)**2; exact on exact inputs."""
    return (
        16 * alpha * alpha * cos2 * cos2
        - 8 * alpha * alpha * cos2
        - 8 * alpha * cos2
        + alpha * alpha
        - 2 * alpha
        + 1
    )


def delta(theta, alpha):
    """Discriminant guarding the zeta square root; positive on (0, pi) for
    every alpha <= 1/9, alpha != 0."""
    c = math.cos(theta)
    return delta_from_cos2(c * c, float(alpha))


def zeta_pair(theta, alpha):
    """Both roots of 2 a cos(theta) x**2 + (4 a cos(theta)**2 + a - 1) x
    + 2 a cos(theta), the plus branch first.

    Their product is 1 by construction. When Delta < 0 the pair is complex
    conjugate; cos(theta) = 0 is a pole and is rejected.
    """
    a = float(alpha)
    if a == 0:
        raise ValueError("alpha must be nonzero")
    c = math.cos(theta)
    if theta == _HALF_PI or c == 0:
        raise ValueError("zeta has a pole at theta = pi/2")
    d = delta(theta, a)
    s = math.sqrt(d) if d >= 0 else cmath.sqrt(complex(d))
    num = -4 * a * c * c - a + 1
    den = 4 * a * c
    # num > 0 whenever alpha <= 1/9, so the plus branch never cancels; the
    # minus branch does near the pole, but the root product is exactly 1,
    # so its reciprocal is both faster and fully accurate
    plus = (num + s) / den
    return plus, 1 / plus


def tau(theta, alpha):
    """Positive square root of (2 cos(theta) + zeta) / zeta.

    The radicand is positive throughout the real regime; a nonpositive
    value there can only come from an internal inconsistency, not from bad
    input, and raises ArithmeticError. Complex zeta (Delta < 0) switches to
    the principal complex branch.
    """
    zp, _ = zeta_pair(theta, alpha)
    rad = (2 * math.cos(theta) + zp) / zp
    if isinstance(rad, complex):
        return cmath.sqrt(rad)
    if rad <= 0:
        raise ArithmeticError(
            "tau radicand is nonpositive in the real regime; "
            "this indicates an internal inconsistency"
        )
    return math.sqrt(rad)


def z_of_theta(theta, alpha):
    """The curve point -1/(alpha tau**3 zeta); z(pi/2) = 0 by continuity.

    Negative before pi/2, positive after, strictly increasing in between,
    with limits -lambda and +lambda at the interval ends.
    """
    if theta == _HALF_PI:
        return 0.0
    a = float(alpha)
    zp, _ = zeta_pair(theta, a)
    t = tau(theta, a)
    return -1 / (a * t ** 3 * zp)


def t_roots(theta, alpha):
    """(tau e^{-i theta}, tau e^{i theta}, tau zeta): the three roots of
    1 + z t + t**2 + alpha z t**3 at z = z(theta)."""
    zp, _ = zeta_pair(theta, alpha)
    t = tau(theta, alpha)
    phase = cmath.exp(complex(0.0, theta))
    return complex(t / phase), complex(t * phase), complex(t * zp)


def sample(theta, alpha):
    """Evaluate the whole frame once at theta; shares one zeta computation."""
    a = float(alpha)
    zp, zm = zeta_pair(theta, a)
    d = delta(theta, a)
    t = tau(theta, a)
    z = -1 / (a * t ** 3 * zp)
    phase = cmath.exp(complex(0.0, theta))
    return ThetaSample(
        theta=float(theta),
        alpha=a,
        delta=d,
        zeta_plus=zp,
        zeta_minus=zm,
        tau=t,
        z=z,
        t1=complex(t / phase),
        t2=complex(t * phase),
        t3=complex(t * zp),
    )


def vieta_residuals(s):
    """How far the symmetric functions of (t1, t2, t3) drift from the
    coefficient ratios of the cubic they should solve.

    All three magnitudes stay below 1e-10 relative for a healthy sample;
    the first and third targets coincide, so r1 and r3 agree for exact
    samples.
    """
    e1 = s.t1 + s.t2 + s.t3
    e2 = s.t1 * s.t2 + s.t1 * s.t3 + s.t2 * s.t3
    e3 = s.t1 * s.t2 * s.t3
    az = s.alpha * s.z
    g1 = -1 / complex(az)
    g2 = 1 / complex(s.alpha)
    g3 = g1
    r1 = e1 - g1
    r2 = e2 - g2
    r3 = e3 - g3
    rel = max(
        abs(r1) / max(1.0, abs(g1)),
        abs(r2) / max(1.0, abs(g2)),
        abs(r3) / max(1.0, abs(g3)),
    )
    return VietaResidual(r1=r1, r2=r2, r3=r3, max_relative=rel)


def theta_grid(size, offset=1e-6):
    """Uniform grid on (offset, pi - offset) that never touches pi/2.

    Points falling within offset of pi/2 are pushed to pi/2 -+ offset on
    their own side, keeping the grid sorted.
    """
    if size < 2:
        raise ValueError("grid needs at least two points")
    step = (math.pi - 2 * offset) / (size - 1)
    out = []
    for j in range(size):
        t = offset + j * step
        if abs(t - _HALF_PI) < offset:
            t = _HALF_PI - offset if t <= _HALF_PI else _HALF_PI + offset
        out.append(t)
    return out


def monotonicity_scan(alpha, grid_size=10000):
    """Check strict increase of z(theta) on a uniform grid.

    Reports the smallest gap between consecutive z values and the smallest
    centered finite-difference slope; both must be positive for the scan to
    pass.
    """
    grid = theta_grid(grid_size)
    zs = [z_of_theta(t, alpha) for t in grid]
    min_gap = min(b - a for a, b in zip(zs, zs[1:]))
    min_slope = min(
        (zs[i + 1] - zs[i - 1]) / (grid[i + 1] - grid[i - 1])
        for i in range(1, len(zs) - 1)
    )
    return MonotonicityReport(
        alpha=float(alpha),
        grid_size=grid_size,
        strictly_increasing=min_gap > 0 and min_slope > 0,
        min_gap=min_gap,
        min_slope=min_slope,
    )
