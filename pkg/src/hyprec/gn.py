"""Zeros of P_n located through the scalar function g_n(theta).

On (0, pi) the zeros of P_n(z(theta)) coincide with the zeros of

    g_n(theta) = (zeta - cos(theta)) sin((n+1) theta) / sin(theta)
                 - cos((n+1) theta) + zeta^{-(n+1)}

so root-finding on the polynomial collapses to sign-change bracketing of a
smooth scalar function. Signs at the subdivision grid k pi/(n+1) are
controlled by cos((n+1) theta) = (-1)^k alone; the interval ends and the
pole of zeta at pi/2 are probed numerically and certified by a bracket
count that must come out to n (even n) or n-1 (odd n, where z = 0 supplies
the remaining zero).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath as mp

from ._kernels import ConvergenceError
from .theta import z_of_theta, zeta_pair

__all__ = [
    "BracketError",
    "BracketSet",
    "GnProblem",
    "brackets",
    "g_value",
    "predicted_roots",
    "solve",
]

_HALF_PI = math.pi / 2
_EDGE_OFFSET = 1e-8
_CENTRAL_OFFSET = 1e-6


class BracketError(RuntimeError):
    """A certified sign pattern failed to materialize; internal regime bug."""


@dataclass(frozen=True)
class GnProblem:
    """One bracketing instance: degree n >= 1 and alpha <= 1/9, alpha != 0."""

    n: int
    alpha: object

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError("n must be an integer >= 1")
        a = Fraction(self.alpha)
        if a == 0:
            raise ValueError("alpha must be nonzero")
        if a > Fraction(1, 9):
            raise ValueError("the bracketing lemmas require alpha <= 1/9")

    @property
    def regime(self):
        return "negative" if Fraction(self.alpha) < 0 else "positive"


@dataclass(frozen=True)
class BracketSet:
    """Disjoint sorted intervals, each certified to change the sign of g_n.

    signs[i] holds the endpoint signs of intervals[i] so later refinement
    never has to re-evaluate g at the delicate probe points near 0, pi, and
    pi/2. The origin flag records the extra zero z = 0 carried by odd n.
    """

    intervals: tuple
    signs: tuple
    includes_origin_root: bool


def g_value(problem, theta):
    """g_n at one point, in double precision.

    The decaying term zeta^{-(n+1)} runs through logs so large n cannot
    overflow; below 1e-300 it is clamped to zero, which cannot flip any
    certified sign because the remaining terms are O(1) at the points where
    signs are read off.
    """
    if not 0.0 < theta < math.pi:
        raise ValueError("theta must lie in (0, pi)")
    if theta == _HALF_PI:
        raise ValueError("g_n has its asymptote at theta = pi/2")
    alpha = float(problem.alpha)
    m = problem.n + 1
    zp, _ = zeta_pair(theta, alpha)
    logt = -m * math.log(abs(zp))
    if logt < -700.0:
        tail = 0.0
    else:
        tail = math.exp(logt)
        if zp < 0 and m % 2 == 1:
            tail = -tail
    c = math.cos(theta)
    return (zp - c) * math.sin(m * theta) / math.sin(theta) - math.cos(m * theta) + tail


def _g_value_mp(n, alpha, theta, dps=40):
    """The same formula in mpmath; oracle for tests and for probes where
    double precision cancels catastrophically (theta near the ends)."""
    with mp.workdps(dps):
        if isinstance(alpha, float):
            a = mp.mpf(alpha)
        else:
            fa = Fraction(alpha)
            a = mp.mpf(fa.numerator) / fa.denominator
        th = mp.mpf(theta)
        m = n + 1
        c = mp.cos(th)
        c2 = c * c
        d = 16 * a * a * c2 * c2 - 8 * a * a * c2 - 8 * a * c2 + a * a - 2 * a + 1
        zp = (-4 * a * c2 - a + 1 + mp.sqrt(d)) / (4 * a * c)
        return (zp - c) * mp.sin(m * th) / mp.sin(th) - mp.cos(m * th) + zp ** (-m)


def _probe_sign(problem, theta, precise):
    """Sign of g at a probe, retried with a small shift if it lands on zero."""
    t = theta
    for _ in range(8):
        v = _g_value_mp(problem.n, problem.alpha, t) if precise else g_value(problem, t)
        if v > 0:
            return t, 1
        if v < 0:
            return t, -1
        t += (t - _HALF_PI) * 1e-12 if t != _HALF_PI else 1e-12
    raise BracketError("probe sign evaluation kept returning exact zero")


def _central_probes(problem):
    """Signs just left and right of pi/2.

    For even n these sit on diverging branches and 1e-6 is comfortably
    inside the blowup; for odd n both sides approach the same finite limit
    and must agree in sign, shrinking the offset if they do not.
    """
    off = _CENTRAL_OFFSET
    for _ in range(3):
        tl, sl = _probe_sign(problem, _HALF_PI - off, precise=False)
        tr, sr = _probe_sign(problem, _HALF_PI + off, precise=False)
        if problem.n % 2 == 0 or sl == sr:
            return (tl, sl), (tr, sr)
        off /= 100.0
    raise BracketError(
        "finite-limit signs at pi/2 disagree between the two probe sides"
    )


def brackets(problem):
    """Certified sign-change intervals for g_n on (0, pi).

    Probe points: the ends at offset 1e-8 (evaluated in high precision;
    double cancels there), every grid point k pi/(n+1) strictly on one side
    of pi/2, and a pair hugging pi/2. Consecutive probes with opposite signs
    form a bracket, except across the pi/2 pair where a sign flip belongs to
    the asymptote, not a root. The resulting count must equal n for even n
    and n-1 for odd n; anything else raises BracketError.
    """
    n = problem.n
    m = n + 1
    pts = [_probe_sign(problem, _EDGE_OFFSET, precise=True)]
    (tl, sl), (tr, sr) = _central_probes(problem)
    for k in range(1, n + 1):
        t = k * math.pi / m
        if t < tl:
            pts.append(_probe_sign(problem, t, precise=False))
    cut = len(pts)
    pts.append((tl, sl))
    pts.append((tr, sr))
    for k in range(1, n + 1):
        t = k * math.pi / m
        if t > tr:
            pts.append(_probe_sign(problem, t, precise=False))
    pts.append(_probe_sign(problem, math.pi - _EDGE_OFFSET, precise=True))
    if any(b[0] <= a[0] for a, b in zip(pts, pts[1:])):
        raise BracketError("probe points failed to sort strictly")
    intervals = []
    signs = []
    for i, (a, b) in enumerate(zip(pts, pts[1:])):
        if i == cut:
            continue
        if a[1] * b[1] < 0:
            intervals.append((a[0], b[0]))
            signs.append((a[1], b[1]))
    expected = n if n % 2 == 0 else n - 1
    if len(intervals) != expected:
        raise BracketError(
            f"bracket count {len(intervals)} != expected {expected} "
            f"for n={n}, alpha={problem.alpha}"
        )
    return BracketSet(
        intervals=tuple(intervals),
        signs=tuple(signs),
        includes_origin_root=n % 2 == 1,
    )


def solve(problem, tol=1e-12):
    """One theta root per bracket: bisection to width tol, then two Newton
    polish steps with a centered difference derivative, confined to the
    bracket. Roots come back strictly increasing."""
    bset = brackets(problem)
    roots = []
    for (lo, hi), (slo, _) in zip(bset.intervals, bset.signs):
        a, b = lo, hi
        for _ in range(300):
            if b - a <= tol:
                break
            mid = 0.5 * (a + b)
            if mid == a or mid == b:
                break
            v = g_value(problem, mid)
            if v == 0.0:
                a = b = mid
                break
            if (v > 0) == (slo > 0):
                a = mid
            else:
                b = mid
        else:
            raise ConvergenceError("bisection exceeded its iteration cap")
        x = 0.5 * (a + b)
        h = 1e-7
        for _ in range(2):
            if not (lo + h < x < hi - h):
                break
            d = (g_value(problem, x + h) - g_value(problem, x - h)) / (2 * h)
            if d == 0 or not math.isfinite(d):
                break
            step = g_value(problem, x) / d
            if not math.isfinite(step):
                break
            nxt = x - step
            if lo < nxt < hi:
                x = nxt
        roots.append(x)
    if any(b <= a for a, b in zip(roots, roots[1:])):
        raise BracketError("refined theta roots failed to stay ordered")
    return roots


def predicted_roots(problem, tol=1e-12):
    """The zeros of P_n for the normalized family, through the theta map.

    Monotonicity of z(theta) turns ordered theta roots into ordered
    z values; odd n contributes the extra zero at the origin.
    """
    zs = [z_of_theta(t, problem.alpha) for t in solve(problem, tol)]
    if problem.n % 2 == 1:
        zs.append(0.0)
    zs.sort()
    return zs
