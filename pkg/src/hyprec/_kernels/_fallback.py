"""Pure-Python kernel implementations.

Mirrors the compiled core exactly: integer Sturm chains (certification) and
the Aberth-Ehrlich simultaneous root iteration (float extraction). The Sturm
routines operate on plain Python ints so results are identical across
backends; the Aberth fallback is numpy-vectorized.
"""

from __future__ import annotations

import math

import numpy as np

_EPS = 2.220446049250313e-16


class ConvergenceError(RuntimeError):
    """Iterative root solver failed to converge within its iteration cap."""


# ---------------------------------------------------------------------------
# exact integer kernels


def _trim(v):
    while v and v[-1] == 0:
        v.pop()
    return v


def _content(v):
    g = 0
    for x in v:
        g = math.gcd(g, x)
    return g or 1


def _neg_prem(a, b):
    """-(positive constant) * remainder(a, b) for integer coefficient lists.

    Each elimination step multiplies the running remainder by lc(b); the
    accumulated factor must end up positive or the sign pattern of the chain
    breaks, so an odd number of steps with negative lc(b) is compensated.
    """
    r = list(a)
    lb = b[-1]
    db = len(b) - 1
    flips = 0
    while r and len(r) - 1 >= db:
        lr = r[-1]
        sh = len(r) - 1 - db
        nxt = [lb * x for x in r[:-1]]
        for i in range(db):
            nxt[sh + i] -= lr * b[i]
        r = _trim(nxt)
        flips += 1
    if lb < 0 and flips % 2 == 1:
        r = [-x for x in r]
    return [-x for x in r]


def sturm_chain(coeffs):
    """Sturm chain of an integer-coefficient polynomial (ascending coeffs).

    Every member is divided by its positive content, which preserves all
    sign sequences. If the input has repeated roots the chain ends at a
    nonconstant gcd; sign-variation differences then still count distinct
    real roots.
    """
    s0 = list(coeffs)
    g = _content(s0)
    s0 = [x // g for x in s0]
    s1 = _trim([i * s0[i] for i in range(1, len(s0))])
    g = _content(s1)
    s1 = [x // g for x in s1]
    chain = [s0, s1]
    a, b = s0, s1
    while len(b) - 1 > 0:
        r = _neg_prem(a, b)
        if not r:
            break
        g = _content(r)
        r = [x // g for x in r]
        chain.append(r)
        a, b = b, r
    return chain


def eval_sign(coeffs, num, den):
    """Exact sign of p(num/den) for integer coeffs and den > 0."""
    d = len(coeffs) - 1
    v = coeffs[d]
    pw = 1
    for i in range(d - 1, -1, -1):
        pw *= den
        v = v * num + coeffs[i] * pw
    return (v > 0) - (v < 0)


def sign_variations(chain, num, den):
    """Sign variations of the chain at num/den, zeros skipped."""
    prev = 0
    count = 0
    for member in chain:
        s = eval_sign(member, num, den)
        if s == 0:
            continue
        if prev != 0 and s != prev:
            count += 1
        prev = s
    return count


# ---------------------------------------------------------------------------
# float kernel: Aberth-Ehrlich simultaneous iteration


def initial_points(coeffs):
    """Deterministic starting points from the Newton polygon of |c_k|.

    Radii come from the upper convex hull of (k, log|c_k|); each hull edge
    of horizontal span m contributes m points at the edge's radius. Angles
    are spread uniformly with a fixed offset so no starting point lies on a
    symmetry axis of the coefficient pattern.
    """
    d = len(coeffs) - 1
    pts = [(k, math.log(abs(c))) for k, c in enumerate(coeffs) if c != 0]
    hull = []
    for p in pts:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            if (x2 - x1) * (p[1] - y1) - (y2 - y1) * (p[0] - x1) >= 0:
                hull.pop()
            else:
                break
        hull.append(p)
    radii = []
    for (k1, u1), (k2, u2) in zip(hull, hull[1:]):
        r = math.exp((u1 - u2) / (k2 - k1))
        radii.extend([r] * (k2 - k1))
    while len(radii) < d:
        radii.append(radii[-1] if radii else 1.0)
    out = []
    for j, r in enumerate(radii[:d]):
        ang = 2.0 * math.pi * j / d + 0.4
        out.append(complex(r * math.cos(ang), r * math.sin(ang)))
    return out


def aberth_roots(coeffs, tol=1e-13, max_iter=400):
    """All roots of a degree >= 2 polynomial with c_0 != 0, lc != 0.

    Simultaneous Aberth-Ehrlich updates; a root freezes once its residual
    drops below the float evaluation noise floor. Raises ConvergenceError
    if the iteration cap is reached with live steps remaining.
    """
    c = np.asarray(coeffs, dtype=np.complex128)
    d = c.size - 1
    dc = c[1:] * np.arange(1, d + 1)
    absc = np.abs(c)
    z = np.asarray(initial_points(list(c)), dtype=np.complex128)
    # transient overflow at escaped points is expected and handled by the
    # trust-region pull below, so the IEEE flags are noise here
    with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
        return _iterate(c, dc, absc, z, d, tol, max_iter)


def _iterate(c, dc, absc, z, d, tol, max_iter):
    for _ in range(max_iter):
        pv = np.full(d, c[d])
        pd = np.full(d, dc[d - 1])
        bound = np.full(d, absc[d])
        az = np.abs(z)
        for k in range(d - 1, -1, -1):
            pv = pv * z + c[k]
            if k >= 1:
                pd = pd * z + dc[k - 1]
            bound = bound * az + absc[k]
        frozen = (np.abs(pv) <= 4.0 * d * _EPS * bound) & np.isfinite(bound)
        if frozen.all():
            return [complex(v) for v in z]
        bad = pd == 0
        w = pv / np.where(bad, 1.0, pd)
        w = np.where(bad, 0.25 + 0.25j, w)
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, np.inf)
        s = (1.0 / diff).sum(axis=1)
        denom = 1.0 - w * s
        small = np.abs(denom) < 1e-290
        step = w / np.where(small, 1.0, denom)
        step = np.where(small, w, step)
        step = np.where(frozen, 0.0, step)
        # simultaneous sweeps can fling a point far enough out that Horner
        # overflows at high degree; cap each move and pull any point whose
        # evaluation already went nonfinite back toward the origin
        mag = np.abs(step)
        cap = 0.3 * (1.0 + az)
        shrink = np.where(mag > cap, cap / np.where(mag == 0.0, 1.0, mag), 1.0)
        step = step * shrink
        step = np.where(np.isfinite(step), step, 0.5 * z)
        z = z - step
        if (np.abs(step) <= tol * (1.0 + np.abs(z))).all():
            return [complex(v) for v in z]
    raise ConvergenceError("aberth iteration did not converge")
