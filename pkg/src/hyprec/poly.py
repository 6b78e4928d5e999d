"""Dense univariate polynomials over exact-rational or float scalars.

The exact backend (Fraction coefficients) supports Sturm-chain real-root
counting and squarefree reduction; the float backend is for exploration and
reporting. Root extraction starts in double precision and escalates to
exact bisection isolation with adaptive-precision refinement whenever the
fast result cannot be certified.
"""

from __future__ import annotations

import math
from fractions import Fraction

import mpmath as mp

from ._kernels import (
    ConvergenceError,
    aberth_roots,
    eval_sign,
    sign_variations,
    sturm_chain,
)

__all__ = [
    "Polynomial",
    "RootFindingError",
    "all_roots",
    "count_real_roots",
    "squarefree_part",
]

_EPS = 2.220446049250313e-16

# |imag| below _IM_NOISE * (1 + |z|) counts as a real root when the double
# stage is cross-checked against the exact Sturm count
_IM_NOISE = 1e-11

# residual certificate slack over the double evaluation noise floor
_CERT_MARGIN = 64.0

# relative radius of the per-root location certificate disks; fast-path
# output is accepted only when every disk is this small and they are
# pairwise disjoint
_LOC_TOL = 1e-11


class RootFindingError(ConvergenceError):
    """Root extraction failed even after exact-arithmetic escalation."""


class Polynomial:
    """Immutable dense polynomial, coefficients in ascending degree order.

    Any float among the input coefficients selects the float backend for
    the whole polynomial; otherwise everything is coerced to Fraction.
    The zero polynomial stores no coefficients and has degree None --
    a sentinel, never an integer that could leak into arithmetic.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coefficients=()):
        raw = list(coefficients)
        if any(isinstance(c, float) for c in raw):
            vals = [float(c) for c in raw]
            if not all(math.isfinite(v) for v in vals):
                raise ValueError("polynomial coefficients must be finite")
        else:
            vals = [Fraction(c) for c in raw]
        while vals and vals[-1] == 0:
            vals.pop()
        self._coeffs = tuple(vals)

    @property
    def coefficients(self):
        return self._coeffs

    @property
    def degree(self):
        return len(self._coeffs) - 1 if self._coeffs else None

    @property
    def backend(self):
        if any(isinstance(c, float) for c in self._coeffs):
            return "float"
        return "exact"

    def coefficient(self, k):
        """Coefficient of z**k, zero beyond the stored range."""
        if 0 <= k < len(self._coeffs):
            return self._coeffs[k]
        return Fraction(0)

    def eval(self, x):
        """Horner evaluation; exact inputs on the exact backend stay exact."""
        if not self._coeffs:
            return 0 * x
        acc = self._coeffs[-1]
        for c in reversed(self._coeffs[:-1]):
            acc = acc * x + c
        return acc

    __call__ = eval

    def derivative(self):
        return Polynomial(
            k * c for k, c in enumerate(self._coeffs) if k >= 1
        )

    def __neg__(self):
        return Polynomial(-c for c in self._coeffs)

    def __add__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Polynomial(out)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, float, Fraction)):
            return Polynomial(c * other for c in self._coeffs)
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return Polynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return Polynomial(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self._coeffs)

    def __repr__(self):
        return f"Polynomial({list(self._coeffs)!r})"


def _as_poly(x):
    if isinstance(x, Polynomial):
        return x
    if isinstance(x, (int, float, Fraction)):
        return Polynomial([x])
    return NotImplemented


# ---------------------------------------------------------------------------
# exact helpers


def _exact_coeffs(p):
    return [Fraction(c) for c in p.coefficients]


def _integer_coeffs(fracs):
    den = 1
    for c in fracs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    return [int(c * den) for c in fracs]


def _poly_divmod(u, v):
    """Quotient and remainder of Fraction coefficient lists (ascending)."""
    r = list(u)
    dv = len(v) - 1
    lead = v[-1]
    q = [Fraction(0)] * max(len(u) - dv, 0)
    while len(r) - 1 >= dv and any(r):
        while r and r[-1] == 0:
            r.pop()
        if len(r) - 1 < dv:
            break
        f = r[-1] / lead
        sh = len(r) - 1 - dv
        q[sh] = f
        for i in range(dv + 1):
            r[sh + i] -= f * v[i]
        r.pop()
    while r and r[-1] == 0:
        r.pop()
    return q, r


def _poly_gcd(u, v):
    """Monic gcd of Fraction coefficient lists."""
    a = [Fraction(c) for c in u]
    b = [Fraction(c) for c in v]
    while b and any(b):
        _, r = _poly_divmod(a, b)
        a, b = b, r
    lead = a[-1]
    return [c / lead for c in a]


def squarefree_part(p):
    """p divided by gcd(p, p'), monic; repeated roots collapse to simple ones.

    Float-backend inputs are converted exactly (binary floats are rationals),
    reduced, and converted back.
    """
    if p.degree is None:
        raise ValueError("the zero polynomial has no squarefree part")
    was_float = p.backend == "float"
    co = _exact_coeffs(p)
    if p.degree == 0:
        out = [Fraction(1)]
    else:
        deriv = [k * c for k, c in enumerate(co) if k >= 1]
        g = _poly_gcd(co, deriv)
        if len(g) == 1:
            out = list(co)
        else:
            out, rem = _poly_divmod(co, g)
            if rem:
                raise ArithmeticError("gcd division left a remainder")
        lead = out[-1]
        out = [c / lead for c in out]
    if was_float:
        return Polynomial(float(c) for c in out)
    return Polynomial(out)


def _nudged(ints, x, direction):
    """Shift x outward by 1/2**k until it is off every root of the chain head."""
    if eval_sign(ints, x.numerator, x.denominator) != 0:
        return x
    for k in range(64, 0, -1):
        cand = x + direction * Fraction(1, 2 ** k)
        if eval_sign(ints, cand.numerator, cand.denominator) != 0:
            return cand
    raise ValueError("interval endpoint sits on a root even after nudging")


def count_real_roots(p, lo, hi):
    """Exact count of distinct real roots of p in the open interval (lo, hi).

    Requires the exact backend. Endpoints landing on a root are nudged
    outward by an exact dyadic amount, so counts stay exact.
    """
    if p.degree is None:
        raise ValueError("cannot count roots of the zero polynomial")
    if p.backend != "exact":
        raise ValueError("count_real_roots requires the exact backend")
    if p.degree == 0:
        return 0
    lo = Fraction(lo)
    hi = Fraction(hi)
    if not lo < hi:
        raise ValueError("need lo < hi")
    ints = _integer_coeffs(_exact_coeffs(p))
    chain = sturm_chain(ints)
    lo = _nudged(ints, lo, -1)
    hi = _nudged(ints, hi, +1)
    return sign_variations(chain, lo.numerator, lo.denominator) - sign_variations(
        chain, hi.numerator, hi.denominator
    )


# ---------------------------------------------------------------------------
# root extraction


def _float_coeffs(work):
    out = [float(c) for c in work]
    if not all(math.isfinite(v) for v in out):
        raise OverflowError("coefficients exceed double range")
    return out


def _horner_c(c, z):
    acc = c[-1]
    for v in reversed(c[:-1]):
        acc = acc * z + v
    return acc


def _polish(c, roots, steps=2):
    d = len(c) - 1
    dc = [k * c[k] for k in range(1, d + 1)]
    out = []
    for z in roots:
        for _ in range(steps):
            pd = _horner_c(dc, z)
            if pd == 0:
                break
            nz = z - _horner_c(c, z) / pd
            if not (math.isfinite(nz.real) and math.isfinite(nz.imag)):
                break
            z = nz
        out.append(z)
    return out


def _noise_floor(c, z):
    az = abs(z)
    acc = abs(c[-1])
    for v in reversed(c[:-1]):
        acc = acc * az + abs(v)
    return len(c) * _EPS * acc


def _residuals_ok(c, roots):
    return all(
        abs(_horner_c(c, z)) <= _CERT_MARGIN * _noise_floor(c, z) for z in roots
    )


def _parity_split(ints):
    """Coefficients of h with p(z) = h(z**2), or None if p has odd terms."""
    if any(v and (k % 2) for k, v in enumerate(ints)):
        return None
    return ints[::2]


def _cauchy_bound(ints):
    lead = abs(ints[-1])
    top = max(abs(v) for v in ints)
    return Fraction(top, lead) + 1


def _structure_gate(ints, froots):
    """Exact cross-check: near-real count must match the Sturm count.

    Double-precision iteration is backward stable, so residuals alone pass
    at clustered ill-conditioned roots even when computed roots are far from
    the true ones. Comparing the real/nonreal split against an exact count
    catches that. Returns "repeated" when the input has repeated roots,
    where the distinct count cannot be compared against a multiset; True or
    False otherwise.
    """
    h = _parity_split(ints)
    if h is not None and len(h) > 1:
        chain = sturm_chain(h)
        if len(chain[-1]) - 1 > 0:
            return "repeated"
        hi = _nudged(h, _cauchy_bound(h), +1)
        pos = sign_variations(chain, 0, 1) - sign_variations(
            chain, hi.numerator, hi.denominator
        )
        expected = 2 * pos
    else:
        chain = sturm_chain(ints)
        if len(chain[-1]) - 1 > 0:
            return "repeated"
        bound = _cauchy_bound(ints)
        lo = _nudged(ints, -bound, -1)
        hi = _nudged(ints, bound, +1)
        expected = sign_variations(chain, lo.numerator, lo.denominator) - sign_variations(
            chain, hi.numerator, hi.denominator
        )
    actual = sum(1 for z in froots if abs(z.imag) <= _IM_NOISE * (1 + abs(z)))
    return actual == expected


def _working_dps(ints, radius):
    bits = max(abs(v).bit_length() for v in ints if v)
    d = len(ints) - 1
    need = bits + d * math.log2(1 + abs(radius)) + math.log2(d + 1) + 90
    return int(0.30103 * need) + 5


def _mp_horner(ints, x):
    acc = mp.mpf(ints[-1])
    for v in reversed(ints[:-1]):
        acc = acc * x + v
    return acc


def _certified_locations(ints, froots):
    """Newton-refined roots carrying per-root distance certificates, or None.

    For any point x, min_k |x - r_k| <= d * |p(x)/p'(x)|. Each double root
    is polished in working precision until that bound clears _LOC_TOL
    relative; disjointness of the certificate disks then pigeonholes the
    approximations onto d distinct simple roots, so every root of p is
    located to within its bound. Residual gates cannot promise this: they
    certify backward error only, and computed roots may sit measurably off
    the true ones while residuals stay at the noise floor. Returns None
    when some bound will not shrink (clustered roots, Newton cap) and the
    caller escalates to exact isolation.
    """
    d = len(ints) - 1
    radius = 1.5 * max(abs(z) for z in froots) + 1.0
    if not math.isfinite(radius):
        return None
    dps = _working_dps(ints, radius)
    dints = [k * ints[k] for k in range(1, d + 1)]
    out = []
    bounds = []
    with mp.workdps(dps):
        tgt = mp.mpf(_LOC_TOL)
        for z0 in froots:
            x = mp.mpc(z0)
            for _ in range(12):
                pv = _mp_horner(ints, x)
                pd = _mp_horner(dints, x)
                if pd == 0:
                    return None
                step = pv / pd
                x = x - step
                if d * abs(step) <= tgt * (1 + abs(x)) / 8:
                    break
            else:
                return None
            pv = _mp_horner(ints, x)
            pd = _mp_horner(dints, x)
            if pd == 0:
                return None
            b = d * abs(pv / pd)
            if b > tgt * (1 + abs(x)):
                return None
            zf = complex(x)
            out.append(zf)
            bounds.append(float(b) + 4 * _EPS * (1 + abs(zf)))
    for i in range(len(out)):
        for j in range(i + 1, len(out)):
            if abs(out[i] - out[j]) <= bounds[i] + bounds[j]:
                return None
    return out


def _refine_bracket(ints, dints, a, b, sa, dps):
    """Safeguarded Newton confined to a sign-change bracket, in mp floats.

    The returned value carries a certificate: the final Newton correction
    |p/p'| must be far below the double-precision target, or the whole
    escalation is declared failed.
    """
    with mp.workdps(dps):
        lo = mp.mpf(a.numerator) / a.denominator
        hi = mp.mpf(b.numerator) / b.denominator
        x = (lo + hi) / 2
        tol = mp.mpf(2) ** (8 - mp.mp.prec)
        for _ in range(2000):
            pv = _mp_horner(ints, x)
            if pv == 0:
                break
            if (pv > 0) == (sa > 0):
                lo = x
            else:
                hi = x
            pd = _mp_horner(dints, x)
            nxt = None
            if pd != 0:
                nxt = x - pv / pd
            if nxt is None or not (lo < nxt < hi):
                nxt = (lo + hi) / 2
            if abs(nxt - x) <= tol * (1 + abs(nxt)):
                x = nxt
                break
            x = nxt
        pv = _mp_horner(ints, x)
        pd = _mp_horner(dints, x)
        if pd == 0 or abs(pv / pd) > mp.mpf(10) ** (-25) * (1 + abs(x)):
            raise RootFindingError("escalated refinement failed its certificate")
        return +x


def _isolate(chain, ints, lo, hi, vlo, vhi):
    """Split (lo, hi) into dyadic subintervals holding one root each."""
    out = []
    stack = [(lo, hi, vlo, vhi)]
    while stack:
        a, b, va, vb = stack.pop()
        k = va - vb
        if k == 0:
            continue
        if k == 1:
            out.append((a, b))
            continue
        mid = (a + b) / 2
        bump = (b - a) / 4
        while eval_sign(ints, mid.numerator, mid.denominator) == 0:
            mid += bump
            bump /= 2
        vm = sign_variations(chain, mid.numerator, mid.denominator)
        stack.append((a, mid, va, vm))
        stack.append((mid, b, vm, vb))
    out.sort()
    return out


def _exact_real_roots(ints, seed):
    """All roots of an integer polynomial certified real and simple, or None.

    Sturm-counts an enclosure seeded from the double estimates (grown to the
    exact Cauchy bound if that undercounts); when the count equals the
    degree, every root is isolated by sign bisection and refined at a
    working precision computed from the coefficient size.
    """
    d = len(ints) - 1
    chain = sturm_chain(ints)
    if len(chain[-1]) - 1 > 0:
        return None
    radius = None
    if seed:
        try:
            radius = Fraction(1.5 * max(abs(z) for z in seed) + 1.0)
        except (OverflowError, ValueError):
            radius = None
    if radius is None:
        radius = _cauchy_bound(ints)
    lo = hi = vlo = vhi = None
    for attempt in range(2):
        lo = _nudged(ints, -radius, -1)
        hi = _nudged(ints, radius, +1)
        vlo = sign_variations(chain, lo.numerator, lo.denominator)
        vhi = sign_variations(chain, hi.numerator, hi.denominator)
        if vlo - vhi == d:
            break
        if attempt == 1:
            return None
        radius = _cauchy_bound(ints)
    intervals = _isolate(chain, ints, lo, hi, vlo, vhi)
    dints = [k * ints[k] for k in range(1, d + 1)]
    dps = _working_dps(ints, float(radius))
    out = []
    for a, b in intervals:
        sa = eval_sign(ints, a.numerator, a.denominator)
        out.append(_refine_bracket(ints, dints, a, b, sa, dps))
    return out


def _initial_points_big(ints):
    """Newton-polygon starting points from bit lengths, overflow-free."""
    d = len(ints) - 1
    ln2 = math.log(2.0)
    pts = [
        (k, (abs(v).bit_length() - 1) * ln2)
        for k, v in enumerate(ints)
        if v
    ]
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
    return [
        mp.mpc(mp.cos(2 * mp.pi * j / d + mp.mpf("0.4")),
               mp.sin(2 * mp.pi * j / d + mp.mpf("0.4"))) * radii[j]
        for j in range(d)
    ]


def _aberth_mp(ints, dps=None):
    """High-precision restart of the simultaneous iteration, self-certified."""
    d = len(ints) - 1
    bits = max(abs(v).bit_length() for v in ints if v)
    if dps is None:
        dps = max(60, bits // 3 + 40)
    with mp.workdps(dps):
        eps = mp.mpf(2) ** (-mp.mp.prec)
        dints = [k * ints[k] for k in range(1, d + 1)]
        z = _initial_points_big(ints)
        for _ in range(600):
            steps = []
            live = False
            for i in range(d):
                pv = _mp_horner(ints, z[i])
                bound = _mp_horner([abs(v) for v in ints], abs(z[i]))
                if abs(pv) <= 4 * d * eps * bound:
                    steps.append(mp.mpc(0))
                    continue
                live = True
                pd = _mp_horner(dints, z[i])
                w = pv / pd if pd != 0 else mp.mpc("0.25", "0.25")
                s = mp.mpc(0)
                for j in range(d):
                    if j != i and z[j] != z[i]:
                        s += 1 / (z[i] - z[j])
                den = 1 - w * s
                steps.append(w / den if abs(den) > eps else w)
            if not live:
                break
            z = [z[i] - steps[i] for i in range(d)]
            if all(abs(s) <= eps * 2 ** 20 * (1 + abs(v)) for s, v in zip(steps, z)):
                break
        for zi in z:
            bound = _mp_horner([abs(v) for v in ints], abs(zi))
            if abs(_mp_horner(ints, zi)) > 4 * d * eps * 2 ** 30 * bound:
                raise RootFindingError("high-precision iteration failed to certify")
        return z


def _sorted_roots(roots):
    return sorted(roots, key=lambda z: (z.real, z.imag))


def _escalated(ints, seed):
    h = _parity_split(ints)
    if h is not None:
        wseed = [z * z for z in seed] if seed else None
        wroots = _exact_real_roots(h, wseed)
        if wroots is not None:
            out = []
            for w in wroots:
                if w >= 0:
                    r = float(mp.sqrt(w))
                    out.extend([complex(r, 0.0), complex(-r, 0.0)])
                else:
                    r = float(mp.sqrt(-w))
                    out.extend([complex(0.0, r), complex(0.0, -r)])
            return _sorted_roots(out)
        out = []
        for w in _aberth_mp(h):
            s = mp.sqrt(w)
            out.extend([complex(s), complex(-s)])
        return _sorted_roots(out)
    wroots = _exact_real_roots(ints, seed)
    if wroots is not None:
        return _sorted_roots([complex(float(w), 0.0) for w in wroots])
    return _sorted_roots([complex(z) for z in _aberth_mp(ints)])


def all_roots(p):
    """All complex roots of p with multiplicity, as Python complex numbers.

    The fast path runs the double-precision simultaneous iteration with two
    Newton polishing steps; its output must pass three certificates: every
    residual at the evaluation noise floor, the real/nonreal split equal to
    an exact Sturm count, and a working-precision Newton polish whose
    per-root error disks are small and pairwise disjoint. On any failure
    the roots are recomputed exactly: origin roots are deflated, an
    even-powers-only polynomial is reduced to half degree, all-real cases
    go through certified bisection isolation, and anything else restarts
    the iteration in high precision. Inputs with repeated roots skip the
    location stage (no such certificate exists for a multiple root) and are
    accepted on residuals alone. Raises RootFindingError when even the
    escalation cannot certify its output.
    """
    if p.degree is None or p.degree < 1:
        raise ValueError("all_roots requires degree >= 1")
    co = list(p.coefficients)
    sigma = 0
    while co[sigma] == 0:
        sigma += 1
    roots = [complex(0.0, 0.0)] * sigma
    work = co[sigma:]
    if len(work) == 1:
        return roots
    exact = [Fraction(c) for c in work]
    if len(work) == 2:
        roots.append(complex(float(-exact[0] / exact[1]), 0.0))
        return roots
    ints = _integer_coeffs(exact)
    froots = None
    try:
        wf = _float_coeffs(work)
        froots = _polish(wf, aberth_roots(wf))
    except (ConvergenceError, OverflowError):
        froots = None
    if froots is not None and _residuals_ok(wf, froots):
        gate = _structure_gate(ints, froots)
        if gate == "repeated":
            return roots + _sorted_roots(froots)
        if gate:
            located = _certified_locations(ints, froots)
            if located is not None:
                return roots + _sorted_roots(located)
    return roots + _escalated(ints, froots)
