# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; semantics match _fallback exactly.

The integer Sturm routines keep coefficients as Python ints (arbitrary
precision is the point) and compile the loop bookkeeping; the Aberth
iteration runs on C double-complex arrays.
"""

import math

import numpy as np

from ._fallback import ConvergenceError, initial_points

cdef double _EPS = 2.220446049250313e-16


# ---------------------------------------------------------------------------
# exact integer kernels


cdef list _trim(list v):
    while v and v[len(v) - 1] == 0:
        v.pop()
    return v


cdef object _content(list v):
    g = 0
    for x in v:
        g = math.gcd(g, x)
    return g or 1


cdef list _neg_prem(list a, list b):
    cdef Py_ssize_t db = len(b) - 1
    cdef Py_ssize_t sh, i, flips = 0
    r = list(a)
    lb = b[db]
    while r and len(r) - 1 >= db:
        lr = r[len(r) - 1]
        sh = len(r) - 1 - db
        nxt = [lb * x for x in r[:len(r) - 1]]
        for i in range(db):
            nxt[sh + i] = nxt[sh + i] - lr * b[i]
        r = _trim(nxt)
        flips += 1
    if lb < 0 and flips % 2 == 1:
        r = [-x for x in r]
    return [-x for x in r]


def sturm_chain(coeffs):
    cdef Py_ssize_t i
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
    cdef Py_ssize_t d = len(coeffs) - 1
    cdef Py_ssize_t i
    v = coeffs[d]
    pw = 1
    for i in range(d - 1, -1, -1):
        pw = pw * den
        v = v * num + coeffs[i] * pw
    return (v > 0) - (v < 0)


def sign_variations(chain, num, den):
    cdef Py_ssize_t count = 0
    cdef int prev = 0, s
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


def aberth_roots(coeffs, double tol=1e-13, int max_iter=400):
    cdef Py_ssize_t d = len(coeffs) - 1
    cdef double complex[::1] c = np.asarray(coeffs, dtype=np.complex128)
    cdef double complex[::1] dc = np.asarray(
        [k * coeffs[k] for k in range(1, d + 1)], dtype=np.complex128)
    cdef double[::1] absc = np.abs(np.asarray(coeffs, dtype=np.complex128))
    cdef double complex[::1] z = np.asarray(
        initial_points(list(coeffs)), dtype=np.complex128)
    cdef double complex[::1] step = np.zeros(d, dtype=np.complex128)
    cdef unsigned char[::1] frozen = np.zeros(d, dtype=np.uint8)
    cdef double complex pv, pd, w, ssum, denom, zi
    cdef double bound, az, sabs
    cdef Py_ssize_t i, j, it
    cdef Py_ssize_t k
    cdef bint all_frozen, all_small
    for it in range(max_iter):
        all_frozen = True
        for i in range(d):
            zi = z[i]
            az = abs(zi)
            pv = c[d]
            pd = dc[d - 1]
            bound = absc[d]
            for k in range(d - 1, -1, -1):
                pv = pv * zi + c[k]
                if k >= 1:
                    pd = pd * zi + dc[k - 1]
                bound = bound * az + absc[k]
            frozen[i] = abs(pv) <= 4.0 * d * _EPS * bound
            if not frozen[i]:
                all_frozen = False
            if pd == 0:
                w = 0.25 + 0.25j
            else:
                w = pv / pd
            ssum = 0
            for j in range(d):
                if j != i and z[j] != zi:
                    ssum = ssum + 1.0 / (zi - z[j])
            denom = 1.0 - w * ssum
            if abs(denom) < 1e-290:
                step[i] = w
            else:
                step[i] = w / denom
            if frozen[i]:
                step[i] = 0
        if all_frozen:
            return [complex(z[i]) for i in range(d)]
        all_small = True
        for i in range(d):
            z[i] = z[i] - step[i]
            sabs = abs(step[i])
            if sabs > tol * (1.0 + abs(z[i])):
                all_small = False
        if all_small:
            return [complex(z[i]) for i in range(d)]
    raise ConvergenceError("aberth iteration did not converge")
