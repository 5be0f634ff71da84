# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled partition-sum kernel.

Same contract, enumeration order and operation order as
``plancherel.kernels.reference``; the enumeration, conjugate/hook and Casimir
delta loops run on C integers, folding into big integers only when products
approach 64 bits.  All multiprecision arithmetic still goes through gmpy2 at
the ambient precision, so results are bit-identical to the reference kernel.
"""

import gmpy2
from gmpy2 import mpfr

from .common import prepare_weight_factors

BACKEND = "cython"

DEF MAXN = 512

cdef unsigned long long FOLD_LIMIT = (<unsigned long long>1) << 54


cdef object _hook_product_sq(int* parts, int d, int* conj):
    """(product of cell hook lengths)^2 as a Python int."""
    cdef int i, j, p, h, width
    cdef unsigned long long chunk = 1
    if d == 0:
        return 1
    width = parts[0]
    for j in range(width):
        conj[j] = 0
    for i in range(d):
        p = parts[i]
        for j in range(p):
            conj[j] += 1
    hp = 1
    for i in range(d):
        p = parts[i]
        for j in range(1, p + 1):
            h = p - j + conj[j - 1] - i
            if chunk >= FOLD_LIMIT:
                hp = hp * chunk
                chunk = 1
            chunk *= <unsigned long long>h
    hp = hp * chunk
    return hp * hp


cdef long long _delta_scaled_ll(int* parts, int d, int k):
    """sum_i [(2 p_i - 2i+1)^k - (1-2i)^k] on C integers (safe: w<=120, k<=6)."""
    cdef long long acc = 0, a, b, pa, pb
    cdef int i, j
    for i in range(d):
        a = 2 * parts[i] - 2 * i - 1
        b = -2 * i - 1
        pa = 1
        pb = 1
        for j in range(k):
            pa *= a
            pb *= b
        acc += pa - pb
    return acc


def plancherel_sum(q, couplings, max_weight, max_length=None, want_length_moment=False):
    """See plancherel.kernels.reference.plancherel_sum (identical contract)."""
    cdef int parts[MAXN]
    cdef int rem[MAXN]
    cdef int conj[MAXN]
    cdef int w, cap, d, i, v, slots, r, m
    cdef int nbases
    cdef long long count = 0
    cdef bint fast_delta

    q = mpfr(q)
    g0, bases = prepare_weight_factors(q, couplings)
    cap_py = max_weight + 1 if max_length is None else int(max_length)
    if max_weight + 2 > MAXN or cap_py > MAXN:
        raise ValueError("weight cutoff too large for compiled kernel")
    cap = <int>min(cap_py, MAXN - 1)
    nbases = len(bases)
    kexps = [int(k) for k, _ in bases]
    basevals = [b for _, b in bases]
    memo = [dict() for _ in range(nbases)]
    fast_delta = max_weight <= 120 and all(k <= 6 for k in kexps)

    shells = []
    total = mpfr(0)
    length_total = mpfr(0) if want_length_moment else None
    qpow = g0

    for w in range(max_weight + 1):
        if w:
            qpow = qpow * q
        shell = mpfr(0)
        if w == 0:
            term = qpow / 1
            shell = shell + term
            total = total + term
            count += 1
            shells.append(shell)
            continue
        if cap <= 0:
            shells.append(shell)
            continue
        d = 0
        r = w
        m = w
        while True:
            while r > 0:
                v = r if r < m else m
                parts[d] = v
                rem[d] = r
                r -= v
                m = v
                d += 1
            count += 1
            term = qpow
            for i in range(nbases):
                if fast_delta:
                    dk = _delta_scaled_ll(parts, d, <int>kexps[i])
                else:
                    k = kexps[i]
                    dk = 0
                    for j in range(d):
                        dk += (2 * parts[j] - 2 * j - 1) ** k - (-2 * j - 1) ** k
                p_ = (<dict>memo[i]).get(dk)
                if p_ is None:
                    p_ = basevals[i] ** dk
                    (<dict>memo[i])[dk] = p_
                term = term * p_
            term = term / _hook_product_sq(parts, d, conj)
            shell = shell + term
            total = total + term
            if want_length_moment:
                length_total = length_total + d * term
            while True:
                if d == 0:
                    break
                i = d - 1
                v = parts[i] - 1
                slots = cap - i
                if v >= 1 and (<long long>v) * slots >= rem[i]:
                    parts[i] = v
                    r = rem[i] - v
                    m = v
                    d = i + 1
                    break
                d -= 1
            if d == 0:
                break
        shells.append(shell)
    return total, shells, length_total, count
