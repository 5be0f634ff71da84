"""Special numbers and functions: Bernoulli numbers, bounded-index
polylogarithms, Chebyshev evaluation, and thin multiprecision wrappers
around mpmath for digamma / Li_3 / Gamma-ratio limits.

Everything exact is returned as BigRational; numeric evaluation follows the
working precision of :mod:`plancherel.numerics.context`.
"""

import gmpy2
from gmpy2 import mpc, mpfr, mpq, mpz

from .context import complexify, from_mpmath, to_mpmath


class PoleError(ArithmeticError):
    """Evaluation requested exactly at a pole."""


_bernoulli_cache = [mpq(1)]


def bernoulli(n):
    """Exact Bernoulli number B_n with the convention B_1 = -1/2.

    Computed (and cached) from the defining recursion
    sum_{k=0}^{n} C(n+1, k) B_k = 0 for n >= 1.
    """
    if n < 0:
        raise ValueError("Bernoulli index must be nonnegative")
    while len(_bernoulli_cache) <= n:
        m = len(_bernoulli_cache)
        acc = mpq(0)
        for k in range(m):
            acc += gmpy2.bincoef(m + 1, k) * _bernoulli_cache[k]
        _bernoulli_cache.append(-acc / (m + 1))
    return _bernoulli_cache[n]


# Numerator polynomials P_k of Li_{-k}(x) = P_k(x) / (1-x)^(k+1), P_0 = x,
# P_k = x ((1-x) P_{k-1}' + k P_{k-1}).
_negli_cache = [[mpz(0), mpz(1)]]


def _negli_poly(k):
    while len(_negli_cache) <= k:
        p = _negli_cache[-1]
        j = len(_negli_cache)
        dp = [i * p[i] for i in range(1, len(p))]
        r = [mpz(0)] * (len(p) + 1)
        for i, c in enumerate(dp):
            r[i] += c
            r[i + 1] -= c
        for i, c in enumerate(p):
            r[i] += j * c
        new = [mpz(0)] + r
        while len(new) > 1 and new[-1] == 0:
            new.pop()
        _negli_cache.append(new)
    return _negli_cache[k]


def neg_polylog(m, x):
    """Li_{1-m}(x) for integer m >= 0 (Li_1, Li_0, Li_{-1}, ...).

    m = 0 is Li_1(x) = -ln(1-x) with the principal branch; m >= 1 are the
    rational functions obtained from Li_0 = x/(1-x) by repeated x d/dx.
    Raises PoleError at x = 1.
    """
    if m < 0:
        raise ValueError("index m must be nonnegative")
    z = complexify(x)
    if z == 1:
        raise PoleError("polylogarithm pole at x = 1")
    if m == 0:
        return -gmpy2.log(1 - z)
    if m == 1:
        return z / (1 - z)
    num = mpc(0)
    for c in reversed(_negli_poly(m - 1)):
        num = num * z + mpc(c)
    return num / (1 - z) ** m


def chebyshev_eval(j, s):
    """T_j with the normalization T_j(z + 1/z) = z^j + z^-j.

    Three-term recurrence T_{j+1} = s T_j - T_{j-1} from T_0 = 2, T_1 = s;
    T_{-1} := T_1 by the z <-> 1/z symmetry.  Works for any ring element s
    (scalars, polynomials) that supports +, *, and integer coercion.
    """
    if j < -1:
        raise ValueError("index must be >= -1")
    if j in (-1, 1):
        return s
    prev = s * 0 + 2
    if j == 0:
        return prev
    cur = s
    for _ in range(j - 1):
        prev, cur = cur, s * cur - prev
    return cur


def trilog(x):
    """Li_3 at multiprecision via mpmath (used by closed-form genus-0 data)."""
    import mpmath

    with mpmath.workprec(gmpy2.get_context().precision + 16):
        return from_mpmath(mpmath.polylog(3, to_mpmath(complexify(x))))


def digamma_real(x):
    """psi(x) for real x away from poles, at working precision."""
    import mpmath

    with mpmath.workprec(gmpy2.get_context().precision + 16):
        return from_mpmath(mpmath.digamma(to_mpmath(mpfr(x))))


def gamma_ratio(a, b):
    """Limit value of Gamma(a)/Gamma(b), poles handled by continuation."""
    import mpmath

    with mpmath.workprec(gmpy2.get_context().precision + 16):
        val = mpmath.gammaprod([to_mpmath(mpfr(a))], [to_mpmath(mpfr(b))])
        return from_mpmath(val)
