"""Shared setup for the partition-sum kernels.

The per-partition weight factorizes as

    P(la) q^|la| exp(-sum_k a_k C_k(la))
      = (1/hookprod^2) * G0 * q^|la| * prod_k B_k ** D_k(la)

with a_k = t_k q^{(1-k)/2} / k, G0 = exp(-sum_k a_k C_k(empty)),
B_k = exp(-a_k / 2^k) and D_k(la) = 2^k (C_k(la) - C_k(empty)) an exact
integer.  Both kernel backends consume the (k, B_k) table prepared here and
accumulate in the contract order: weight-major, decreasing lexicographic
within a weight, one running total.
"""

import gmpy2
from gmpy2 import mpfr

from ..numerics.context import real
from ..partitions import casimir_vacuum


def prepare_weight_factors(q, couplings):
    """Return (G0, [(k, B_k), ...]) for the factorized exponential weight."""
    q = real(q)
    bases = []
    log_g0 = mpfr(0)
    for k, t in couplings:
        k = int(k)
        if k < 2:
            raise ValueError("Casimir couplings start at k = 2")
        t = real(t)
        if t == 0:
            continue
        if q <= 0:
            raise ValueError("couplings require q > 0")
        alpha = t * gmpy2.sqrt(q) ** (1 - k) / k
        log_g0 -= alpha * real(casimir_vacuum(k))
        bases.append((k, gmpy2.exp(-alpha / (1 << k))))
    return gmpy2.exp(log_g0), bases
