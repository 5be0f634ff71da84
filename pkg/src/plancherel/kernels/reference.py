"""Pure-Python partition-sum kernel.

Semantically identical to the Cython kernel (same enumeration order, same
operation order, same rounding), just slower.  Kept as the import-time
fallback and as the cross-check twin for the compiled kernel.
"""

import gmpy2
from gmpy2 import mpfr, mpz

from .common import prepare_weight_factors

BACKEND = "python"


def _raw_partitions(w, cap):
    """Parts tuples of weight w, at most cap parts, decreasing lex order."""
    if w == 0:
        yield ()
        return
    if cap <= 0:
        return
    lo = -(-w // cap)
    for first in range(w, lo - 1, -1):
        for rest in _raw_partitions_bounded(w - first, first, cap - 1):
            yield (first,) + rest


def _raw_partitions_bounded(w, max_part, cap):
    if w == 0:
        yield ()
        return
    if cap <= 0 or max_part * cap < w:
        return
    hi = min(w, max_part)
    lo = -(-w // cap)
    for first in range(hi, lo - 1, -1):
        for rest in _raw_partitions_bounded(w - first, first, cap - 1):
            yield (first,) + rest


def _hook_product_sq(parts):
    """(product of cell hook lengths)^2 as an exact integer."""
    if not parts:
        return mpz(1)
    conj = [0] * parts[0]
    for p in parts:
        for j in range(p):
            conj[j] += 1
    hp = 1
    for i, p in enumerate(parts, start=1):
        base = p - i + 1
        for j in range(1, p + 1):
            hp *= base - j + conj[j - 1]
    return mpz(hp) ** 2


def _delta_scaled(parts, k):
    """sum_i [(2 p_i - 2i + 1)^k - (1 - 2i)^k] (exact integer)."""
    acc = 0
    for i, p in enumerate(parts, start=1):
        acc += (2 * p - 2 * i + 1) ** k - (1 - 2 * i) ** k
    return acc


def plancherel_sum(q, couplings, max_weight, max_length=None, want_length_moment=False):
    """Accumulate the Plancherel partition sum at ambient precision.

    Returns (total, shells, length_total, count): shells[w] is the exact-order
    contribution of weight w, total their running sum in enumeration order,
    length_total the matching sum weighted by n(lambda) (or None), count the
    number of partitions visited.
    """
    q = mpfr(q)
    g0, bases = prepare_weight_factors(q, couplings)
    cap = max_weight + 1 if max_length is None else int(max_length)
    memo = [dict() for _ in bases]
    shells = []
    total = mpfr(0)
    length_total = mpfr(0) if want_length_moment else None
    count = 0
    qpow = g0  # g0 * q^w, updated per shell
    for w in range(max_weight + 1):
        if w:
            qpow *= q
        shell = mpfr(0)
        for parts in _raw_partitions(w, cap):
            count += 1
            term = qpow
            for idx, (k, base) in enumerate(bases):
                d = _delta_scaled(parts, k)
                p = memo[idx].get(d)
                if p is None:
                    p = base**d
                    memo[idx][d] = p
                term *= p
            term /= _hook_product_sq(parts)
            shell += term
            total += term
            if want_length_moment:
                length_total += len(parts) * term
        shells.append(shell)
    return total, shells, length_total, count
