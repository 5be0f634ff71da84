"""Exact brute-force evaluation of the partition sums.

This is the ground truth the asymptotic machinery is validated against.
``z_plancherel`` sums the Plancherel-measure series with Casimir couplings at
working precision (per-term weights are exact rationals converted at the
final multiply); ``z_qdeformed_series`` builds the degree expansion of the
q-deformed sum with coefficients that are exact rational functions of
q^(1/2), together with their expansions around the small-``g_s`` limit
q = exp(-g_s).
"""

from dataclasses import dataclass, field

import gmpy2
from gmpy2 import mpfr, mpq

from . import kernels
from .numerics.context import decimal_str, real
from .numerics.qrat import QRat
from .partitions import (
    casimir_c2_closed,
    partitions_of_weight,
    q_weight_symbolic,
)


@dataclass(frozen=True)
class PlancherelSumSpec:
    """Inputs of the Plancherel-measure sum Z(q; t)."""

    q: object
    t: tuple = ()  # couplings (t_2, t_3, ...); t[0] couples to C_2
    N: object = None  # row bound; None means unbounded
    max_weight: int = 0

    def __post_init__(self):
        if self.max_weight < 0:
            raise ValueError("max_weight must be nonnegative")
        if self.N is not None and self.N < 0:
            raise ValueError("N must be nonnegative")

    def couplings(self):
        return tuple((k + 2, real(t)) for k, t in enumerate(self.t))


@dataclass(frozen=True)
class QDeformedSumSpec:
    """Inputs of the q-deformed (Calabi-Yau X_p) degree expansion."""

    p: int
    d_max: int
    g_max: int = 2

    def __post_init__(self):
        if self.d_max < 1:
            raise ValueError("d_max must be >= 1")
        if self.g_max < 0:
            raise ValueError("g_max must be nonnegative")


@dataclass(frozen=True)
class OracleResult:
    value: object
    last_shell: object
    shells: tuple
    count: int
    backend: str

    def to_jsonable(self):
        return {
            "value": decimal_str(self.value),
            "last_shell": decimal_str(self.last_shell),
            "terms": self.count,
            "backend": self.backend,
        }


def z_plancherel(spec, want_length_moment=False):
    """Exact-order truncated evaluation of Z(q; t).

    Summation order is the enumeration contract (weight-major, decreasing
    lexicographic, single running total); the last weight shell is returned
    as a truncation-error indicator.
    """
    q = real(spec.q)
    if q < 0:
        raise ValueError("q must be nonnegative")
    total, shells, length_total, count = kernels.plancherel_sum(
        q,
        spec.couplings(),
        spec.max_weight,
        max_length=spec.N,
        want_length_moment=want_length_moment,
    )
    res = OracleResult(
        value=total,
        last_shell=shells[-1],
        shells=tuple(shells),
        count=count,
        backend=kernels.BACKEND,
    )
    return (res, length_total) if want_length_moment else res


def mean_length(q, max_weight, N=None):
    """<n(lambda)> under the weight-truncated Poissonized Plancherel measure."""
    spec = PlancherelSumSpec(q=q, t=(), N=N, max_weight=max_weight)
    res, length_total = z_plancherel(spec, want_length_moment=True)
    if res.value == 0:
        return mpfr(0)
    return length_total / res.value


@dataclass(frozen=True)
class QDeformedSeries:
    """Degree expansion of the q-deformed sum and its logarithm.

    coeffs[d] is the exact coefficient of Q^d (Q = e^{-t}) as a rational
    function of s = q^(1/2); log_coeffs[d] the same for ln Z.  The small-g_s
    expansions substitute s = exp(-g_s/2): gs_coeffs[d][j] is the exact
    rational coefficient of g_s^(2j-2) Q^d in ln Z, for g = j <= g_max.
    """

    p: int
    d_max: int
    g_max: int
    coeffs: tuple
    log_coeffs: tuple
    gs_log: tuple  # gs_log[d][g] = [Q^d g_s^{2g-2}] ln Z, exact mpq

    def gs_coefficient(self, g, d):
        return self.gs_log[d][g]

    def to_jsonable(self):
        return {
            "p": self.p,
            "d_max": self.d_max,
            "g_max": self.g_max,
            "ln_coefficients": {
                f"d={d}": {f"g={g}": decimal_str(c) for g, c in enumerate(row)}
                for d, row in enumerate(self.gs_log)
            },
        }


def z_qdeformed_series(spec):
    """Exact degree expansion of the X_p sum.

    The coefficient of Q^d is sum over |lambda| = d of
    P_q(lambda) q^{(p-1) C_2(lambda) / 2}, a rational function of s with
    integer powers only (C_2 is always even).
    """
    p = int(spec.p)
    coeffs = [QRat.constant(1)]
    for d in range(1, spec.d_max + 1):
        acc = QRat.constant(0)
        for la in partitions_of_weight(d):
            w = q_weight_symbolic(la)
            c2 = casimir_c2_closed(la)
            expo = (p - 1) * c2  # exponent of s = q^{1/2}; c2 is even
            acc = acc + w * QRat.s_power(expo)
        coeffs.append(acc)
    log_coeffs = _series_log(coeffs)
    gs_log = []
    for d in range(spec.d_max + 1):
        if d == 0:
            gs_log.append((mpq(0),) * (spec.g_max + 1))
            continue
        # connected coefficients start at 1/g_s^2
        shift, ser = log_coeffs[d].gs_expansion(-2, 2 * spec.g_max - 1)
        row = []
        for g in range(spec.g_max + 1):
            e = 2 * g - 2
            idx = e - shift
            if idx < 0:
                row.append(mpq(0))
            else:
                row.append(mpq(ser.coeffs[idx]) if idx < ser.order else mpq(0))
            if shift < -2 and any(c != 0 for c in ser.coeffs[: -2 - shift]):
                raise ArithmeticError("connected coefficient has pole worse than 1/g_s^2")
        gs_log.append(tuple(row))
    return QDeformedSeries(
        p=p,
        d_max=spec.d_max,
        g_max=spec.g_max,
        coeffs=tuple(coeffs),
        log_coeffs=tuple(log_coeffs),
        gs_log=tuple(gs_log),
    )


def _series_log(coeffs):
    """log of a Q-series with unit constant term, in the QRat ring.

    ln(1 + u) via  L_d = c_d - (1/d) sum_{k=1}^{d-1} k L_k c_{d-k}.
    """
    n = len(coeffs)
    out = [QRat.constant(0)] * n
    for d in range(1, n):
        acc = QRat.constant(0)
        for k in range(1, d):
            if not out[k].is_zero() and not coeffs[d - k].is_zero():
                acc = acc + out[k] * coeffs[d - k] * k
        out[d] = coeffs[d] - acc * mpq(1, d)
    return out
