"""Exact partition combinatorics.

Partitions are immutable; weights and Casimirs are exact BigRationals.
Enumeration order is part of the contract: weight-major, and within a weight
lexicographically decreasing on the parts (so (5) precedes (4,1) precedes
(3,2)).  Weights are computed at the minimal N = n(lambda) by default with N
an explicit parameter, since independence of N is a tested property, not an
assumption.
"""

import json
from functools import lru_cache

import gmpy2
from gmpy2 import mpq, mpz, xmpz

from .numerics.context import real
from .numerics.qrat import QRat
from .numerics.series import TruncatedPowerSeries
from .numerics.special import bernoulli


class Partition:
    """A weakly decreasing tuple of positive integers."""

    __slots__ = ("parts", "weight")

    def __init__(self, parts=()):
        parts = tuple(int(p) for p in parts if p != 0)
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing, got {parts}")
        if parts and parts[-1] < 0:
            raise ValueError("parts must be positive")
        self.parts = parts
        self.weight = sum(parts)

    @property
    def length(self):
        return len(self.parts)

    def part(self, i):
        """lambda_i with trailing zeros, 1-indexed."""
        return self.parts[i - 1] if i <= len(self.parts) else 0

    def hooks(self, N=None):
        """h_i = lambda_i - i + N for i = 1..N; strictly decreasing."""
        if N is None:
            N = len(self.parts)
        if N < len(self.parts):
            raise ValueError("N must be at least the length of the partition")
        return tuple(self.part(i) - i + N for i in range(1, N + 1))

    def conjugate(self):
        if not self.parts:
            return Partition()
        cols = [0] * self.parts[0]
        for p in self.parts:
            for j in range(p):
                cols[j] += 1
        return Partition(cols)

    def cell_hook_lengths(self):
        """Hook lengths of all cells, row by row."""
        conj = [0] * (self.parts[0] if self.parts else 0)
        for p in self.parts:
            for j in range(p):
                conj[j] += 1
        out = []
        for i, p in enumerate(self.parts, start=1):
            for j in range(1, p + 1):
                out.append(p - j + conj[j - 1] - i + 1)
        return out

    def to_json(self):
        return json.dumps(list(self.parts))

    @classmethod
    def from_json(cls, text):
        return cls(json.loads(text))

    def __eq__(self, other):
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return f"Partition{self.parts!r}"


def enumerate_partitions(max_weight, max_length=None):
    """Yield every partition with weight <= max_weight and length <= max_length.

    Order: increasing weight, then decreasing lexicographic on parts.  This
    order is a contract (reproducible summation depends on it).
    """
    if max_weight < 0:
        raise ValueError("max_weight must be nonnegative")
    cap = max_weight + 1 if max_length is None else max_length
    for w in range(max_weight + 1):
        yield from _partitions_of(w, w, cap)


def _partitions_of(w, max_part, slots):
    if w == 0:
        yield Partition()
        return
    if slots <= 0:
        return
    first_hi = min(w, max_part)
    first_lo = -(-w // slots)  # ceil: smallest feasible leading part
    for first in range(first_hi, first_lo - 1, -1):
        for rest in _partitions_of(w - first, first, slots - 1):
            yield Partition((first,) + rest.parts)


def partitions_of_weight(w, max_length=None):
    """Partitions of exact weight w in decreasing lexicographic order."""
    cap = w + 1 if max_length is None else max_length
    return _partitions_of(w, w, cap)


def dimension(la):
    """dim(lambda): standard Young tableaux count via cell hooks."""
    num = gmpy2.fac(la.weight)
    for h in la.cell_hook_lengths():
        num //= h
    return num


def hook_product(la):
    """Product of all cell hook lengths (an exact integer)."""
    prod = mpz(1)
    for h in la.cell_hook_lengths():
        prod *= h
    return prod


def plancherel_weight(la, N=None):
    """Exact P(lambda) = prod_{i<j}(h_i-h_j)^2 / prod_i (h_i!)^2 at given N.

    Independent of N >= n(lambda); defaults to the minimal N.
    """
    h = la.hooks(N)
    num = mpz(1)
    for i in range(len(h)):
        for j in range(i + 1, len(h)):
            num *= h[i] - h[j]
    den = mpz(1)
    for hi in h:
        den *= gmpy2.fac(hi)
    return mpq(num * num, den * den)


def plancherel_weight_hook(la):
    """P(lambda) as 1 / (hook product)^2; used by the fast kernels."""
    hp = hook_product(la)
    return mpq(1, hp * hp)


def q_weight_symbolic(la, N=None):
    """P_q(lambda) as an exact rational function of s = q^(1/2).

    [h] = q^(-h/2) - q^(h/2) = s^(-h) (1 - s^(2h)); the full weight is
    prod_{i<j} [h_i-h_j]^2 / prod_i ([h_i]!)^2.
    """
    h = la.hooks(N)
    num = QRat.constant(1)
    spow = 0
    polys = []
    for i in range(len(h)):
        for j in range(i + 1, len(h)):
            d = h[i] - h[j]
            spow -= 2 * d
            polys.append(("num", d, 2))
    for hi in h:
        for m in range(1, hi + 1):
            spow += 2 * m
            polys.append(("den", m, 2))
    # assemble (1 - s^(2m)) factors
    num_poly = [mpq(1)]
    den_poly = [mpq(1)]
    from .numerics.qrat import _poly_mul

    for where, m, power in polys:
        base = [mpq(1)] + [mpq(0)] * (2 * m - 1) + [mpq(-1)]
        for _ in range(power):
            if where == "num":
                num_poly = _poly_mul(num_poly, base)
            else:
                den_poly = _poly_mul(den_poly, base)
    out = QRat(num_poly, den_poly)
    return out * QRat.s_power(spow)


def q_weight_numeric(la, q, N=None):
    """P_q(lambda) at numeric q in (0,1), at working precision."""
    q = real(q)
    if not (0 < q < 1):
        raise ValueError("numeric q must lie in (0, 1)")
    s = gmpy2.sqrt(q)
    h = la.hooks(N)

    def qnum(m):
        return s ** (-m) - s**m

    num = gmpy2.mpfr(1)
    for i in range(len(h)):
        for j in range(i + 1, len(h)):
            num *= qnum(h[i] - h[j]) ** 2
    den = gmpy2.mpfr(1)
    for hi in h:
        for m in range(1, hi + 1):
            den *= qnum(m) ** 2
    return num / den


def q_plancherel_weight(la, q=None, N=None):
    """Symbolic (q=None) or numeric q-deformed Plancherel weight."""
    if q is None:
        return q_weight_symbolic(la, N)
    return q_weight_numeric(la, q, N)


@lru_cache(maxsize=None)
def _bernoulli_gf(order):
    """z/(e^z - 1) as an exact series: coefficients B_k / k!."""
    fac = mpq(1)
    coeffs = []
    for k in range(order):
        if k:
            fac /= k
        coeffs.append(bernoulli(k) * fac)
    return TruncatedPowerSeries(coeffs)


def _exp_tps(a, order):
    """e^{a z} with exact rational a."""
    coeffs = [mpq(1)]
    for k in range(1, order):
        coeffs.append(coeffs[-1] * a / k)
    return TruncatedPowerSeries(coeffs)


def casimirs(la, k_max, N=None):
    """Exact Casimirs C_1..C_k_max from the generating series.

    C_k is k! times the z^k coefficient of
        sum_i e^{z(h_i - N + 1/2)} + e^{-(N-1/2) z} / (e^z - 1) - 1/z,
    evaluated by truncated exact series arithmetic (the 1/(e^z-1) factor is
    the Bernoulli generating function).
    """
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    if N is None:
        N = la.length
    order = k_max + 2
    h = la.hooks(N)
    acc = TruncatedPowerSeries([mpq(0)] * order)
    for hi in h:
        acc = acc + _exp_tps(mpq(2 * hi - 2 * N + 1, 2), order)
    pole_part = _exp_tps(mpq(-(2 * N - 1), 2), order) * _bernoulli_gf(order)
    # e^{-(N-1/2)z} B(z)/z - 1/z: the constant of the product is 1, so the
    # 1/z pole cancels and the z^k coefficient is the product's z^{k+1} one.
    out = {}
    fac = mpz(1)
    for k in range(1, k_max + 1):
        fac *= k
        out[k] = (acc.coeffs[k] + pole_part.coeffs[k + 1]) * fac
    return out


@lru_cache(maxsize=None)
def casimir_vacuum(k):
    """C_k of the empty partition (exact)."""
    return casimirs(Partition(), k, N=0)[k]


def casimir_delta_scaled(la, k):
    """2^k (C_k(lambda) - C_k(empty)) as an exact integer.

    Equals sum_i [(2 lambda_i - 2i + 1)^k - (1 - 2i)^k]; this is the
    per-partition quantity the summation kernels use.
    """
    acc = 0
    for i, p in enumerate(la.parts, start=1):
        acc += (2 * p - 2 * i + 1) ** k - (1 - 2 * i) ** k
    return acc


def casimir_c2_closed(la):
    """C_2 in closed form: sum_i lambda_i (lambda_i - 2i + 1)."""
    return sum(p * (p - 2 * i + 1) for i, p in enumerate(la.parts, start=1))
