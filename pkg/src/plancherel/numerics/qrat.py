"""Exact rational functions in the half-power variable s = q^(1/2).

Used for the symbolic q-deformed Plancherel weights and the exact
coefficients of the degree expansion of the q-deformed partition sum.
A QRat is a Laurent-free pair of dense polynomials over BigRational; Laurent
content (powers of s) is carried polynomially by multiplying through, so all
exponents stay integral.
"""

import gmpy2
from gmpy2 import mpq

from .series import TruncatedPowerSeries


def _trim(c):
    c = list(c)
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    return c


def _poly_mul(a, b):
    out = [mpq(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            if y != 0:
                out[i + j] += x * y
    return _trim(out)


def _poly_add(a, b):
    n = max(len(a), len(b))
    out = [mpq(0)] * n
    for i, x in enumerate(a):
        out[i] += x
    for i, x in enumerate(b):
        out[i] += x
    return _trim(out)


def _poly_mod(a, b):
    """Remainder of a modulo b (b nonzero)."""
    r = list(a)
    db, lb = len(b) - 1, b[-1]
    while len(r) - 1 >= db:
        if r[-1] == 0:
            r.pop()
            if not r:
                break
            continue
        fac = r[-1] / lb
        shift = len(r) - 1 - db
        for i, y in enumerate(b):
            r[shift + i] -= fac * y
        r.pop()
        if not r:
            break
    return _trim(r) if r else [mpq(0)]


def _poly_gcd(a, b):
    """Monic polynomial gcd over the rationals (Euclid)."""
    a, b = _trim(a), _trim(b)
    if len(a) == 1 and a[0] == 0:
        a, b = b, a
    while not (len(b) == 1 and b[0] == 0):
        a, b = b, _poly_mod(a, b)
    if len(a) == 1 and a[0] == 0:
        return [mpq(1)]
    lead = a[-1]
    return [x / lead for x in a]


class QRat:
    """num(s)/den(s) with exact rational coefficients, auto-reduced."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, reduce=True):
        self.num = _trim([mpq(c) for c in num])
        self.den = _trim([mpq(c) for c in (den if den is not None else [1])])
        if len(self.den) == 1 and self.den[0] == 0:
            raise ZeroDivisionError("zero denominator")
        if reduce:
            self._reduce()

    def _reduce(self):
        if self.num == [mpq(0)]:
            self.den = [mpq(1)]
            return
        g = _poly_gcd(self.num, self.den)
        if len(g) > 1:
            self.num = _poly_divexact(self.num, g)
            self.den = _poly_divexact(self.den, g)
        lead = self.den[-1]
        if lead != 1:
            self.num = [c / lead for c in self.num]
            self.den = [c / lead for c in self.den]

    @classmethod
    def constant(cls, c):
        return cls([mpq(c)])

    @classmethod
    def s_power(cls, k):
        """s^k as a QRat, k any integer."""
        if k >= 0:
            return cls([0] * k + [1], reduce=False)
        return cls([1], [0] * (-k) + [1], reduce=False)

    def is_zero(self):
        return self.num == [mpq(0)]

    def __eq__(self, other):
        if not isinstance(other, QRat):
            other = QRat.constant(other)
        return _poly_mul(self.num, other.den) == _poly_mul(other.num, self.den)

    def __hash__(self):
        raise TypeError("QRat is unhashable")

    def __add__(self, other):
        if not isinstance(other, QRat):
            other = QRat.constant(other)
        num = _poly_add(_poly_mul(self.num, other.den), _poly_mul(other.num, self.den))
        return QRat(num, _poly_mul(self.den, other.den))

    __radd__ = __add__

    def __neg__(self):
        return QRat([-c for c in self.num], self.den, reduce=False)

    def __sub__(self, other):
        return self + (-(other if isinstance(other, QRat) else QRat.constant(other)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, QRat):
            other = QRat.constant(other)
        return QRat(_poly_mul(self.num, other.num), _poly_mul(self.den, other.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, QRat):
            other = QRat.constant(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero QRat")
        return QRat(_poly_mul(self.num, other.den), _poly_mul(self.den, other.num))

    def substitute_inverse(self):
        """The function s -> f(1/s), as a QRat."""
        dn, dd = len(self.num) - 1, len(self.den) - 1
        num, den = list(reversed(self.num)), list(reversed(self.den))
        # f(1/s) = s^(dd-dn) * rev(num)/rev(den)
        k = dd - dn
        if k >= 0:
            return QRat(_poly_mul(num, [0] * k + [mpq(1)]), den)
        return QRat(num, _poly_mul(den, [0] * (-k) + [mpq(1)]))

    def evaluate(self, s):
        """Numeric value at s (MPReal/MPComplex)."""
        num = 0 * s
        for c in reversed(self.num):
            num = num * s + gmpy2.mpfr(c)
        den = 0 * s
        for c in reversed(self.den):
            den = den * s + gmpy2.mpfr(c)
        return num / den

    def gs_expansion(self, low, high):
        """Exact Laurent expansion in g_s after substituting s = exp(-g_s/2).

        Returns (shift, TruncatedPowerSeries) meaning sum_{k} c_k g_s^(shift+k)
        with BigRational coefficients, guaranteed for exponents < high.
        The caller supplies `low`, a lower bound for the pole order (-low is
        checked, not assumed).
        """
        n = high - low
        if n <= 0:
            raise ValueError("empty expansion window")
        order = n + len(self.den) + len(self.num) + 4
        # s = e^{-g/2}: exact exponential series
        e = [mpq(0)] * order
        e[0] = mpq(1)
        for k in range(1, order):
            e[k] = e[k - 1] * mpq(-1, 2 * k)
        s_series = TruncatedPowerSeries(e)
        num = _eval_poly_series(self.num, s_series, order)
        den = _eval_poly_series(self.den, s_series, order)
        vd = den.valuation()
        vn = num.valuation()
        if vn - vd < low:
            raise ValueError(f"pole order {vd - vn} exceeds declared bound {-low}")
        unit = TruncatedPowerSeries(den.coeffs[vd:]).reciprocal()
        shifted = TruncatedPowerSeries(num.coeffs[vn:]) * unit
        shift = vn - vd
        keep = high - shift
        return shift, shifted.truncate(keep)

    def __repr__(self):
        return f"QRat(num={self.num!r}, den={self.den!r})"


def _poly_divexact(a, b):
    """Exact polynomial division a / b (remainder must vanish)."""
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    out = [mpq(0)] * (len(a) - db)
    for top in range(len(a) - 1, db - 1, -1):
        fac = a[top] / lb
        out[top - db] = fac
        for i, y in enumerate(b):
            a[top - db + i] -= fac * y
    if any(c != 0 for c in a):
        raise ArithmeticError("inexact polynomial division")
    return _trim(out)


def _eval_poly_series(poly, s_series, order):
    """poly(s_series) as a TruncatedPowerSeries of the given order."""
    acc = TruncatedPowerSeries([mpq(0)] * order)
    pw = TruncatedPowerSeries([mpq(1)] + [mpq(0)] * (order - 1))
    for k, c in enumerate(poly):
        if c != 0:
            acc = acc + pw * c
        if k + 1 < len(poly):
            pw = pw * s_series
            if pw.order < order:
                pw = TruncatedPowerSeries(pw.coeffs + [mpq(0)] * (order - pw.order))
    return TruncatedPowerSeries(acc.coeffs + [mpq(0)] * (order - acc.order))
