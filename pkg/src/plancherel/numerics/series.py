"""Truncated series arithmetic.

Two layers:

* :class:`LocalSeries` — truncated Laurent expansions about a point with
  MPComplex coefficients; the workhorse of residue extraction in the
  recursion engine.  Every operation tracks the guaranteed order (first
  exponent about which nothing is known), so truncation is never silently
  extended; asking for a coefficient at or beyond the guaranteed order
  raises :class:`TruncationError`.

* :class:`TruncatedPowerSeries` — plain Taylor series over a generic
  coefficient ring (BigRational, MPReal, MPComplex; python ints coerce),
  used for exact series work: Casimir generating functions, Lagrange
  inversion, nome expansions.

Exact series (Laurent polynomials) carry order ``INF``.
"""

import gmpy2
from gmpy2 import mpc, mpq

from .context import complexify

INF = 10**9


class TruncationError(ArithmeticError):
    """A coefficient beyond the guaranteed truncation order was requested."""


def _as_mpc(x):
    return x if isinstance(x, mpc) else complexify(x)


class LocalSeries:
    """sum_{m=mmin}^{order-1} coeffs[m-mmin] * (z - center)^m + O((z-center)^order)."""

    __slots__ = ("center", "mmin", "coeffs", "order")

    def __init__(self, center, mmin, coeffs, order=None):
        self.center = _as_mpc(center)
        self.mmin = int(mmin)
        self.coeffs = [_as_mpc(c) for c in coeffs]
        self.order = INF if order is None else int(order)
        if self.order != INF:
            if self.order > self.mmin + len(self.coeffs):
                # Stored window must cover the whole claimed knowledge.
                self.coeffs += [mpc(0)] * (self.order - self.mmin - len(self.coeffs))
            elif self.order < self.mmin + len(self.coeffs):
                self.coeffs = self.coeffs[: max(0, self.order - self.mmin)]

    # -- constructors -------------------------------------------------

    @classmethod
    def constant(cls, value, center=0):
        return cls(center, 0, [value], INF)

    @classmethod
    def monomial(cls, center, exponent, coeff=1):
        return cls(center, exponent, [coeff], INF)

    @classmethod
    def zero(cls, center=0, order=INF):
        return cls(center, 0, [], order)

    # -- inspection ---------------------------------------------------

    def coefficient(self, m):
        """Coefficient of (z-center)^m; TruncationError if m >= order."""
        if m >= self.order:
            raise TruncationError(
                f"coefficient {m} requested but series only valid below order {self.order}"
            )
        if m < self.mmin or m >= self.mmin + len(self.coeffs):
            return mpc(0)
        return self.coeffs[m - self.mmin]

    def residue(self):
        return self.coefficient(-1)

    def valuation(self):
        return self.mmin

    def max_norm(self):
        return max((abs(c) for c in self.coeffs), default=gmpy2.mpfr(0))

    def __repr__(self):
        tail = "" if self.order == INF else f" + O(w^{self.order})"
        return f"LocalSeries(center={self.center}, mmin={self.mmin}, len={len(self.coeffs)}{tail})"

    # -- ring operations ----------------------------------------------

    def _check_center(self, other):
        if self.center != other.center:
            raise ValueError("series centers differ")

    def __add__(self, other):
        if not isinstance(other, LocalSeries):
            return self + LocalSeries.constant(other, self.center)
        self._check_center(other)
        order = min(self.order, other.order)
        if not self.coeffs:
            mmin = other.mmin
        elif not other.coeffs:
            mmin = self.mmin
        else:
            mmin = min(self.mmin, other.mmin)
        top = min(order, max(self.mmin + len(self.coeffs), other.mmin + len(other.coeffs)))
        n = max(0, top - mmin)
        out = [mpc(0)] * n
        for src in (self, other):
            for i, c in enumerate(src.coeffs):
                j = src.mmin + i - mmin
                if 0 <= j < n:
                    out[j] += c
        return LocalSeries(self.center, mmin, out, order)

    def __radd__(self, other):
        return self + other

    def __neg__(self):
        return LocalSeries(self.center, self.mmin, [-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        return self + (-other if isinstance(other, LocalSeries) else -_as_mpc(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, LocalSeries):
            s = _as_mpc(other)
            return LocalSeries(self.center, self.mmin, [c * s for c in self.coeffs], self.order)
        self._check_center(other)
        if self.order == INF and other.order == INF:
            order = INF
        elif self.order == INF:
            order = other.order + self.mmin
        elif other.order == INF:
            order = self.order + other.mmin
        else:
            order = min(self.order + other.mmin, other.order + self.mmin)
        mmin = self.mmin + other.mmin
        if not self.coeffs or not other.coeffs:
            return LocalSeries(self.center, mmin, [], order)
        n = len(self.coeffs) + len(other.coeffs) - 1
        if order != INF:
            n = min(n, order - mmin)
        out = [mpc(0)] * max(n, 0)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            jmax = min(len(other.coeffs), n - i)
            for j in range(jmax):
                out[i + j] += a * other.coeffs[j]
        return LocalSeries(self.center, mmin, out, order)

    def __rmul__(self, other):
        return self * other

    def reciprocal(self, rel_order=None):
        """Multiplicative inverse; leading stored coefficient must be nonzero.

        For exact series (order INF) the number of output terms must be given
        via rel_order since the inverse is generically an infinite series.
        """
        if not self.coeffs or self.coeffs[0] == 0:
            raise ZeroDivisionError("leading coefficient vanishes; cannot invert")
        v = self.mmin
        if self.order == INF:
            if rel_order is None:
                raise ValueError("rel_order required to invert an exact series")
            R = rel_order
        else:
            R = self.order - v if rel_order is None else min(rel_order, self.order - v)
        if R <= 0:
            raise TruncationError("no valid terms available for reciprocal")
        c0 = self.coeffs[0]
        a = [(self.coeffs[k] / c0 if k < len(self.coeffs) else mpc(0)) for k in range(R)]
        b = [mpc(0)] * R
        if R > 0:
            b[0] = mpc(1)
        for n in range(1, R):
            acc = mpc(0)
            for k in range(1, n + 1):
                if a[k] != 0:
                    acc += a[k] * b[n - k]
            b[n] = -acc
        out = [bb / c0 for bb in b]
        return LocalSeries(self.center, -v, out, R - v)

    def __truediv__(self, other):
        if not isinstance(other, LocalSeries):
            s = _as_mpc(other)
            return LocalSeries(self.center, self.mmin, [c / s for c in self.coeffs], self.order)
        if other.order == INF and self.order != INF:
            rel = self.order - self.mmin
            return self * other.reciprocal(rel_order=rel)
        return self * other.reciprocal()

    def shift(self, k):
        """Multiply by (z-center)^k."""
        order = self.order if self.order == INF else self.order + k
        return LocalSeries(self.center, self.mmin + k, list(self.coeffs), order)

    def pow_int(self, m, rel_order=None):
        if m == 0:
            return LocalSeries.constant(1, self.center)
        base = self if m > 0 else self.reciprocal(rel_order=rel_order)
        out = base
        for _ in range(abs(m) - 1):
            out = out * base
        return out

    # -- calculus -----------------------------------------------------

    def differentiate(self):
        out = [(self.mmin + i) * c for i, c in enumerate(self.coeffs)]
        order = self.order if self.order == INF else self.order - 1
        return LocalSeries(self.center, self.mmin - 1, out, order)

    def antiderivative(self):
        """Term-wise primitive with zero constant; rejects a 1/(z-c) term."""
        out_mmin = self.mmin + 1
        out = []
        for i, c in enumerate(self.coeffs):
            m = self.mmin + i
            if m == -1:
                if c != 0:
                    raise ValueError("antiderivative of a series with nonzero residue")
                out.append(mpc(0))
            else:
                out.append(c / (m + 1))
        order = self.order if self.order == INF else self.order + 1
        return LocalSeries(self.center, out_mmin, out, order)

    def compose(self, inner):
        """Evaluate this series at a local coordinate given by `inner`.

        `inner` must have valuation >= 1 (it represents the old coordinate as
        a series in the new one, vanishing at the new center).
        """
        if inner.valuation() < 1:
            raise ValueError("inner series must have valuation >= 1")
        cap = self.order  # valuation-1 inner: tail O(inner^order) = O(w^order)
        acc = LocalSeries.zero(inner.center, order=cap if cap != INF else inner.order)
        inv = None
        if self.mmin < 0:
            if inner.order == INF:
                raise ValueError("cannot compose negative powers with exact inner series")
            inv = inner.reciprocal()
        pw_pos = None
        pw_neg = None
        for i, c in enumerate(self.coeffs):
            m = self.mmin + i
            if c == 0 and m != 0:
                continue
            if m == 0:
                term = LocalSeries.constant(c, inner.center)
            elif m > 0:
                if pw_pos is None or pw_pos[0] > m:
                    pw_pos = (1, inner)
                while pw_pos[0] < m:
                    pw_pos = (pw_pos[0] + 1, pw_pos[1] * inner)
                term = pw_pos[1] * c
            else:
                if pw_neg is None or pw_neg[0] < m:
                    pw_neg = (-1, inv)
                while pw_neg[0] > m:
                    pw_neg = (pw_neg[0] - 1, pw_neg[1] * inv)
                term = pw_neg[1] * c
            acc = acc + term
        if cap != INF and acc.order > cap:
            acc = LocalSeries(acc.center, acc.mmin, acc.coeffs, min(acc.order, cap))
        return acc

    def exp(self, order=None):
        """exp of the series; constant term exponentiated at working precision."""
        if self.mmin < 0 and any(c != 0 for c in self.coeffs[: -self.mmin]):
            raise ValueError("exp of a series with a pole")
        o = self.order if order is None else order
        if o == INF:
            raise ValueError("exp of an exact series needs an explicit order")
        c0 = self.coefficient(0) if o > 0 else mpc(0)
        E = gmpy2.exp(c0)
        R = o
        f = [self.coefficient(k) if k < o else mpc(0) for k in range(R)]
        g = [mpc(0)] * R
        if R > 0:
            g[0] = mpc(1)
        for n in range(1, R):
            acc = mpc(0)
            for k in range(1, n + 1):
                if f[k] != 0:
                    acc += k * f[k] * g[n - k]
            g[n] = acc / n
        return LocalSeries(self.center, 0, [E * c for c in g], o)

    def log(self, order=None):
        """Principal-branch log; requires nonzero constant term."""
        o = self.order if order is None else order
        if o == INF:
            raise ValueError("log of an exact series needs an explicit order")
        if self.mmin < 0 and any(c != 0 for c in self.coeffs[: -self.mmin]):
            raise ValueError("log of a series with a pole")
        c0 = self.coefficient(0)
        if c0 == 0:
            raise ZeroDivisionError("log of a series with vanishing constant term")
        R = o
        h = [self.coefficient(k) / c0 if k < o else mpc(0) for k in range(R)]
        g = [mpc(0)] * R
        if R > 0:
            g[0] = gmpy2.log(c0)
        for n in range(1, R):
            acc = mpc(0)
            for k in range(1, n):
                acc += k * g[k] * h[n - k]
            g[n] = h[n] - acc / n
        return LocalSeries(self.center, 0, g, o)

    def evaluate(self, z):
        """Numeric evaluation of the stored window (diagnostics only)."""
        w = _as_mpc(z) - self.center
        acc = mpc(0)
        for c in reversed(self.coeffs):
            acc = acc * w + c
        return acc * w**self.mmin


def reciprocal_z_germ(a, order):
    """Series of 1/z about z = a for a in {+1, -1}: sum (-1)^k a^(k+1) w^k."""
    if a not in (1, -1):
        raise ValueError("branch center must be +1 or -1")
    coeffs = [(-1) ** k * a ** (k + 1) for k in range(order)]
    return LocalSeries(a, 0, coeffs, order)


def sigma_germ(a, order):
    """Series of sigma(z) - a = 1/z - a about z = a (vanishes at w = 0)."""
    s = reciprocal_z_germ(a, order)
    return LocalSeries(a, 1, s.coeffs[1:], order)


def log_z_germ(a, order):
    """Germ of the principal log(z) about a = +1 or -1 (constant i*pi at -1)."""
    zser = LocalSeries(a, 0, [a, 1], INF)
    return zser.log(order=order)


class TruncatedPowerSeries:
    """Taylor series over a generic coefficient ring, order == len(coeffs)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        self.coeffs = list(coeffs)

    @property
    def order(self):
        return len(self.coeffs)

    @classmethod
    def zeros(cls, order):
        return cls([0] * order)

    @classmethod
    def one(cls, order):
        return cls([1] + [0] * (order - 1))

    @classmethod
    def identity(cls, order):
        c = [0] * order
        if order > 1:
            c[1] = 1
        return cls(c)

    def coefficient(self, k):
        if k >= self.order:
            raise TruncationError(f"coefficient {k} beyond truncation order {self.order}")
        return self.coeffs[k]

    def valuation(self):
        for i, c in enumerate(self.coeffs):
            if c != 0:
                return i
        return self.order

    def __repr__(self):
        return f"TPS({self.coeffs!r})"

    def __add__(self, other):
        if not isinstance(other, TruncatedPowerSeries):
            out = list(self.coeffs)
            if out:
                out[0] = out[0] + other
            return TruncatedPowerSeries(out)
        n = min(self.order, other.order)
        return TruncatedPowerSeries([self.coeffs[i] + other.coeffs[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return TruncatedPowerSeries([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other if isinstance(other, TruncatedPowerSeries) else -other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, TruncatedPowerSeries):
            return TruncatedPowerSeries([c * other for c in self.coeffs])
        o1, o2 = self.order, other.order
        v1, v2 = self.valuation(), other.valuation()
        n = min(o1 + v2, o2 + v1, o1 + o2 - 1) if o1 and o2 else 0
        out = [0] * n
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j in range(min(len(other.coeffs), n - i)):
                b = other.coeffs[j]
                if b != 0:
                    out[i + j] = out[i + j] + a * b
        return TruncatedPowerSeries(out)

    __rmul__ = __mul__

    def reciprocal(self):
        if not self.coeffs or self.coeffs[0] == 0:
            raise ZeroDivisionError("constant term vanishes; cannot invert")
        c0 = self.coeffs[0]
        n = self.order
        inv0 = mpq(1) / c0 if isinstance(c0, (int, mpq)) else 1 / c0
        out = [0] * n
        out[0] = inv0
        for m in range(1, n):
            acc = 0
            for k in range(1, m + 1):
                if self.coeffs[k] != 0:
                    acc = acc + self.coeffs[k] * out[m - k]
            out[m] = -inv0 * acc
        return TruncatedPowerSeries(out)

    def __truediv__(self, other):
        if isinstance(other, TruncatedPowerSeries):
            return self * other.reciprocal()
        return self * (mpq(1) / other if isinstance(other, int) else 1 / other)

    def derivative(self):
        return TruncatedPowerSeries([i * self.coeffs[i] for i in range(1, self.order)])

    def integral(self):
        """Primitive with zero constant term."""
        out = [0] * (self.order + 1)
        for i, c in enumerate(self.coeffs):
            out[i + 1] = c * mpq(1, i + 1)
        return TruncatedPowerSeries(out)

    def compose(self, inner):
        if inner.valuation() < 1:
            raise ValueError("inner series must have zero constant term")
        n = min(self.order, inner.order) if self.order and inner.order else 0
        acc = TruncatedPowerSeries([0] * n)
        pw = TruncatedPowerSeries([1] + [0] * (n - 1))
        for k in range(min(self.order, n)):
            if self.coeffs[k] != 0:
                acc = acc + pw * self.coeffs[k]
            if k + 1 < self.order:
                pw = pw * inner
                if pw.order < n:
                    pw = TruncatedPowerSeries(pw.coeffs + [0] * (n - pw.order))
        return TruncatedPowerSeries(acc.coeffs + [0] * (n - acc.order))

    def exp(self):
        if self.coeffs and self.coeffs[0] != 0:
            raise ValueError("exp requires zero constant term (exact rings)")
        n = self.order
        g = [0] * n
        if n > 0:
            g[0] = 1
        for m in range(1, n):
            acc = 0
            for k in range(1, m + 1):
                if self.coeffs[k] != 0:
                    acc = acc + k * self.coeffs[k] * g[m - k]
            g[m] = acc * mpq(1, m)
        return TruncatedPowerSeries(g)

    def log(self):
        if not self.coeffs or self.coeffs[0] != 1:
            raise ValueError("log requires constant term exactly 1 (exact rings)")
        n = self.order
        g = [0] * n
        for m in range(1, n):
            acc = 0
            for k in range(1, m):
                if g[k] != 0 and self.coeffs[m - k] != 0:
                    acc = acc + k * g[k] * self.coeffs[m - k]
            g[m] = self.coeffs[m] - acc * mpq(1, m)
        return TruncatedPowerSeries(g)

    def evaluate(self, x):
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def truncate(self, order):
        return TruncatedPowerSeries(self.coeffs[:order])


def lagrange_invert(f):
    """Compositional inverse of f (f(0)=0, f'(0) invertible), same order.

    Uses the Lagrange inversion formula: [w^n] f^{-1} = (1/n) [w^{n-1}] (w/f)^n.
    """
    if f.order < 2 or f.coeffs[0] != 0:
        raise ValueError("series must have zero constant term")
    if f.coeffs[1] == 0:
        raise ZeroDivisionError("linear coefficient vanishes")
    n = f.order
    h = TruncatedPowerSeries(f.coeffs[1:]).reciprocal()  # (w/f)
    out = [0] * n
    pw = h
    for m in range(1, n):
        out[m] = pw.coeffs[m - 1] * mpq(1, m)
        if m + 1 < n:
            pw = pw * h
            if pw.order < n:
                pw = TruncatedPowerSeries(pw.coeffs + [0] * (n - pw.order))
    return TruncatedPowerSeries(out)


class Poly1:
    """Minimal dense univariate polynomial over a generic ring (no truncation)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        c = list(coeffs)
        while len(c) > 1 and c[-1] == 0:
            c.pop()
        self.coeffs = c or [0]

    def degree(self):
        return len(self.coeffs) - 1

    def __add__(self, other):
        if not isinstance(other, Poly1):
            out = list(self.coeffs)
            out[0] = out[0] + other
            return Poly1(out)
        n = max(len(self.coeffs), len(other.coeffs))
        out = [0] * n
        for i, c in enumerate(self.coeffs):
            out[i] = out[i] + c
        for i, c in enumerate(other.coeffs):
            out[i] = out[i] + c
        return Poly1(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly1([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other if isinstance(other, Poly1) else -other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Poly1):
            return Poly1([c * other for c in self.coeffs])
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b != 0:
                    out[i + j] = out[i + j] + a * b
        return Poly1(out)

    __rmul__ = __mul__

    def evaluate(self, x):
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self):
        return f"Poly1({self.coeffs!r})"
