"""Working-precision management and multiprecision scalar helpers.

MPReal / MPComplex are gmpy2's ``mpfr`` / ``mpc`` (MPFR / MPC backed),
BigRational is gmpy2's ``mpq``.  The mantissa size is a process-wide setting,
like mpmath's ``mp`` context: every operation rounds to the active precision
(round-to-nearest), so results are deterministic for a fixed precision and a
fixed operation order.  Values are immutable; nothing here mutates shared
state except the precision itself, which callers set once up front.

The environment variable ``PLANCHEREL_PRECISION`` overrides the default
precision (256 bits) at import time.
"""

import os
import threading

import gmpy2
from gmpy2 import mpc, mpfr, mpq, mpz

MPReal = mpfr
MPComplex = mpc
BigRational = mpq

DEFAULT_PRECISION = 256

_lock = threading.Lock()
_active_bits = DEFAULT_PRECISION


def set_precision(bits):
    """Set the working mantissa size in bits (applies to the current thread)."""
    global _active_bits
    bits = int(bits)
    if bits < 2:
        raise ValueError("precision must be at least 2 bits")
    with _lock:
        _active_bits = bits
    gmpy2.get_context().precision = bits


def get_precision():
    """Return the working mantissa size in bits."""
    return gmpy2.get_context().precision


def ensure_thread_precision():
    """Apply the process-wide precision to the calling thread.

    gmpy2 contexts are thread-local; worker threads call this before any
    arithmetic so all threads round identically.
    """
    gmpy2.get_context().precision = _active_bits


def _init_from_env():
    bits = DEFAULT_PRECISION
    raw = os.environ.get("PLANCHEREL_PRECISION")
    if raw:
        try:
            bits = int(raw)
        except ValueError:
            raise ValueError(f"PLANCHEREL_PRECISION must be an integer, got {raw!r}")
    set_precision(bits)


_init_from_env()


def real(x):
    """Convert x (decimal str, int, mpq, mpfr) to MPReal at working precision.

    Decimal strings are the preferred exchange format; binary floats are
    accepted but discouraged outside tests.
    """
    if isinstance(x, mpq):
        return mpfr(x.numerator) / mpfr(x.denominator)
    return mpfr(x)


def complexify(x, y=None):
    """Convert to MPComplex at working precision."""
    if y is not None:
        return mpc(real(x), real(y))
    if isinstance(x, mpc):
        return mpc(x)
    return mpc(real(x))


def rational(num, den=1):
    """Exact reduced rational with positive denominator."""
    return mpq(num, den)


def pi_real():
    return gmpy2.const_pi()


def is_complex(x):
    return isinstance(x, mpc)


def to_mpmath(x):
    """Exact conversion of mpfr/mpc to an mpmath number (no rounding)."""
    import mpmath

    if isinstance(x, mpc):
        return mpmath.mpc(to_mpmath(x.real), to_mpmath(x.imag))
    x = mpfr(x)
    if gmpy2.is_zero(x):
        return mpmath.mpf(0)
    if not gmpy2.is_finite(x):  # pragma: no cover
        return mpmath.mpf("+inf") if x > 0 else mpmath.mpf("-inf")
    man, exp = x.as_mantissa_exp()
    return mpmath.ldexp(mpmath.mpf(int(man)), int(exp))


def from_mpmath(x):
    """Convert an mpmath value to mpfr/mpc, rounding to working precision."""
    import mpmath

    if isinstance(x, mpmath.mpc):
        return mpc(from_mpmath(x.real), from_mpmath(x.imag))
    sign, man, exp, _ = mpmath.mpf(x)._mpf_
    if man == 0:
        return mpfr(0) if exp == 0 else mpfr(x)
    val = -mpfr(man) if sign else mpfr(man)
    return gmpy2.mul_2exp(val, exp) if exp >= 0 else gmpy2.div_2exp(val, -exp)


def decimal_str(x):
    """Deterministic decimal string that round-trips at working precision."""
    if isinstance(x, mpc):
        im = x.imag
        sgn = "+" if im >= 0 else "-"
        return f"{decimal_str(x.real)}{sgn}{decimal_str(abs(im))}j"
    if isinstance(x, mpq):
        return f"{x.numerator}/{x.denominator}"
    if isinstance(x, (int, mpz)):
        return str(x)
    return str(mpfr(x))


def noise_floor():
    """Magnitude below which a coefficient is working-precision junk."""
    return mpfr(2) ** (-(get_precision() - 24))
