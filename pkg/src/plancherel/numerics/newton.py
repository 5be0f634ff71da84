"""Dense multivariate Newton iteration at working precision.

The curve solvers feed this closed-form Jacobians; a central finite-difference
fallback is available when none is supplied.  Systems here are tiny (n <= 4),
so plain Gaussian elimination with partial pivoting is plenty.
"""

from dataclasses import dataclass

import gmpy2
from gmpy2 import mpfr

from .context import get_precision, real


class NewtonError(ArithmeticError):
    pass


class SingularJacobianError(NewtonError):
    pass


class NonConvergenceError(NewtonError):
    pass


@dataclass(frozen=True)
class NewtonResult:
    x: tuple
    iterations: int
    residual_norm: object


def _norm(v):
    return max((abs(c) for c in v), default=mpfr(0))


def _solve_linear(mat, rhs):
    """Gaussian elimination with partial pivoting; mat is a list of rows."""
    n = len(rhs)
    a = [list(row) + [rhs[i]] for i, row in enumerate(mat)]
    for col in range(n):
        piv = max(range(col, n), key=lambda r: abs(a[r][col]))
        if a[piv][col] == 0 or not gmpy2.is_finite(abs(a[piv][col])):
            raise SingularJacobianError("singular or non-finite Jacobian")
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        for r in range(col + 1, n):
            fac = a[r][col] * inv
            if fac == 0:
                continue
            for c in range(col, n + 1):
                a[r][c] -= fac * a[col][c]
    x = [None] * n
    for row in range(n - 1, -1, -1):
        acc = a[row][n]
        for c in range(row + 1, n):
            acc -= a[row][c] * x[c]
        x[row] = acc / a[row][row]
    return x


def _fd_jacobian(system, x, fx):
    h = mpfr(2) ** (-(get_precision() // 2))
    n = len(x)
    cols = []
    for j in range(n):
        step = h * max(mpfr(1), abs(x[j]))
        xp = list(x)
        xm = list(x)
        xp[j] += step
        xm[j] -= step
        fp, fm = system(xp), system(xm)
        cols.append([(fp[i] - fm[i]) / (2 * step) for i in range(n)])
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def newton_solve(system, seed, tol=None, jacobian=None, max_iter=80):
    """Solve system(x) = 0 from seed; returns NewtonResult.

    system maps a list of n values to n residuals; jacobian, if given, maps x
    to the n x n matrix d residual_i / d x_j.  Steps are damped (halved up to
    30 times) whenever the residual norm would not decrease.
    """
    if tol is None:
        tol = mpfr(2) ** (-(get_precision() - 56))
    x = [real(c) for c in seed]
    fx = system(x)
    fnorm = _norm(fx)
    for it in range(1, max_iter + 1):
        if fnorm < tol:
            return NewtonResult(tuple(x), it - 1, fnorm)
        jac = jacobian(x) if jacobian is not None else _fd_jacobian(system, x, fx)
        step = _solve_linear(jac, fx)
        scale = mpfr(1)
        for _ in range(30):
            trial = [x[i] - scale * step[i] for i in range(len(x))]
            ftrial = system(trial)
            tnorm = _norm(ftrial)
            if gmpy2.is_finite(tnorm) and (tnorm < fnorm or fnorm < tol * 2**20):
                break
            scale /= 2
        else:
            raise NonConvergenceError(f"no descent after damping (residual {fnorm})")
        x, fx, fnorm = trial, ftrial, tnorm
    if fnorm < tol:
        return NewtonResult(tuple(x), max_iter, fnorm)
    raise NonConvergenceError(f"residual {fnorm} above tolerance after {max_iter} iterations")
