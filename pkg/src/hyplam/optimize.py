"""Scalar golden-section extremum search and bisection root finding.

These are deliberately plain implementations: they are used as independent
numerical oracles against closed-form answers, so they must not share code
with the formulas they are checking.
"""

import math

from .errors import ConvergenceError, NoRootError

_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0  # 1/phi


def golden_min(f, a, b, tol=1e-12, max_iter=200):
    """Minimize a unimodal f on [a, b]; returns (x, f(x))."""
    c = b - (b - a) * _INVPHI
    d = a + (b - a) * _INVPHI
    fc, fd = f(c), f(d)
    for _ in range(max_iter):
        if abs(b - a) <= tol:
            break
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - (b - a) * _INVPHI
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + (b - a) * _INVPHI
            fd = f(d)
    x = 0.5 * (a + b)
    return x, f(x)


def golden_max(f, a, b, tol=1e-12, max_iter=200):
    x, fx = golden_min(lambda t: -f(t), a, b, tol=tol, max_iter=max_iter)
    return x, -fx


def refine_grid_min(f, xs, fs, tol=1e-12):
    """Golden refinement around the best point of a sampled grid."""
    i = min(range(len(xs)), key=lambda k: fs[k])
    lo = xs[max(i - 1, 0)]
    hi = xs[min(i + 1, len(xs) - 1)]
    if lo == hi:
        return xs[i], fs[i]
    return golden_min(f, lo, hi, tol=tol)


def refine_grid_max(f, xs, fs, tol=1e-12):
    x, fx = refine_grid_min(lambda t: -f(t), xs, [-v for v in fs], tol=tol)
    return x, -fx


def bisect_root(f, a, b, tol=1e-12, max_iter=200):
    """Root of a sign-changing f on [a, b] by plain bisection."""
    fa, fb = f(a), f(b)
    if fa == 0.0:
        return a
    if fb == 0.0:
        return b
    if fa * fb > 0.0:
        raise NoRootError(f"no sign change on [{a}, {b}]")
    for _ in range(max_iter):
        m = 0.5 * (a + b)
        fm = f(m)
        if fm == 0.0 or (b - a) <= tol:
            return m
        if fa * fm < 0.0:
            b, fb = m, fm
        else:
            a, fa = m, fm
    if (b - a) <= tol:
        return 0.5 * (a + b)
    raise ConvergenceError("bisection did not reach tolerance")
