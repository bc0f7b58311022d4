"""Scalar special functions: arth, Hoelder means, the lemma-function family,
the Groetzsch ring modulus mu, the distortion function phi_K, and the
quasiconformal distance-distortion constant A(K).

mu is evaluated through the arithmetic-geometric mean; its inverse by
bisection on the strictly decreasing mu. The classical identity
phi_2(r) = 2 sqrt(r)/(1+r) is used only in tests, never here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import DomainError
from .optimize import golden_max

SQRT2_2 = math.sqrt(2.0) / 2.0
_ENDPOINT_EPS = 1e-8


def arth(x: float) -> float:
    """Inverse hyperbolic tangent on [0, 1]; arth(1) is +inf."""
    if not 0.0 <= x <= 1.0:
        raise DomainError(f"arth needs x in [0, 1], got {x}")
    if x == 1.0:
        return math.inf
    return math.atanh(x)


def th(x: float) -> float:
    return math.tanh(x)


def rprime(r: float) -> float:
    """sqrt(1 - r^2) for r in [0, 1]."""
    return math.sqrt(max(0.0, (1.0 - r) * (1.0 + r)))


def arth_complement(r: float) -> float:
    """arth(sqrt(1 - r^2)) = log((1 + r')/r), stable for tiny r."""
    _check_open01(r, "arth_complement")
    return math.log((1.0 + rprime(r)) / r)


def holder_mean(p: float, r: float, s: float) -> float:
    """Power mean of order p; geometric mean at p = 0."""
    if r <= 0.0 or s <= 0.0:
        raise DomainError("holder_mean needs positive arguments")
    if p == 0.0:
        return math.sqrt(r * s)
    return ((r**p + s**p) / 2.0) ** (1.0 / p)


# ---------------------------------------------------------------------------
# Lemma-function family


def _check_open01(r: float, what: str):
    if not 0.0 < r < 1.0:
        raise DomainError(f"{what} needs r in (0, 1), got {r}")


def _arth_over_r(r: float) -> float:
    # arth(r)/r, series near 0 to dodge 0/0
    if r < 1e-4:
        r2 = r * r
        return 1.0 + r2 / 3.0 + r2 * r2 / 5.0
    return math.atanh(r) / r


def lemma_f_c(c: float, r: float) -> float:
    """f_c(r) = (1 - (c r')^2) / (r arth(c r)); strictly decreasing in r."""
    if not 0.0 < c <= 1.0:
        raise DomainError("lemma_f_c needs c in (0, 1]")
    _check_open01(r, "lemma_f_c")
    if c == 1.0:
        # reduces to r / arth r
        if r < _ENDPOINT_EPS:
            return 1.0
        return r / math.atanh(r)
    rp = rprime(r)
    return (1.0 - (c * rp) ** 2) / (r * math.atanh(c * r))

def lemma_F_c(c: float, r: float) -> float:
    """F_c(r) = arth(c r) arth(c r'); max (arth(c sqrt2/2))^2 at r = sqrt2/2."""
    if not 0.0 < c <= 1.0:
        raise DomainError("lemma_F_c needs c in (0, 1]")
    _check_open01(r, "lemma_F_c")
    return math.atanh(c * r) * math.atanh(c * rprime(r))


def lemma_G_c(c: float, r: float) -> float:
    """G_c(r) = arth(c r) + arth(c r')."""
    if not 0.0 < c <= 1.0:
        raise DomainError("lemma_G_c needs c in (0, 1]")
    _check_open01(r, "lemma_G_c")
    return arth(c * r) + arth(c * rprime(r))


_C_LOW = math.sqrt(2.0 / 3.0)
_C_HIGH = math.sqrt(2.0 * (math.sqrt(2.0) - 1.0))


@dataclass(frozen=True)
class GRange:
    case: int
    lower: float
    upper: float
    lower_closed: bool
    upper_closed: bool
    r0: float | None = None


def g_range(c: float) -> GRange:
    """Closed-form range of G_c, split into the four regimes of c.

    Boundary values of c route to cases (1) and (3) respectively, matching
    the half-open case intervals.
    """
    if not 0.0 < c <= 1.0:
        raise DomainError("g_range needs c in (0, 1]")
    if c == 1.0:
        return GRange(4, arth(2.0 * math.sqrt(2.0) / 3.0), math.inf, True, False)
    mid_value = arth(2.0 * math.sqrt(2.0) * c / (2.0 + c * c))
    if c <= _C_LOW:
        return GRange(1, arth(c), mid_value, False, True)
    radicand = (2.0 - c * c) * (3.0 * c * c - 2.0)
    assert radicand >= 0.0, "radicand must be nonnegative for c^2 > 2/3"
    m = math.sqrt(radicand)
    r0 = math.sqrt((1.0 - m / (c * c)) / 2.0)
    r0p = rprime(r0)
    top = arth(c * (r0 + r0p) / (1.0 + c * c * r0 * r0p))
    if c < _C_HIGH:
        return GRange(2, arth(c), top, False, True, r0=r0)
    return GRange(3, mid_value, top, True, True, r0=r0)


def aux_h1(r: float) -> float:
    """r'/arth(r'); strictly increasing and concave, range (0, 1)."""
    _check_open01(r, "aux_h1")
    rp = rprime(r)
    if rp < _ENDPOINT_EPS:
        return 0.0 if rp == 0.0 else rp / math.atanh(rp)
    return rp / math.atanh(rp)


def aux_h(r: float) -> float:
    """r/arth r + r'/arth r'; peaks at r = sqrt2/2 with value sqrt2/log(1+sqrt2)."""
    _check_open01(r, "aux_h")
    return lemma_f_c(1.0, r) + aux_h1(r)


def aux_g_le2(p: float, r: float) -> float:
    """(r/r') (arth r / arth r')^(p-1)."""
    _check_open01(r, "aux_g_le2")
    rp = rprime(r)
    return (r / rp) * (math.atanh(r) / math.atanh(rp)) ** (p - 1.0)


def aux_slope_ratio(r: float) -> float:
    """(r'^4 arth r - r(1+r^2)) / (r'^2 ((1+r^2) arth r - r)); decreasing, < -2."""
    _check_open01(r, "aux_slope_ratio")
    if r < 1e-4:
        return -2.0
    rp2 = 1.0 - r * r
    at = math.atanh(r)
    num = rp2 * rp2 * at - r * (1.0 + r * r)
    den = rp2 * ((1.0 + r * r) * at - r)
    return num / den


def aux_h_p(p: float, r: float) -> float:
    """1 + p r'^2 arth(r)/r - (1+r^2) arth(r)/r."""
    _check_open01(r, "aux_h_p")
    a = _arth_over_r(r)
    return 1.0 + p * (1.0 - r * r) * a - (1.0 + r * r) * a


def aux_g_pq(p: float, q: float, r: float) -> float:
    """arth(r)^(q-1) / (r^(p-1) r'^2)."""
    _check_open01(r, "aux_g_pq")
    return math.atanh(r) ** (q - 1.0) / (r ** (p - 1.0) * (1.0 - r * r))


class LemmaAux(Enum):
    H1 = "h1"
    H = "h"
    G_LE2 = "g_le2"
    SLOPE_RATIO = "slope_ratio"
    H_P = "h_p"
    G_PQ = "g_pq"


def lemma_aux(name, r: float, p: float | None = None, q: float | None = None) -> float:
    """Dispatch to the named auxiliary lemma function."""
    name = LemmaAux(name)
    if name is LemmaAux.H1:
        return aux_h1(r)
    if name is LemmaAux.H:
        return aux_h(r)
    if name is LemmaAux.G_LE2:
        if p is None:
            raise DomainError("g_le2 needs parameter p")
        return aux_g_le2(p, r)
    if name is LemmaAux.SLOPE_RATIO:
        return aux_slope_ratio(r)
    if name is LemmaAux.H_P:
        if p is None:
            raise DomainError("h_p needs parameter p")
        return aux_h_p(p, r)
    if p is None or q is None:
        raise DomainError("g_pq needs parameters p and q")
    return aux_g_pq(p, q, r)


def threshold_C() -> float:
    """1 - log(1+sqrt2)/sqrt2, the monotonicity threshold of aux_g_le2."""
    return 1.0 - math.log(math.sqrt(2.0) + 1.0) / math.sqrt(2.0)


def big_C_of_p(p: float) -> float:
    """sup over (0,1) of aux_h_p, defined for p < -2 where it is attained.

    Log-spaced grid (dense near both endpoints) followed by golden-section
    refinement; aux_h_p is unimodal there.
    """
    if p >= -2.0:
        raise DomainError("big_C_of_p needs p < -2 (the sup is not attained otherwise)")
    n = 2048
    left = [10.0 ** (-12.0 + 11.7 * k / (n - 1)) for k in range(n)]
    right = [1.0 - x for x in left]
    grid = sorted(set(left + right))
    vals = [aux_h_p(p, r) for r in grid]
    i = max(range(len(grid)), key=lambda k: vals[k])
    lo = grid[max(i - 1, 0)]
    hi = grid[min(i + 1, len(grid) - 1)]
    _, sup = golden_max(lambda r: aux_h_p(p, r), lo, hi, tol=1e-12)
    return max(sup, vals[i])


class ConvexityClass(Enum):
    CONVEX_D1 = "convex_d1"
    CONVEX_D2 = "convex_d2"
    NOT_CONVEX = "not_convex"


@dataclass(frozen=True)
class ConvexityRegionPoint:
    p: float
    q: float
    classification: ConvexityClass


def classify_convexity(p: float, q: float) -> ConvexityRegionPoint:
    """Region where arth is strictly H_{p,q}-convex on (0, 1)."""
    if p >= -2.0:
        cls = ConvexityClass.CONVEX_D1 if q >= p else ConvexityClass.NOT_CONVEX
    else:
        cls = ConvexityClass.CONVEX_D2 if q >= big_C_of_p(p) else ConvexityClass.NOT_CONVEX
    return ConvexityRegionPoint(p, q, cls)


# ---------------------------------------------------------------------------
# Groetzsch modulus and distortion


def agm(a: float, b: float) -> float:
    """Arithmetic-geometric mean; quadratic convergence, 64-iteration cap."""
    for _ in range(64):
        if abs(a - b) <= 1e-16 * a:
            break
        a, b = 0.5 * (a + b), math.sqrt(a * b)
    return 0.5 * (a + b)


def grotzsch_mu(r: float) -> float:
    """Conformal modulus of the plane Groetzsch ring; decreasing on (0,1)."""
    if not 0.0 < r < 1.0:
        raise DomainError(f"grotzsch_mu needs r in (0, 1), got {r}")
    return (math.pi / 2.0) * agm(1.0, rprime(r)) / agm(1.0, r)


def mu_inverse(y: float) -> float:
    """Inverse of grotzsch_mu by bisection to |mu(r) - y| < 1e-13."""
    if not y > 0.0:
        raise DomainError("mu_inverse needs y > 0")
    lo, hi = 1e-300, 1.0 - 1e-16
    if grotzsch_mu(lo) <= y:
        return lo
    if grotzsch_mu(hi) >= y:
        return hi
    for _ in range(2000):
        mid = 0.5 * (lo + hi)
        v = grotzsch_mu(mid)
        if abs(v - y) < 1e-13 or (hi - lo) <= 1e-17 * max(mid, 1e-300):
            return mid
        if v > y:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def phi_K(K: float, r: float) -> float:
    """Hersch-Pfluger distortion mu^{-1}(mu(r)/K), K >= 1."""
    if K < 1.0:
        raise DomainError("phi_K needs K >= 1")
    if not 0.0 < r < 1.0:
        raise DomainError("phi_K needs r in (0, 1)")
    return mu_inverse(grotzsch_mu(r) / K)


def distortion_A(K: float) -> float:
    """A(K) = 2 arth(phi_K(th 1/2)); A(1) = 1."""
    if K < 1.0:
        raise DomainError("distortion_A needs K >= 1")
    return 2.0 * math.atanh(phi_K(K, math.tanh(0.5)))


def distortion_bracket(K: float) -> tuple[float, float, float, float, float]:
    """(K, u(K-1)+1, log(cosh(K arccosh e)), A(K), v(K-1)+K), a monotone chain."""
    arch_e = math.acosh(math.e)
    u = arch_e * math.tanh(arch_e)
    v = math.log(2.0 * (1.0 + math.sqrt(1.0 - 1.0 / (math.e * math.e))))
    return (
        K,
        u * (K - 1.0) + 1.0,
        math.log(math.cosh(K * arch_e)),
        distortion_A(K),
        v * (K - 1.0) + K,
    )
