"""Lambert and ideal hyperbolic quadrilaterals and their sharp distance bounds.

A Lambert quadrilateral (three right angles, fourth angle phi in [0, pi/2))
is normalized so that the right-angle vertex v_a sits at the origin, v_b on
the positive real axis, v_d on the positive imaginary axis, and v_c = t e^{i
theta}. The whole shape is then parametrized by (L, theta) with
L = th rho(v_a, v_c) = 2t/(1+t^2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import DomainError, InconsistentQuadrilateralError
from .geometry import Point, absolute_ratio
from .specfun import arth, rprime

SQRT2 = math.sqrt(2.0)

#: upper limit of the first sum-bound regime, sqrt(2/3)
SUM_CASE1_MAX = math.sqrt(2.0 / 3.0)
#: lower limit of the third sum-bound regime, sqrt(2(sqrt2 - 1))
SUM_CASE3_MIN = math.sqrt(2.0 * (SQRT2 - 1.0))

#: sharp product bound for ideal quadrilaterals, (2 log(1+sqrt2))^2
IDEAL_PRODUCT_BOUND = (2.0 * math.log(SQRT2 + 1.0)) ** 2
#: sharp sum lower bound for ideal quadrilaterals, 4 log(1+sqrt2)
IDEAL_SUM_BOUND = 4.0 * math.log(SQRT2 + 1.0)


@dataclass(frozen=True)
class LambertQuad:
    L: float
    theta: float
    t: float
    vertices: tuple[Point, Point, Point, Point]
    d1: float
    d2: float
    phi: float


@dataclass(frozen=True)
class BoundReport:
    quantity: str  # "product" | "sum"
    params: dict = field(default_factory=dict)
    case_label: str = ""
    lower: float = -math.inf
    upper: float = math.inf
    observed: float | None = None
    equality_witness: float | None = None
    satisfied: bool = True

    def to_dict(self) -> dict:
        return {
            "quantity": self.quantity,
            "params": dict(self.params),
            "case_label": self.case_label,
            "lower": self.lower,
            "upper": self.upper,
            "observed": self.observed,
            "equality_witness": self.equality_witness,
            "satisfied": self.satisfied,
        }


def _check_L(L: float):
    if not 0.0 < L <= 1.0:
        raise DomainError(f"L must lie in (0, 1], got {L}")


def _check_theta(theta: float):
    if not 0.0 < theta < math.pi / 2.0:
        raise DomainError(f"theta must lie in (0, pi/2), got {theta}")


def lambert_from(L: float, theta: float) -> LambertQuad:
    """Build the normalized Lambert quadrilateral for (L, theta).

    d1 = arth(L cos theta) and d2 = arth(L sin theta) are the opposite-side
    distances; t is the root of L t^2 - 2t + L = 0 inside (0, 1].
    """
    _check_L(L)
    _check_theta(theta)
    t = L / (1.0 + math.sqrt(1.0 - L * L))
    d1 = arth(L * math.cos(theta))
    d2 = arth(L * math.sin(theta))
    phi = beardon_phi(d1, d2)
    v_a = Point.of(0.0)
    v_b = Point.of(math.tanh(d1 / 2.0))
    v_c = Point.of(t * complex(math.cos(theta), math.sin(theta)))
    v_d = Point.of(1j * math.tanh(d2 / 2.0))
    return LambertQuad(L=L, theta=theta, t=t, vertices=(v_a, v_b, v_c, v_d), d1=d1, d2=d2, phi=phi)


def beardon_phi(d1: float, d2: float) -> float:
    """Fourth angle from sh(d1) sh(d2) = cos(phi)."""
    if d1 < 0.0 or d2 < 0.0:
        raise DomainError("side distances must be nonnegative")
    prod = math.sinh(d1) * math.sinh(d2)
    # rounding slack scales with the conditioning of sh(arth(.)) near the
    # boundary case sh(d1) sh(d2) = 1
    slack = 1e-11 * (1.0 + math.cosh(d1) * math.cosh(d2))
    if prod > 1.0 + slack:
        raise InconsistentQuadrilateralError(
            f"sh(d1) sh(d2) = {prod} exceeds 1: not a Lambert quadrilateral"
        )
    return math.acos(min(prod, 1.0))


def product_bound(L: float) -> float:
    """Sharp bound (arth(L sqrt2/2))^2 for d1*d2; equality at theta = pi/4."""
    _check_L(L)
    return arth(SQRT2 / 2.0 * L) ** 2


def product_report(L: float, theta: float | None = None) -> BoundReport:
    bound = product_bound(L)
    observed = None
    satisfied = True
    if theta is not None:
        q = lambert_from(L, theta)
        observed = q.d1 * q.d2
        satisfied = observed <= bound + 1e-12
    return BoundReport(
        quantity="product",
        params={"L": L} | ({} if theta is None else {"theta": theta}),
        case_label="product",
        lower=0.0,
        upper=bound,
        observed=observed,
        equality_witness=math.pi / 4.0,
        satisfied=satisfied,
    )


def sum_bounds(L: float, theta: float | None = None) -> BoundReport:
    """Range of d1 + d2 over theta, split into the four regimes of L.

    L exactly at sqrt(2/3) goes to case 1 and exactly at sqrt(2(sqrt2-1))
    to case 3, matching the half-open case intervals. Lower bounds in
    cases 1 and 2 are open (approached as theta -> 0 or pi/2) and carry
    no equality witness.
    """
    _check_L(L)
    if L == 1.0:
        case = 4
        lower = arth(2.0 * SQRT2 / 3.0)
        upper = math.inf
        witness = math.pi / 4.0
    elif L <= SUM_CASE1_MAX:
        case = 1
        lower = arth(L)
        upper = arth(2.0 * SQRT2 * L / (2.0 + L * L))
        witness = math.pi / 4.0
    else:
        m = math.sqrt((2.0 - L * L) * (3.0 * L * L - 2.0))
        r0 = math.sqrt((1.0 - m / (L * L)) / 2.0)
        r0p = rprime(r0)
        top = arth(L * (r0 + r0p) / (1.0 + L * L * r0 * r0p))
        witness = math.acos(r0)
        if L < SUM_CASE3_MIN:
            case = 2
            lower = arth(L)
            upper = top
        else:
            case = 3
            lower = arth(2.0 * SQRT2 * L / (2.0 + L * L))
            upper = top
    observed = None
    satisfied = True
    if theta is not None:
        q = lambert_from(L, theta)
        observed = q.d1 + q.d2
        satisfied = lower - 1e-12 <= observed <= upper + 1e-12
    return BoundReport(
        quantity="sum",
        params={"L": L} | ({} if theta is None else {"theta": theta}),
        case_label=f"case {case}",
        lower=lower,
        upper=upper,
        observed=observed,
        equality_witness=witness,
        satisfied=satisfied,
    )


def ideal_quad(alpha: float) -> tuple[float, float]:
    """Opposite-side distances (2 arth cos a, 2 arth sin a) of the normalized
    ideal quadrilateral with vertex half-angle alpha."""
    if not 0.0 < alpha < math.pi / 2.0:
        raise DomainError(f"alpha must lie in (0, pi/2), got {alpha}")
    return 2.0 * arth(math.cos(alpha)), 2.0 * arth(math.sin(alpha))


def alpha_from_quadruple(a, b, c, d) -> float:
    """Half-angle arccos(sqrt(1/|a,b,c,d|)) of an ideal quadrilateral given
    its boundary vertices in positive order."""
    ratio = absolute_ratio(a, b, c, d)
    if ratio < 1.0:
        raise DomainError(
            f"absolute ratio {ratio} < 1: points are not in the assumed positive order"
        )
    return math.acos(math.sqrt(1.0 / ratio))
