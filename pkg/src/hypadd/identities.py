"""Coefficient identities satisfied by the addition law.

The h-coefficients below always refer to the RFunction built inside
`star` for the pair being tested, indexed by co-weight: extract_h(r, k)
is the coefficient of the monomial of weight 3g - k, or zero when that
co-weight has no monomial.
"""

from typing import NamedTuple

from .expr import Const, Var
from .field import Scalar
from .groupoid import GroupoidPoint, RFunction, star_detail


class HCoeffs(NamedTuple):
    h1: Scalar
    h2: Scalar
    h3: Scalar


def extract_h(r: RFunction, coweight: int) -> Scalar:
    return r.h_at(coweight)


def hcoeffs(r: RFunction) -> HCoeffs:
    return HCoeffs(r.h_at(1), r.h_at(2), r.h_at(3))


def _p2(a: GroupoidPoint) -> Scalar:
    return a.p_even[-1]


def _p3(a: GroupoidPoint) -> Scalar:
    return a.p_odd[-1]


def check_pgg_sum(a1: GroupoidPoint, a2: GroupoidPoint) -> bool:
    """p2(a1) + p2(a2) + p2(a1*a2) == h1^2 - 2 h2, any genus."""
    res = star_detail(a1, a2)
    h1 = extract_h(res.r, 1)
    h2 = extract_h(res.r, 2)
    lhs = _p2(a1) + _p2(a2) + _p2(res.point)
    return lhs == h1 * h1 - 2 * h2


def check_g1_wp_prime_sum(a1: GroupoidPoint, a2: GroupoidPoint) -> bool:
    """Genus-1 odd-coordinate sum rule.

    With P = p2 and P' = 2 p3 (so that the third point's P' comes from
    the product), both of these must hold exactly:

        -P'(a1) - P'(a2) + P'(a3) = -H^3/4 - 3 (P'(a2)P(a1) - P'(a1)P(a2)) / (P(a1) - P(a2))

    where H = (P'(a1) - P'(a2)) / (P(a1) - P(a2)), and the same quantity
    equals 2(-h1^3 + 3 h1 h2 - 3 h3) in the product's h-coefficients
    (h2 = 0 identically at genus 1).
    """
    if a1.genus != 1:
        raise ValueError("genus-1 identity")
    res = star_detail(a1, a2)
    h1, h2, h3 = hcoeffs(res.r)
    p_1, p_2 = _p2(a1), _p2(a2)
    pp_1, pp_2 = 2 * _p3(a1), 2 * _p3(a2)
    pp_3 = 2 * _p3(res.point)
    lhs = -pp_1 - pp_2 + pp_3
    big_h = (pp_1 - pp_2) / (p_1 - p_2)
    quarter = a1.field.scalar(1) / a1.field.scalar(4)
    rhs = -quarter * big_h**3 - 3 * (pp_2 * p_1 - pp_1 * p_2) / (p_1 - p_2)
    via_h = 2 * (-(h1**3) + 3 * h1 * h2 - 3 * h3)
    return lhs == rhs and lhs == via_h


def check_zp_consistency(a1: GroupoidPoint, a2: GroupoidPoint) -> bool:
    """Genus-2 consistency of the cubic zeta relation.

    Writing z2s = -h1, p22s = h1^2 - 2 h2 (checked against the actual
    even-coordinate sum), p222s = 2(p3(a1) + p3(a2) - p3(a3)), and
    z1s = p222s/2 - h1^3 + 3 h1 h2, the combination

        2 z1s - p222s - 3 p22s z2s + z2s^3

    must vanish.  h3 must also be absent (gap co-weight) at genus 2.
    """
    if a1.genus != 2:
        raise ValueError("genus-2 identity")
    res = star_detail(a1, a2)
    h1, h2, h3 = hcoeffs(res.r)
    if not h3.is_zero():
        return False
    p22s = _p2(a1) + _p2(a2) + _p2(res.point)
    if p22s != h1 * h1 - 2 * h2:
        return False
    p222s = 2 * (_p3(a1) + _p3(a2) - _p3(res.point))
    half = a1.field.scalar(1) / a1.field.scalar(2)
    z2s = -h1
    z1s = half * p222s - h1**3 + 3 * h1 * h2
    value = 2 * z1s - p222s - 3 * p22s * z2s + z2s**3
    return value.is_zero()


def zp_formal_expression():
    """The cubic zeta relation with its substitutions left symbolic.

    Variables: h1, h2, and t for the odd-coordinate sum p222s.  The
    returned tree is identically zero as a rational function, which the
    tests confirm by evaluation at random points.
    """
    h1, h2, t = Var("h1"), Var("h2"), Var("t")
    half = Const(1) / Const(2)
    z2s = -h1
    p22s = h1 * h1 - 2 * h2
    z1s = half * t - h1 * h1 * h1 + 3 * h1 * h2
    return 2 * z1s - t - 3 * p22s * z2s + z2s * z2s * z2s
