"""Closed-form invariants of generic surface projections and the complexity
predictions they imply; regenerates the two published value tables.

Everything here is exact wide-integer arithmetic; parameters into the
millions are fine.
"""

from dataclasses import dataclass
from math import comb
from typing import Optional

from .errors import ExceptionalCaseError, InvariantError

TABLE_ALPHAS = (5, 6, 7, 8, 9, 10, 20, 50, 100)


@dataclass(frozen=True)
class SurfaceInvariants:
    """(degree, sectional genus, arithmetic genus, optional chi(O_S))."""

    degree: int
    sectional_genus: int
    arithmetic_genus: int
    chi: Optional[int] = None

    def __post_init__(self):
        if self.degree < 3:
            raise InvariantError("surface degree must be at least 3")


@dataclass(frozen=True)
class Prediction:
    """Derived double-curve data and the predicted complexities."""

    invariants: SurfaceInvariants
    deg_y1: int
    g_y1: int
    nodes_y1: int
    triple_points: Optional[int]
    M: int
    m: Optional[int]
    exceptional_case: Optional[str]


def double_curve_degree(d, sectional_genus):
    """Degree of the double curve of a generic projection to P^3."""
    value = comb(d - 1, 2) - sectional_genus
    if value < 0:
        raise InvariantError(
            f"negative double-curve degree from d={d}, g(H)={sectional_genus}")
    return value


def double_curve_genus(d, sectional_genus, arithmetic_genus):
    return (comb(d - 1, 3) - comb(d - 1, 2) + sectional_genus
            - arithmetic_genus + 1)


def triple_points(d, sectional_genus, chi):
    """Count of apparent triple points of the projected surface."""
    return comb(d - 1, 3) - sectional_genus * (d - 3) + 2 * chi - 2


def curve_complexity(d, genus):
    """Graded-lex degree complexity of a smooth nondegenerate curve."""
    if d < 3:
        raise InvariantError("curve degree must be at least 3")
    return max(d, 1 + comb(d - 1, 2) - genus)


def _ci_arithmetic_genus(alpha):
    num = alpha * (2 * alpha * alpha - 9 * alpha + 13)
    if num % 6:
        raise InvariantError("non-integral arithmetic genus")
    return num // 6 - 1


def ci_invariants(alpha):
    """Invariants of a surface cut out by a quadric and a degree-alpha form."""
    if alpha < 2:
        raise ExceptionalCaseError("need alpha >= 2")
    pa = _ci_arithmetic_genus(alpha)
    return SurfaceInvariants(2 * alpha, (alpha - 1) ** 2, pa, chi=pa + 1)


def acm_invariants(alpha):
    """Invariants of the degree-(2*alpha - 1) projectively CM family."""
    if alpha < 2:
        raise ExceptionalCaseError("need alpha >= 2")
    pa = 2 * comb(alpha - 1, 3)
    return SurfaceInvariants(2 * alpha - 1, 2 * comb(alpha - 1, 2), pa,
                             chi=pa + 1)


def _family_m(inv):
    """Regularity when the invariants match one of the two quadric families."""
    d = inv.degree
    if d % 2 == 0:
        alpha = d // 2
        if alpha >= 2:
            ref = ci_invariants(alpha)
            if (ref.sectional_genus == inv.sectional_genus
                    and ref.arithmetic_genus == inv.arithmetic_genus):
                return alpha + 1
    else:
        alpha = (d + 1) // 2
        if alpha >= 2:
            ref = acm_invariants(alpha)
            if (ref.sectional_genus == inv.sectional_genus
                    and ref.arithmetic_genus == inv.arithmetic_genus):
                return alpha
    return None


def surface_complexity_on_quadric(inv):
    """Predicted M for a smooth surface in P^4 lying on a quadric.

    Degrees 3, 4, 5 are the exceptional cases where M equals the degree; from
    degree 6 on, M = 2 + C(deg Y1 - 1, 2) - g(Y1).  The equivalent direct
    expansion in (d, sectional genus, arithmetic genus) is evaluated too and
    must agree.
    """
    d = inv.degree
    deg_y1 = double_curve_degree(d, inv.sectional_genus)
    g_y1 = double_curve_genus(d, inv.sectional_genus, inv.arithmetic_genus)
    nodes = comb(deg_y1 - 1, 2) - g_y1
    if nodes < 0:
        raise InvariantError(
            f"negative node count: deg Y1={deg_y1}, g(Y1)={g_y1}")
    t = (triple_points(d, inv.sectional_genus, inv.chi)
         if inv.chi is not None else None)
    exceptional = None
    if d == 3:
        big_m = 3
        exceptional = "scroll"
    elif d == 4:
        big_m = 4
        exceptional = "ci22"
    elif d == 5:
        big_m = 5
        exceptional = "castelnuovo5"
    else:
        big_m = 2 + nodes
        direct = (comb(comb(d - 1, 2) - inv.sectional_genus - 1, 2)
                  - comb(d - 1, 3) + comb(d - 1, 2) - inv.sectional_genus
                  + inv.arithmetic_genus + 1)
        if direct != big_m:
            raise InvariantError(
                f"three-invariant expansion disagrees: {direct} vs {big_m}")
    return Prediction(inv, deg_y1, g_y1, nodes, t, big_m, _family_m(inv),
                      exceptional)


def ci_complexity(alpha):
    """Closed-form M for the (2, alpha) complete intersection, alpha >= 3."""
    if alpha < 3:
        raise ExceptionalCaseError(
            "alpha < 3 is an exceptional case; use "
            "surface_complexity_on_quadric instead")
    num = alpha ** 4 - 4 * alpha ** 3 + 5 * alpha ** 2 - 2 * alpha + 4
    if num % 2:
        raise InvariantError("non-integral complexity")
    return num // 2


def acm_complexity(alpha):
    """Closed-form M for the degree-(2*alpha - 1) CM family, alpha >= 4."""
    if alpha < 4:
        raise ExceptionalCaseError(
            "alpha < 4 is an exceptional case; use "
            "surface_complexity_on_quadric instead")
    num = alpha ** 4 - 6 * alpha ** 3 + 13 * alpha ** 2 - 12 * alpha + 8
    if num % 2:
        raise InvariantError("non-integral complexity")
    return num // 2


def table_rows():
    """Both published tables: (alpha, M, m) per row."""
    ci = [(a, ci_complexity(a), a + 1) for a in TABLE_ALPHAS]
    acm = [(a, acm_complexity(a), a) for a in TABLE_ALPHAS]
    return {"ci": ci, "acm": acm}
