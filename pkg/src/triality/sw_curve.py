"""The two curve-coefficient frames and the invariant-ring evaluation map.

The abstract rings are Q[a0, a2, b0, b1, b2, b3] and Q[c0, c1, c2, d0, d2,
d3] (no a1, no d1), bigraded by modular weight and z-degree, with refined
degrees counting a- resp. b-type exponents.  The frame changes substitute
one family into the other and introduce a controlled Laurent denominator
(c0 going one way, b0 the other); a polynomial is a triality invariant
exactly when its image carries no negative powers, which is the membership
test the enumerator is built on.

Evaluation sends the formal coefficients to their concrete values: each is
a polynomial in the four fundamental weak invariants K, L, M, N whose
series coefficients are ratios of E4, E6 and the discriminant.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from ._poly import SparsePoly, compose, ring_det
from .exact_series import LATTICE, FracSeries, eisenstein, eta_delta
from .invariant_ring import Invariant, KLMNPoly


class CurvePolyAB(SparsePoly):
    """Polynomial in (a0, a2, b0, b1, b2, b3).

    b0 (and, for images of c0-Laurent values, a0) may go negative only as
    the result of a frame change; fresh polynomial ring elements keep all
    exponents nonnegative.
    """

    nvars = 6
    names = ("a0", "a2", "b0", "b1", "b2", "b3")
    laurent = frozenset({0, 2})
    WEIGHTS = (4, 8, 6, 8, 10, 12)
    DEGREES = (0, 4, 0, 2, 4, 6)
    A_VARS = (0, 1)
    B_VARS = (2, 3, 4, 5)
    frame = "ab"


class CurvePolyCD(SparsePoly):
    """Polynomial in (c0, c1, c2, d0, d2, d3), Laurent in c0.

    A value represents a member of the polynomial frame iff every c0
    exponent is nonnegative (d0 can also go negative, but only as the
    image of a b0-Laurent value under the frame change).
    """

    nvars = 6
    names = ("c0", "c1", "c2", "d0", "d2", "d3")
    laurent = frozenset({0, 3})
    WEIGHTS = (4, 6, 8, 6, 10, 12)
    DEGREES = (0, 2, 4, 0, 4, 6)
    A_VARS = (0, 1, 2)
    B_VARS = (3, 4, 5)
    frame = "cd"


def poly_weight(p):
    return p.weighted_degree(type(p).WEIGHTS)


def poly_degree(p):
    return p.weighted_degree(type(p).DEGREES)


def refined_degrees(p):
    """(d_a, d_b): homogeneous exponent counts of the two variable families."""
    cls = type(p)
    da = {sum(e[i] for i in cls.A_VARS) for e in p.terms}
    db = {sum(e[i] for i in cls.B_VARS) for e in p.terms}
    if len(da) > 1 or len(db) > 1:
        raise ValueError("refined degrees are not homogeneous")
    return (da.pop() if da else 0, db.pop() if db else 0)


def curve_poly_json(p):
    return {
        "kind": "curve_poly",
        "frame": type(p).frame,
        "laurent_bounds": {
            type(p).names[i]: p.min_degree_in(i) for i in sorted(type(p).laurent)
        },
        "terms": p.to_json(),
    }


# frame-change images: the degree-shift substitutions with d1 = a1 = 0
_AB_IN_CD = (
    CurvePolyCD({(1, 0, 0, 0, 0, 0): 1}),  # a0 -> c0
    CurvePolyCD({(0, 0, 1, 0, 0, 0): 1, (-1, 2, 0, 0, 0, 0): Fraction(-1, 4)}),
    CurvePolyCD({(0, 0, 0, 1, 0, 0): 1}),  # b0 -> d0
    CurvePolyCD({(-1, 1, 0, 1, 0, 0): Fraction(-3, 2)}),
    CurvePolyCD({(0, 0, 0, 0, 1, 0): 1, (-2, 2, 0, 1, 0, 0): Fraction(3, 4)}),
    CurvePolyCD(
        {
            (0, 0, 0, 0, 0, 1): 1,
            (-1, 1, 0, 0, 1, 0): Fraction(-1, 2),
            (-3, 3, 0, 1, 0, 0): Fraction(-1, 8),
        }
    ),
)

_CD_IN_AB = (
    CurvePolyAB({(1, 0, 0, 0, 0, 0): 1}),  # c0 -> a0
    CurvePolyAB({(1, 0, -1, 1, 0, 0): Fraction(-2, 3)}),
    CurvePolyAB({(0, 1, 0, 0, 0, 0): 1, (1, 0, -2, 2, 0, 0): Fraction(1, 9)}),
    CurvePolyAB({(0, 0, 1, 0, 0, 0): 1}),  # d0 -> b0
    CurvePolyAB({(0, 0, 0, 0, 1, 0): 1, (0, 0, -1, 2, 0, 0): Fraction(-1, 3)}),
    CurvePolyAB(
        {
            (0, 0, 0, 0, 0, 1): 1,
            (0, 0, -1, 1, 1, 0): Fraction(-1, 3),
            (0, 0, -2, 3, 0, 0): Fraction(2, 27),
        }
    ),
)


def ab_to_cd(p):
    """Express an ab-frame polynomial in the cd frame (Laurent in c0)."""
    return compose(p, list(_AB_IN_CD), CurvePolyCD)


def cd_to_ab(p):
    """Express a cd-frame polynomial in the ab frame (Laurent in b0).

    Negative c0 powers are allowed and land on a0, so the two frame
    changes are mutually inverse on everything either of them produces.
    """
    return compose(p, list(_CD_IN_AB), CurvePolyAB)


def is_triality_invariant(p):
    """Membership test: the cd-frame image has no negative powers of c0."""
    return ab_to_cd(p).min_degree_in(0) >= 0


# -- evaluation into the invariant ring ------------------------------------------


@lru_cache(maxsize=None)
def _frame_forms(order):
    """The twelve coefficient values as K,L,M,N-polynomials at this order."""
    e4 = eisenstein(4, order)
    e6 = eisenstein(6, order)
    _, delta = eta_delta(order)
    e4i = e4.inverse()
    e6i = e6.inverse()
    K2 = (2, 0, 0, 0)
    K3 = (3, 0, 0, 0)
    K1 = (1, 0, 0, 0)
    L1 = (0, 1, 0, 0)
    M1 = (0, 0, 1, 0)
    N1 = (0, 0, 0, 1)
    KM = (1, 0, 1, 0)
    KL = (1, 1, 0, 0)
    ONE = (0, 0, 0, 0)
    ab = (
        KLMNPoly({ONE: e4 / 12}, 4, 0),
        KLMNPoly({K2: delta * e4i / 4, L1: -e6 / 24, M1: e4 / 24}, 8, 4),
        KLMNPoly({ONE: e6 / 216}, 6, 0),
        KLMNPoly({K1: delta * e4i}, 8, 2),
        KLMNPoly({K2: -(e6 * delta) * (e4i ** 2) / 24, L1: -(e4 ** 2) / 288, M1: e6 / 288}, 10, 4),
        KLMNPoly(
            {K3: -(delta ** 2) * (e4i ** 3), KM: delta * e4i / 4, N1: delta / 4}, 12, 6
        ),
    )
    cd = (
        KLMNPoly({ONE: e4 / 12}, 4, 0),
        KLMNPoly({K1: delta * e6i * -12}, 6, 2),
        KLMNPoly({K2: (e4 ** 2) * delta * (e6i ** 2) / 4, L1: -e6 / 24, M1: e4 / 24}, 8, 4),
        KLMNPoly({ONE: e6 / 216}, 6, 0),
        KLMNPoly({K2: -(e4 * delta) * e6i / 24, L1: -(e4 ** 2) / 288, M1: e6 / 288}, 10, 4),
        KLMNPoly(
            {K3: 2 * (delta ** 2) * (e6i ** 2), KL: e4 * delta * e6i / 4, N1: delta / 4},
            12,
            6,
        ),
    )
    return ab, cd


@lru_cache(maxsize=None)
def _frame_values(order):
    ab, cd = _frame_forms(order)
    return tuple(f.evaluate(order) for f in ab), tuple(f.evaluate(order) for f in cd)


def _evaluate(p, values, order):
    cls = type(p)
    weight = p.weighted_degree(cls.WEIGHTS)
    degree = p.weighted_degree(cls.DEGREES)
    powers = {}

    def value_power(i, e):
        key = (i, e)
        if key not in powers:
            if e >= 0:
                powers[key] = values[i] ** e
            else:
                # only the weight-carrying unit coefficients (a0, b0, c0, d0)
                # are ever inverted; they are pure series of valuation 0
                series = values[i].coefficient((0, 0, 0, 0))
                powers[key] = Invariant.from_series(
                    series.inverse() ** (-e), cls.WEIGHTS[i] * e
                )
        return powers[key]

    result = Invariant.zero(weight, degree)
    one = FracSeries.constant(1, LATTICE * order)
    for exps, coeff in p.terms.items():
        term = Invariant.from_series(one * coeff, 0)
        for i, e in enumerate(exps):
            if e:
                term = term * value_power(i, e)
        result = result + term
    return result


def evaluate_ab(p, order):
    """Substitute the concrete coefficient values into an ab-frame polynomial."""
    if order < 2:
        raise ValueError("order must be >= 2")
    return _evaluate(p, _frame_values(order)[0], order)


def evaluate_cd(p, order):
    if order < 2:
        raise ValueError("order must be >= 2")
    return _evaluate(p, _frame_values(order)[1], order)


# -- recovery of the fundamental invariants ---------------------------------------


def recover_klmn():
    """Eight polynomials evaluating to Delta K, Delta^2 L, Delta^2 M, Delta^3 N.

    First the ab frame, then the cd frame, in that order.
    """
    ab = (
        CurvePolyAB({(1, 0, 0, 1, 0, 0): 12}),
        CurvePolyAB(
            {
                (4, 0, 0, 0, 1, 0): -2,
                (3, 1, 1, 0, 0, 0): 3,
                (1, 0, 2, 0, 1, 0): 54,
                (1, 0, 1, 2, 0, 0): -27,
                (0, 1, 3, 0, 0, 0): -81,
            }
        ),
        CurvePolyAB(
            {
                (5, 1, 0, 0, 0, 0): 2,
                (3, 0, 1, 0, 1, 0): -36,
                (3, 0, 0, 2, 0, 0): -6,
                (2, 1, 2, 0, 0, 0): -54,
                (0, 0, 3, 0, 1, 0): 972,
                (0, 0, 2, 2, 0, 0): -324,
            }
        ),
        CurvePolyAB(
            {
                (6, 0, 0, 0, 0, 1): 4,
                (5, 1, 0, 1, 0, 0): -2,
                (3, 0, 2, 0, 0, 1): -216,
                (3, 0, 1, 1, 1, 0): 36,
                (3, 0, 0, 3, 0, 0): 10,
                (2, 1, 2, 1, 0, 0): 54,
                (0, 0, 4, 0, 0, 1): 2916,
                (0, 0, 3, 1, 1, 0): -972,
                (0, 0, 2, 3, 0, 0): 216,
            }
        ),
    )
    cd = (
        CurvePolyCD({(0, 1, 0, 1, 0, 0): -18}),
        CurvePolyCD(
            {
                (4, 0, 0, 0, 1, 0): -2,
                (3, 0, 1, 1, 0, 0): 3,
                (2, 2, 0, 1, 0, 0): Fraction(-9, 4),
                (1, 0, 0, 2, 1, 0): 54,
                (0, 0, 1, 3, 0, 0): -81,
            }
        ),
        CurvePolyCD(
            {
                (5, 0, 1, 0, 0, 0): 2,
                (4, 2, 0, 0, 0, 0): Fraction(-1, 2),
                (3, 0, 0, 1, 1, 0): -36,
                (2, 0, 1, 2, 0, 0): -54,
                (1, 2, 0, 2, 0, 0): -27,
                (0, 0, 0, 3, 1, 0): 972,
            }
        ),
        CurvePolyCD(
            {
                (6, 0, 0, 0, 0, 1): 4,
                (5, 1, 0, 0, 1, 0): -2,
                (4, 1, 1, 1, 0, 0): 3,
                (3, 3, 0, 1, 0, 0): Fraction(-5, 4),
                (3, 0, 0, 2, 0, 1): -216,
                (2, 1, 0, 2, 1, 0): 54,
                (1, 1, 1, 3, 0, 0): -81,
                (0, 3, 0, 3, 0, 0): -27,
                (0, 0, 0, 4, 0, 1): 2916,
            }
        ),
    )
    return ab, cd


def jacobian_klmn(order):
    """Determinants of the frame coefficients by formal K, L, M, N.

    Returns (det d(a2,b1,b2,b3)/d(K,L,M,N), det d(c1,c2,d2,d3)/d(K,L,M,N))
    as plain series: both are constant as K,L,M,N-polynomials.
    """
    ab, cd = _frame_forms(order)
    det_ab = ring_det([[f.derivative(j) for j in range(4)] for f in (ab[1], ab[3], ab[4], ab[5])])
    det_cd = ring_det([[f.derivative(j) for j in range(4)] for f in (cd[1], cd[2], cd[4], cd[5])])
    return det_ab.constant_series(), det_cd.constant_series()
