import random
from fractions import Fraction as F

import pytest

from triality.covariants import (
    BadOrderError,
    FormPoly,
    NegativeOrderError,
    NotHomogeneousError,
    NotPolynomialError,
    cubic_form,
    gordan_generators,
    hat_coefficients,
    is_semiinvariant,
    order_of,
    psi_forward,
    psi_inverse,
    quadratic_form,
    refined_form_degrees,
    roberts_to_covariant,
    roberts_to_semiinvariant,
    semiinvariant_dimension,
    transvectant,
    uv_order,
)
from triality.sw_curve import CurvePolyAB, is_triality_invariant

AL0, AL1, AL2 = (FormPoly.variable(i) for i in range(3))
BE0, BE1, BE2, BE3 = (FormPoly.variable(3 + i) for i in range(4))


def test_zeroth_transvectant_is_product():
    f, g = quadratic_form(), cubic_form()
    assert transvectant(f, g, 0) == f * g


def test_second_transvectant_of_quadratic():
    f = quadratic_form()
    assert transvectant(f, f, 2) == 2 * AL0 * AL2 - AL1 * AL1 / 2


def test_first_transvectant_coefficients():
    f, g = quadratic_form(), cubic_form()
    fg1 = transvectant(f, g, 1)
    assert fg1.coefficient((1, 0, 0, 0, 1, 0, 0, 3, 0)) == F(1, 3)
    assert fg1.coefficient((0, 1, 0, 1, 0, 0, 0, 3, 0)) == F(-1, 2)
    assert uv_order(fg1) == 3


def test_odd_self_transvectants_vanish():
    f, g = quadratic_form(), cubic_form()
    P = transvectant(g, g, 2)
    for X in (f, g, P):
        assert transvectant(X, X, 1).is_zero
    assert transvectant(g, g, 3).is_zero


def test_bad_order():
    f = quadratic_form()
    with pytest.raises(BadOrderError):
        transvectant(f, f, 3)
    with pytest.raises(BadOrderError):
        transvectant(f, f, 2, n1=3)


def test_semiinvariance():
    assert is_semiinvariant(AL0)
    assert is_semiinvariant(BE0)
    assert not is_semiinvariant(AL1)
    assert not is_semiinvariant(BE2)
    assert is_semiinvariant(AL0 * AL2 - AL1 * AL1 / 4)


def test_order_of():
    assert order_of(AL0) == 2
    assert order_of(BE3) == -3
    assert order_of(AL0 * BE1) == 3
    with pytest.raises(NotHomogeneousError):
        order_of(AL0 + AL1)


def test_roberts_inverse_of_leading_coefficient():
    f = quadratic_form()
    assert roberts_to_covariant(AL0) == f
    assert roberts_to_semiinvariant(f) == AL0
    assert roberts_to_semiinvariant(cubic_form()) == BE0


def test_roberts_second_transvectant():
    semi = 2 * AL0 * AL2 - AL1 * AL1 / 2
    cov = roberts_to_covariant(semi)
    assert cov == transvectant(quadratic_form(), quadratic_form(), 2)


def test_roberts_guards():
    with pytest.raises(NegativeOrderError):
        roberts_to_covariant(BE3)
    with pytest.raises(NotPolynomialError):
        roberts_to_covariant(AL1 * AL1)  # order 0 but not a semiinvariant


def test_roberts_round_trips_random_semiinvariants():
    rng = random.Random(23)
    disc = AL0 * AL2 - AL1 * AL1 / 4
    alpha0_b1 = AL0 * BE1 - AL1 * BE0 * F(3, 2)
    pool = [AL0, BE0, disc, alpha0_b1]
    for _ in range(8):
        semi = pool[rng.randrange(len(pool))] * pool[rng.randrange(len(pool))]
        cov = roberts_to_covariant(semi)
        assert roberts_to_semiinvariant(cov) == semi
        assert uv_order(cov) == order_of(semi)
        assert refined_form_degrees(cov) == refined_form_degrees(semi)


def test_hat_coefficients():
    h = hat_coefficients()
    assert h.a[1].is_zero
    assert h.d[1].is_zero
    assert h.a[0] == AL0
    assert h.a[2] == AL2 - FormPoly({(-1, 2, 0, 0, 0, 0, 0, 0, 0): F(1, 4)})
    assert h.b[1] == BE1 - FormPoly({(-1, 1, 0, 1, 0, 0, 0, 0, 0): F(3, 2)})
    assert h.d[2] == BE2 - FormPoly({(0, 0, 0, -1, 2, 0, 0, 0, 0): F(1, 3)})


def test_hat_coefficients_give_semiinvariants():
    h = hat_coefficients()
    for i in (1, 2):
        assert is_semiinvariant(FormPoly.variable(0, i - 1) * h.a[i])
    for i in range(4):
        assert is_semiinvariant(FormPoly.variable(0, i) * h.b[i])
    for i in range(3):
        assert is_semiinvariant(FormPoly.variable(3, i) * h.c[i])
    for i in (2, 3):
        assert is_semiinvariant(FormPoly.variable(3, i - 1) * h.d[i])


def test_hat_coefficients_satisfy_frame_relations():
    # c-hats expressed through a-hats repeat the curve-frame substitution:
    # spot-check c1_hat = a1_hat - 2 a0_hat b1_hat / (3 b0_hat) after
    # clearing denominators
    h = hat_coefficients()
    lhs = h.c[1] * 3 * h.b[0]
    rhs = 3 * h.a[1] * h.b[0] - 2 * h.a[0] * h.b[1]
    assert lhs == rhs


def test_psi_forward():
    a0b1 = CurvePolyAB({(1, 0, 0, 1, 0, 0): 1})
    assert psi_forward(a0b1) == AL0 * BE1 - AL1 * BE0 * F(3, 2)
    assert psi_forward(CurvePolyAB.variable(0)) == AL0
    assert psi_forward(CurvePolyAB.variable(2)) == BE0


def test_psi_forward_rejects_one_frame_elements():
    with pytest.raises(NotPolynomialError):
        psi_forward(CurvePolyAB.variable(3))  # b1 alone is not in both frames


def test_psi_inverse():
    assert psi_inverse(AL0) == CurvePolyAB.variable(0)
    assert psi_inverse(2 * AL0 * AL2 - AL1 * AL1 / 2) == CurvePolyAB(
        {(1, 1, 0, 0, 0, 0): 2}
    )
    fg1_lead = (2 * AL0 * BE1 - 3 * AL1 * BE0) / 6
    assert psi_inverse(fg1_lead) == CurvePolyAB({(1, 0, 0, 1, 0, 0): F(1, 3)})


def test_psi_round_trips():
    gens = gordan_generators()
    for g in gens:
        semi = roberts_to_semiinvariant(g.poly)
        p = psi_inverse(semi)
        assert psi_forward(p) == semi
        assert is_triality_invariant(p)


def test_psi_image_order_relation():
    # order = 2 d_a + 3 d_b - m on every generator image
    for g in gordan_generators():
        semi = roberts_to_semiinvariant(g.poly)
        assert order_of(semi) == 2 * g.d_a + 3 * g.d_b - g.degree_m


def test_psi_round_trips_on_enumerated_bases():
    from triality.enumerator import triality_basis
    from triality.sw_curve import poly_degree, refined_degrees

    for k, m in ((12, 2), (14, 4), (16, 4), (20, 6), (24, 6)):
        for p in triality_basis(k, m).basis:
            image = psi_forward(p)
            assert psi_inverse(image) == p
            assert is_semiinvariant(image)
            d_a, d_b = refined_degrees(p)
            assert order_of(image) == 2 * d_a + 3 * d_b - poly_degree(p)
            assert refined_form_degrees(image) == (d_a, d_b)


def test_gordan_generator_metadata():
    gens = gordan_generators()
    assert len(gens) == 15
    labels = [g.label for g in gens]
    assert labels[:3] == ["f", "g", "<f,g>^1"]
    for g in gens:
        assert uv_order(g.poly) == g.order_omega
        assert refined_form_degrees(g.poly) == (g.d_a, g.d_b)
        assert g.weight == 3 * g.degree_m + 2 * g.order_omega


def test_gordan_table_cells():
    cells = {}
    for g in gordan_generators():
        cells[(g.degree_m, g.order_omega)] = cells.get((g.degree_m, g.order_omega), 0) + 1
    assert cells[(12, 0)] == 2
    assert sum(cells.values()) == 15
    totals = [0, 0, 0, 0]
    for g in gordan_generators():
        totals[g.order_omega] += 1
    assert totals == [5, 4, 3, 3]


def test_semiinvariant_dimension_basics():
    assert semiinvariant_dimension(0, 0, 0) == 1
    assert semiinvariant_dimension(1, 0, 2) == 1
    assert semiinvariant_dimension(1, 1, 3) == 1
    assert semiinvariant_dimension(1, 0, 0) == 0
    assert semiinvariant_dimension(0, 1, 3) == 1  # beta0 alone
    assert semiinvariant_dimension(0, 0, 2) == 0


def test_semiinvariant_dimension_matches_kernel_meaning():
    # degree (2, 0): only the discriminant square root pattern alpha0^2,
    # alpha0*alpha2 - alpha1^2/4 appear at orders 4 and 0
    assert semiinvariant_dimension(2, 0, 4) == 1
    assert semiinvariant_dimension(2, 0, 0) == 1
    assert semiinvariant_dimension(2, 0, 2) == 0
