import random
from fractions import Fraction as F

import pytest

from triality.invariant_ring import T_POLYS
from triality.weyl_poly import (
    IPoly,
    NotInvariantError,
    ZPoly,
    i_monomials_of_degree,
    ipoly_to_zpoly,
    jacobian_z,
    vandermonde_product,
    weyl_generators,
    zpoly_to_ipoly,
)


def test_generators_point_values():
    i2, i4, i6, i4t = weyl_generators()
    assert i2.evaluate((1, 0, 0, 0)) == 1
    assert i4.evaluate((1, 1, 0, 0)) == 1
    assert i6.evaluate((1, 1, 1, 0)) == 1
    assert i4t == ZPoly.monomial((1, 1, 1, 1))


def test_expand_generators():
    assert ipoly_to_zpoly(IPoly.variable(0)) == sum(
        (ZPoly.variable(i, 2) for i in range(4)), ZPoly.zero()
    )
    sq = ipoly_to_zpoly(IPoly.variable(3, 2))
    assert sq == ZPoly.monomial((2, 2, 2, 2))


def test_power_sum_in_generators():
    s4 = sum((ZPoly.variable(i, 4) for i in range(4)), ZPoly.zero())
    assert zpoly_to_ipoly(s4) == IPoly({(2, 0, 0, 0): 1, (0, 1, 0, 0): -2})


def test_product_monomial_is_generator():
    assert zpoly_to_ipoly(ZPoly.monomial((1, 1, 1, 1))) == IPoly.variable(3)


def test_non_invariant_rejected():
    with pytest.raises(NotInvariantError):
        zpoly_to_ipoly(ZPoly.variable(0))
    with pytest.raises(NotInvariantError):
        zpoly_to_ipoly(ZPoly.monomial((2, 0, 0, 0)))


def test_inhomogeneous_rejected():
    i2 = ipoly_to_zpoly(IPoly.variable(0))
    with pytest.raises(ValueError):
        zpoly_to_ipoly(i2 + ZPoly.one())


def test_round_trip_on_random_ipolys():
    rng = random.Random(11)
    for _ in range(12):
        degree = rng.choice((4, 6, 8, 10, 12))
        monos = i_monomials_of_degree(degree)
        p = IPoly(
            {m: F(rng.randrange(-6, 7)) for m in rng.sample(monos, min(3, len(monos)))}
        )
        assert zpoly_to_ipoly(ipoly_to_zpoly(p)) == p


def test_t_polynomials_sum_to_zero():
    total = T_POLYS[0] + T_POLYS[1] + T_POLYS[2]
    assert ipoly_to_zpoly(total).is_zero


def test_degree_six_combination_point_value():
    # I6/4 - I2 I4/24 + I2^3/96 at (1, 0, 0, 0)
    n = IPoly({(0, 0, 1, 0): F(1, 4), (1, 1, 0, 0): F(-1, 24), (3, 0, 0, 0): F(1, 96)})
    assert ipoly_to_zpoly(n).evaluate((1, 0, 0, 0)) == F(1, 96)


def test_generator_jacobian():
    jac = jacobian_z(*weyl_generators())
    assert jac == 8 * vandermonde_product()


def test_jacobian_alternating_and_multilinear():
    i2, i4, i6, i4t = weyl_generators()
    assert jacobian_z(i4, i2, i6, i4t) == -jacobian_z(i2, i4, i6, i4t)
    assert jacobian_z(i2, i2, i6, i4t).is_zero
    doubled = jacobian_z(3 * i2, i4, i6, i4t)
    assert doubled == 3 * jacobian_z(i2, i4, i6, i4t)
    split = jacobian_z(i2 + i4, i4, i6, i4t)
    assert split == jacobian_z(i2, i4, i6, i4t)  # the i4 summand is degenerate


def test_json_term_order_is_canonical():
    p = IPoly({(1, 0, 0, 0): 1, (0, 0, 0, 1): 2, (3, 0, 0, 0): -1})
    listed = [tuple(e) for e, _ in p.to_json()]
    # graded lexicographic, I2 > I4 > I6 > I~4, highest first
    assert listed == [(3, 0, 0, 0), (1, 0, 0, 0), (0, 0, 0, 1)]
