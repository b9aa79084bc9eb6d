"""Polynomials in z1..z4 and in the Weyl invariant generators I2, I4, I6, I~4.

The generators are the elementary symmetric functions of the squares
z_i^2 together with the product z1 z2 z3 z4; they freely generate the
invariant ring of the degree-(2,4,6,4) reflection group acting on C^4.
Conversion from z-coordinates back to generator coordinates is an exact
linear solve over the finite monomial basis of matching degree, which
doubles as an invariance test.
"""

from __future__ import annotations

from fractions import Fraction

from ._poly import SparsePoly, compose, ring_det
from .linalg import LinearSolver

I_DEGREES = (2, 4, 6, 4)


class NotInvariantError(ValueError):
    """The z-polynomial is not a polynomial in the invariant generators."""


class ZPoly(SparsePoly):
    nvars = 4
    names = ("z1", "z2", "z3", "z4")


class IPoly(SparsePoly):
    nvars = 4
    names = ("I2", "I4", "I6", "I~4")

    def invariant_degree(self):
        """Degree in z of the expansion: 2a + 4b + 6c + 4d per monomial."""
        return self.weighted_degree(I_DEGREES)


def weyl_generators():
    """I2 = sum z_i^2, I4/I6 = elementary symmetric in z_i^2, I~4 = prod z_i."""
    z2 = [ZPoly.variable(i, 2) for i in range(4)]
    i2 = sum(z2, ZPoly.zero())
    i4 = sum((z2[i] * z2[j] for i in range(4) for j in range(i + 1, 4)), ZPoly.zero())
    i6 = sum(
        (z2[i] * z2[j] * z2[k] for i in range(4) for j in range(i + 1, 4) for k in range(j + 1, 4)),
        ZPoly.zero(),
    )
    i4t = ZPoly.monomial((1, 1, 1, 1))
    return i2, i4, i6, i4t


def ipoly_to_zpoly(p):
    return compose(p, list(weyl_generators()), ZPoly)


def i_monomials_of_degree(m):
    """All generator exponent tuples (a, b, c, d) with 2a+4b+6c+4d = m, canonical order."""
    found = []
    for c in range(m // 6 + 1):
        for d in range((m - 6 * c) // 4 + 1):
            for b in range((m - 6 * c - 4 * d) // 4 + 1):
                rest = m - 6 * c - 4 * d - 4 * b
                if rest % 2 == 0:
                    found.append((rest // 2, b, c, d))
    found.sort(key=lambda e: (sum(e), e), reverse=True)
    return found


def zpoly_to_ipoly(p):
    """Invert the generator substitution on a homogeneous z-polynomial.

    Raises NotInvariantError when no generator polynomial expands to p.
    """
    if p.is_zero:
        return IPoly.zero()
    m = p.weighted_degree((1, 1, 1, 1))
    candidates = i_monomials_of_degree(m)
    expansions = [ipoly_to_zpoly(IPoly.monomial(e)) for e in candidates]
    # one equation per z-monomial appearing anywhere
    z_monos = set(p.terms)
    for exp in expansions:
        z_monos.update(exp.terms)
    solver = LinearSolver(len(candidates))
    for mono in sorted(z_monos):
        solver.add([exp.terms.get(mono, Fraction(0)) for exp in expansions], p.terms.get(mono, Fraction(0)))
        if solver.inconsistent:
            raise NotInvariantError(f"{p} is not a polynomial in the invariant generators")
    if solver.inconsistent:
        raise NotInvariantError(f"{p} is not a polynomial in the invariant generators")
    sol = solver.solution()
    result = IPoly({e: c for e, c in zip(candidates, sol)})
    # expansions of distinct generator monomials are linearly independent,
    # so a consistent solve is automatically unique
    return result


def jacobian_z(f1, f2, f3, f4):
    """Determinant of the 4x4 matrix of partials with respect to z1..z4."""
    rows = [[f.derivative(j) for j in range(4)] for f in (f1, f2, f3, f4)]
    return ring_det(rows)


def vandermonde_product():
    """The product of (z_i^2 - z_j^2) over i < j, as a ZPoly."""
    prod = ZPoly.one()
    for i in range(4):
        for j in range(i + 1, 4):
            prod = prod * (ZPoly.variable(i, 2) - ZPoly.variable(j, 2))
    return prod
