"""Exact enumeration of triality invariants of given weight and degree.

The ansatz is the most general linear combination of curve-coefficient
monomials of the requested bigrading; mapping it to the other frame and
demanding that every negative power of c0 cancels is an exact rational
linear system whose kernel, back-substituted, is the invariant space.
Everything is symbolic in the six curve variables; q-series only enter
through the verification paths elsewhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .linalg import LinearSolver
from .sw_curve import CurvePolyAB, ab_to_cd, curve_poly_json


def monomials_of(k, m):
    """Exponent tuples over (a0, a2, b0, b1, b2, b3) of weight k and degree m,
    in canonical (graded lexicographic, descending) order."""
    weights = CurvePolyAB.WEIGHTS
    degrees = CurvePolyAB.DEGREES
    found = []

    def walk(i, k_left, m_left, prefix):
        if i == len(weights):
            if k_left == 0 and m_left == 0:
                found.append(tuple(prefix))
            return
        w, d = weights[i], degrees[i]
        top = k_left // w
        if d:
            top = min(top, m_left // d)
        for e in range(top + 1):
            walk(i + 1, k_left - w * e, m_left - d * e, prefix + [e])

    if k >= 0 and m >= 0:
        walk(0, k, m, [])
    found.sort(key=lambda e: (sum(e), e), reverse=True)
    return found


def rational_kernel(matrix):
    """Exact reduced-echelon basis of the null space of a rational matrix."""
    if not matrix:
        return []
    ncols = len(matrix[0])
    solver = LinearSolver(ncols)
    for row in matrix:
        solver.add([Fraction(x) for x in row])
        if solver.rank == ncols:
            break
    return solver.kernel()


@dataclass(frozen=True)
class AnsatzBasis:
    weight: int
    degree: int
    monomials: tuple
    basis: tuple

    @property
    def dimension(self):
        return len(self.basis)

    def to_json(self):
        return {
            "kind": "basis",
            "grading": {"weight": self.weight, "degree": self.degree},
            "dimension": self.dimension,
            "monomials": [list(e) for e in self.monomials],
            "basis": [curve_poly_json(p) for p in self.basis],
        }


def triality_basis(k, m):
    """All triality invariants of weight k and degree m, reduced echelon.

    Maps each ansatz monomial through the frame change, collects the
    coefficient of every image monomial carrying a negative power of c0
    into an exact linear system, and back-substitutes its kernel.
    """
    monos = monomials_of(k, m)
    images = [ab_to_cd(CurvePolyAB.monomial(e)) for e in monos]
    constraints = {}
    for idx, img in enumerate(images):
        for exps, coeff in img.terms.items():
            if exps[0] < 0:
                constraints.setdefault(exps, {})[idx] = coeff
    solver = LinearSolver(len(monos))
    for exps in sorted(constraints):
        entries = constraints[exps]
        solver.add([entries.get(i, Fraction(0)) for i in range(len(monos))])
        if solver.rank == len(monos):
            break
    basis = []
    for vec in solver.kernel():
        poly = CurvePolyAB({e: c for e, c in zip(monos, vec)})
        basis.append(poly)
    return AnsatzBasis(k, m, tuple(monos), tuple(basis))


def dimension_table(k_max, m_max):
    """dim of the invariant space for all even k <= k_max, even m <= m_max."""
    return {
        (k, m): triality_basis(k, m).dimension
        for k in range(0, k_max + 1, 2)
        for m in range(0, m_max + 1, 2)
    }


def rank_series(m_max):
    """Coefficients of 1/((1-x^2)(1-x^4)^2(1-x^6)) up to degree m_max."""
    coeffs = [1] + [0] * m_max
    for period in (2, 4, 4, 6):
        # multiply by the geometric series of x^period
        for n in range(period, m_max + 1):
            coeffs[n] += coeffs[n - period]
    return coeffs
