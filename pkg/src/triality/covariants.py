"""Joint covariants and semiinvariants of a binary quadratic and cubic.

The quadratic f = sum alpha_i u^(2-i) v^i and cubic g = sum beta_i
u^(3-i) v^i are handled through one polynomial flavor over the nine
variables (alpha0..alpha2, beta0..beta3, u, v).  Negative powers of
alpha0, beta0 and u appear only inside the completion-of-the-square
substitutions and the inverse Roberts map; every public result is
validated polynomial.

Semiinvariance is tested by full formal substitution u -> u + kappa*v
(all powers of kappa must cancel), the grading by the diagonal scaling
weights alpha_i -> 2-2i, beta_i -> 3-2i.  The module also carries the
fifteen classical transvectant generators of the joint covariant ring and
a brute-force dimension oracle for spaces of joint semiinvariants.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from ._poly import SparsePoly, compose
from .linalg import LinearSolver
from .sw_curve import CurvePolyAB


class BadOrderError(ValueError):
    """Transvectant index exceeds the order of an argument."""


class NotHomogeneousError(ValueError):
    """Monomials disagree under the scaling weights."""


class NegativeOrderError(ValueError):
    """The Roberts inverse needs a nonnegative order."""


class NotPolynomialError(ValueError):
    """Laurent denominators survived a substitution that should cancel them."""


class FormPoly(SparsePoly):
    nvars = 9
    names = ("alpha0", "alpha1", "alpha2", "beta0", "beta1", "beta2", "beta3", "u", "v")
    laurent = frozenset({0, 3, 7})
    # scaling weights under (u, v) -> (lambda u, v / lambda)
    SCALE = (2, 0, -2, 3, 1, -1, -3, 1, -1)

    U = 7
    V = 8


class _KappaPoly(SparsePoly):
    """Internal: FormPoly extended by the unipotent parameter kappa."""

    nvars = 10
    names = FormPoly.names + ("kappa",)
    laurent = frozenset({0, 3, 7})


def _fvar(i, power=1):
    return FormPoly.variable(i, power)


def quadratic_form():
    """f = alpha0 u^2 + alpha1 u v + alpha2 v^2."""
    return FormPoly(
        {
            (1, 0, 0, 0, 0, 0, 0, 2, 0): 1,
            (0, 1, 0, 0, 0, 0, 0, 1, 1): 1,
            (0, 0, 1, 0, 0, 0, 0, 0, 2): 1,
        }
    )


def cubic_form():
    """g = beta0 u^3 + beta1 u^2 v + beta2 u v^2 + beta3 v^3."""
    return FormPoly(
        {
            (0, 0, 0, 1, 0, 0, 0, 3, 0): 1,
            (0, 0, 0, 0, 1, 0, 0, 2, 1): 1,
            (0, 0, 0, 0, 0, 1, 0, 1, 2): 1,
            (0, 0, 0, 0, 0, 0, 1, 0, 3): 1,
        }
    )


def uv_order(F):
    """Homogeneous degree in (u, v)."""
    degs = {e[FormPoly.U] + e[FormPoly.V] for e in F.terms}
    if len(degs) > 1:
        raise NotHomogeneousError(f"not homogeneous in (u, v): degrees {sorted(degs)}")
    return degs.pop() if degs else 0


def transvectant(f1, f2, i, n1=None, n2=None):
    """The i-th transvectant of two binary forms of orders n1, n2.

    Prefactor (n1-i)! (n2-i)! / (n1! n2!) times the alternating sum of
    products of i-th mixed partials; computed by exact differentiation.
    """
    if n1 is None:
        n1 = uv_order(f1)
    elif n1 != uv_order(f1):
        raise BadOrderError(f"first argument has order {uv_order(f1)}, not {n1}")
    if n2 is None:
        n2 = uv_order(f2)
    elif n2 != uv_order(f2):
        raise BadOrderError(f"second argument has order {uv_order(f2)}, not {n2}")
    if i < 0 or i > min(n1, n2):
        raise BadOrderError(f"index {i} out of range for orders ({n1}, {n2})")

    def partials(F):
        # out[j] = d^i F / du^(i-j) dv^j
        du = [F]
        for _ in range(i):
            du.append(du[-1].derivative(FormPoly.U))
        out = []
        for j in range(i + 1):
            p = du[i - j]
            for _ in range(j):
                p = p.derivative(FormPoly.V)
            out.append(p)
        return out

    p1 = partials(f1)
    p2 = partials(f2)
    total = FormPoly.zero()
    for j in range(i + 1):
        term = p1[j] * p2[i - j] * comb(i, j)
        total = total + (-term if j % 2 else term)
    pref = Fraction(factorial(n1 - i) * factorial(n2 - i), factorial(n1) * factorial(n2))
    return total * pref


# -- semiinvariance --------------------------------------------------------------


def _kappa_var(power=1):
    return _KappaPoly.variable(9, power)


def _embed(P):
    return _KappaPoly({e + (0,): c for e, c in P.terms.items()})


_UNIPOTENT_IMAGES = None


def _unipotent_images():
    """Coefficient images under f(u + kappa v, v), g(u + kappa v, v)."""
    global _UNIPOTENT_IMAGES
    if _UNIPOTENT_IMAGES is None:
        kv = [_embed(_fvar(i)) for i in range(9)]
        k = _kappa_var()
        a0, a1, a2, b0, b1, b2, b3, u, v = kv
        _UNIPOTENT_IMAGES = [
            a0,
            a1 + 2 * k * a0,
            a2 + k * a1 + k * k * a0,
            b0,
            b1 + 3 * k * b0,
            b2 + 2 * k * b1 + 3 * k * k * b0,
            b3 + k * b2 + k * k * b1 + k * k * k * b0,
            u,
            v,
        ]
    return _UNIPOTENT_IMAGES


def _kappa_shift(P):
    """P(primed coefficients) - P, as a polynomial in kappa too."""
    return compose(P, _unipotent_images(), _KappaPoly) - _embed(P)


def is_semiinvariant(P):
    """True iff P is unchanged by u -> u + kappa v for formal kappa."""
    for e in P.terms:
        if e[FormPoly.U] or e[FormPoly.V]:
            raise ValueError("semiinvariance applies to (u, v)-free polynomials")
    return _kappa_shift(P).is_zero


def order_of(P):
    """Scaling order: sum of (2-2i) per alpha_i and (3-2i) per beta_i."""
    for e in P.terms:
        if e[FormPoly.U] or e[FormPoly.V]:
            raise ValueError("order_of applies to (u, v)-free polynomials")
    degs = {sum(w * x for w, x in zip(FormPoly.SCALE, e)) for e in P.terms}
    if len(degs) > 1:
        raise NotHomogeneousError(f"scaling weights disagree: {sorted(degs)}")
    return degs.pop() if degs else 0


def refined_form_degrees(P):
    """(d_alpha, d_beta): homogeneous degrees in the two coefficient families."""
    da = {e[0] + e[1] + e[2] for e in P.terms}
    db = {e[3] + e[4] + e[5] + e[6] for e in P.terms}
    if len(da) > 1 or len(db) > 1:
        raise NotHomogeneousError("refined degrees are not homogeneous")
    return (da.pop() if da else 0, db.pop() if db else 0)


# -- the Roberts correspondence -----------------------------------------------------


def roberts_to_semiinvariant(Psi):
    """Leading coefficient: evaluate the covariant at (u, v) = (1, 0)."""
    terms = {}
    for e, c in Psi.terms.items():
        if e[FormPoly.V]:
            continue
        key = e[: FormPoly.U] + (0, 0)
        terms[key] = terms.get(key, Fraction(0)) + c
    return FormPoly(terms)


def roberts_to_covariant(Phi):
    """Rebuild the covariant u^omega Phi(hatted coefficients).

    The hatted coefficient alpha_(k,i) is sum_(j>=i) alpha_(k,j) C(j, i)
    (v/u)^(j-i); all negative powers of u cancel for a semiinvariant of
    nonnegative order.
    """
    omega = order_of(Phi)
    if omega < 0:
        raise NegativeOrderError(f"order {omega} is negative")
    step = FormPoly({(0,) * 7 + (-1, 1): 1})
    vu = [FormPoly.one()]  # vu[p] = (v/u)^p
    for _ in range(3):
        vu.append(vu[-1] * step)

    def hat(indices, n):
        out = []
        for i, _ in enumerate(indices):
            acc = FormPoly.zero()
            for j in range(i, n + 1):
                acc = acc + comb(j, i) * _fvar(indices[j]) * vu[j - i]
            out.append(acc)
        return out

    images = hat((0, 1, 2), 2) + hat((3, 4, 5, 6), 3) + [_fvar(FormPoly.U), _fvar(FormPoly.V)]
    result = compose(Phi, images, FormPoly) * FormPoly.variable(FormPoly.U, omega)
    if result.min_degree_in(FormPoly.U) < 0:
        raise NotPolynomialError("negative powers of u survived; input was not a semiinvariant")
    return result


# -- the curve-coefficient substitution ----------------------------------------------


@dataclass(frozen=True)
class HatCoefficients:
    a: tuple
    b: tuple
    c: tuple
    d: tuple


def hat_coefficients():
    """The completion-of-the-square images of the form coefficients.

    a-hat / b-hat shift u by -alpha1/(2 alpha0) (Laurent in alpha0);
    c-hat / d-hat shift by -beta1/(3 beta0) (Laurent in beta0).
    a-hat_1 and d-hat_1 vanish identically.
    """
    al = [_fvar(i) for i in range(3)]
    be = [_fvar(3 + i) for i in range(4)]

    def shifted(coeffs, n, num_index, den_scale, den_index):
        # shift amount -coeffs[num_index]/(den_scale * coeffs[den_index]),
        # raised to i-j as a Laurent monomial
        out = []
        for i in range(n + 1):
            acc = FormPoly.zero()
            for j in range(i + 1):
                exps = [0] * 9
                exps[num_index] = i - j
                exps[den_index] = -(i - j)
                mono = FormPoly.monomial(tuple(exps), Fraction(-1, den_scale) ** (i - j))
                acc = acc + comb(n - j, n - i) * coeffs[j] * mono
            out.append(acc)
        return tuple(out)

    a_hat = shifted(al, 2, 1, 2, 0)
    b_hat = shifted(be, 3, 1, 2, 0)
    c_hat = shifted(al, 2, 4, 3, 3)
    d_hat = shifted(be, 3, 4, 3, 3)
    return HatCoefficients(a_hat, b_hat, c_hat, d_hat)


_HATS = None


def _hats():
    global _HATS
    if _HATS is None:
        _HATS = hat_coefficients()
    return _HATS


def psi_forward(p):
    """Substitute a_i -> a-hat_i, b_j -> b-hat_j into a curve polynomial.

    For genuine triality invariants all alpha0 denominators cancel and the
    result is a joint semiinvariant; NotPolynomialError otherwise.
    """
    h = _hats()
    images = [h.a[0], h.a[2], h.b[0], h.b[1], h.b[2], h.b[3]]
    result = compose(p, images, FormPoly)
    if result.min_degree_in(0) < 0:
        raise NotPolynomialError("alpha0 denominators survived; not in both frames")
    return result


def psi_inverse(Phi):
    """Substitute alpha0 -> a0, alpha1 -> 0, alpha2 -> a2, beta_j -> b_j."""
    for e in Phi.terms:
        if e[FormPoly.U] or e[FormPoly.V]:
            raise ValueError("psi_inverse applies to (u, v)-free polynomials")
    images = [
        CurvePolyAB.variable(0),
        CurvePolyAB.zero(),
        CurvePolyAB.variable(1),
        CurvePolyAB.variable(2),
        CurvePolyAB.variable(3),
        CurvePolyAB.variable(4),
        CurvePolyAB.variable(5),
        CurvePolyAB.one(),
        CurvePolyAB.one(),
    ]
    return compose(Phi, images, CurvePolyAB)


# -- the fifteen generators --------------------------------------------------------


@dataclass(frozen=True)
class GordanGenerator:
    label: str
    poly: FormPoly
    d_a: int
    d_b: int
    degree_m: int
    order_omega: int

    @property
    def weight(self):
        return 3 * self.degree_m + 2 * self.order_omega


def gordan_generators():
    """The classical 15-element basis of joint covariants of the pair (f, g).

    Metadata per generator: refined degrees (d_a, d_b), z-degree m of the
    matching triality invariant, and covariant order omega; the modular
    weight is k = 3m + 2*omega.
    """
    f = quadratic_form()
    g = cubic_form()
    tv = transvectant
    P = tv(g, g, 2)
    Q = tv(g, P, 1)
    f2 = f * f
    f3 = f2 * f
    return [
        GordanGenerator("f", f, 1, 0, 0, 2),
        GordanGenerator("g", g, 0, 1, 0, 3),
        GordanGenerator("<f,g>^1", tv(f, g, 1), 1, 1, 2, 3),
        GordanGenerator("<f,f>^2", tv(f, f, 2), 2, 0, 4, 0),
        GordanGenerator("<f,g>^2", tv(f, g, 2), 1, 1, 4, 1),
        GordanGenerator("<g,g>^2", P, 0, 2, 4, 2),
        GordanGenerator("<f^2,g>^3", tv(f2, g, 3), 2, 1, 6, 1),
        GordanGenerator("<f,P>^1", tv(f, P, 1), 1, 2, 6, 2),
        GordanGenerator("<g,P>^1", Q, 0, 3, 6, 3),
        GordanGenerator("<f,P>^2", tv(f, P, 2), 1, 2, 8, 0),
        GordanGenerator("<f,Q>^2", tv(f, Q, 2), 1, 3, 10, 1),
        GordanGenerator("<f^3,g^2>^6", tv(f3, g * g, 6), 3, 2, 12, 0),
        GordanGenerator("<P,P>^2", tv(P, P, 2), 0, 4, 12, 0),
        GordanGenerator("<f^2,Q>^3", tv(f2, Q, 3), 2, 3, 12, 1),
        GordanGenerator("<f^3,g*Q>^6", tv(f3, g * Q, 6), 3, 4, 18, 0),
    ]


# -- the brute-force dimension oracle -----------------------------------------------


def _semiinvariant_monomials(d_alpha, d_beta, omega):
    """All (u, v)-free monomial exponents of the given refined degrees and order."""
    alphas = [
        (p0, p1, d_alpha - p0 - p1)
        for p0 in range(d_alpha + 1)
        for p1 in range(d_alpha - p0 + 1)
    ]
    betas = [
        (q0, q1, q2, d_beta - q0 - q1 - q2)
        for q0 in range(d_beta + 1)
        for q1 in range(d_beta - q0 + 1)
        for q2 in range(d_beta - q0 - q1 + 1)
    ]
    out = []
    for pa in alphas:
        wa = 2 * pa[0] - 2 * pa[2]
        for qb in betas:
            if wa + 3 * qb[0] + qb[1] - qb[2] - 3 * qb[3] == omega:
                out.append(pa + qb + (0, 0))
    out.sort(key=lambda e: (sum(e), e), reverse=True)
    return out


def semiinvariant_dimension(d_alpha, d_beta, omega):
    """dim of joint semiinvariants of refined degrees (d_alpha, d_beta), order omega.

    Enumerates every monomial of matching degrees and scaling weight and
    solves the exact linear system expressing invariance under the formal
    unipotent substitution.
    """
    if d_alpha < 0 or d_beta < 0:
        raise ValueError("refined degrees must be nonnegative")
    monos = _semiinvariant_monomials(d_alpha, d_beta, omega)
    if not monos:
        return 0
    shifts = [_kappa_shift(FormPoly.monomial(m)) for m in monos]
    rows = {}
    for idx, shift in enumerate(shifts):
        for exps, c in shift.terms.items():
            rows.setdefault(exps, {})[idx] = c
    solver = LinearSolver(len(monos))
    for exps in sorted(rows):
        entries = rows[exps]
        solver.add([entries.get(i, Fraction(0)) for i in range(len(monos))])
        if solver.rank == len(monos):
            return 0
    return len(monos) - solver.rank
