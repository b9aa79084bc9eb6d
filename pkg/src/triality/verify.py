"""Identity suites behind the `verify` command.

Each suite re-derives a family of displayed identities from scratch at the
requested truncation order and reports one line per identity.  The
acceptance tests run the same library calls; this module packages them for
the CLI with stable, descriptive names.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import covariants, enumerator, invariant_ring, sw_curve, weyl_poly
from .exact_series import FracSeries, e_series, eisenstein, eta_delta
from .invariant_ring import (
    INVARIANT,
    WEAK_ONLY,
    AmbiguousRepresentationError,
    Invariant,
    NoRepresentationError,
    express_in_klmn,
    klmn,
)
from .weyl_poly import IPoly


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def _check(name, passed, detail=""):
    return CheckResult(name, bool(passed), detail)


def series_checks(order):
    out = []
    eta, delta = eta_delta(order)
    e4 = eisenstein(4, order)
    e6 = eisenstein(6, order)
    out.append(
        _check(
            "discriminant: eta^24 equals (E4^3 - E6^2)/1728",
            delta == (e4 ** 3 - e6 ** 2) / 1728,
            f"window q^{order}",
        )
    )
    esum = e_series(1, order) + e_series(2, order) + e_series(3, order)
    out.append(_check("weight-2 forms: e1 + e2 + e3 = 0", esum.is_zero))

    K, L, M, N = klmn(order)
    dk = K.scale_series(delta, 12)
    verdicts = [
        ("classify Delta*K = invariant", dk.classify() == INVARIANT),
        ("classify K = weak only", K.classify() == WEAK_ONLY),
        ("classify L = weak only", L.classify() == WEAK_ONLY),
        ("classify M = weak only", M.classify() == WEAK_ONLY),
        ("classify N = weak only", N.classify() == WEAK_ONLY),
        ("classify E4 = invariant", Invariant.from_series(e4, 4).classify() == INVARIANT),
        ("classify E6 = invariant", Invariant.from_series(e6, 6).classify() == INVARIANT),
    ]
    out.extend(_check(name, ok) for name, ok in verdicts)
    return out


def jacobian_checks(order):
    out = []
    jac = weyl_poly.jacobian_z(*weyl_poly.weyl_generators())
    out.append(
        _check(
            "generator jacobian in z = 8 prod (zi^2 - zj^2)",
            jac == 8 * weyl_poly.vandermonde_product(),
        )
    )
    eta, delta = eta_delta(order)
    det = invariant_ring.klmn_generator_jacobian(order)
    out.append(
        _check(
            "det d(K,L,M,N)/d(I2,I4,I6,I~4) = -eta^12/16",
            det == (eta ** 12) * Fraction(-1, 16),
            f"window q^{order}",
        )
    )
    e4 = eisenstein(4, order)
    e6 = eisenstein(6, order)
    det_ab, det_cd = sw_curve.jacobian_klmn(order)
    out.append(
        _check(
            "det of first-frame coefficients by K,L,M,N = -Delta^3/(16 E4)",
            det_ab == (delta ** 3) * e4.inverse() * Fraction(-1, 16),
        )
    )
    out.append(
        _check(
            "det of second-frame coefficients by K,L,M,N = -3 Delta^3/(4 E6)",
            det_cd == (delta ** 3) * e6.inverse() * Fraction(-3, 4),
        )
    )
    return out


LEADING_AB = {
    "a0": IPoly.constant(Fraction(1, 12)),
    "a2": IPoly({(0, 1, 0, 0): 1, (0, 0, 0, 1): Fraction(1, 4), (2, 0, 0, 0): -64}),
    "b0": IPoly.constant(Fraction(1, 216)),
    "b1": IPoly({(1, 0, 0, 0): 1}),
    "b2": IPoly({(0, 1, 0, 0): Fraction(-1, 6), (0, 0, 0, 1): Fraction(1, 48), (2, 0, 0, 0): Fraction(128, 3)}),
    "b3": IPoly({(0, 0, 1, 0): Fraction(1, 16), (1, 1, 0, 0): -4, (1, 0, 0, 1): 1, (3, 0, 0, 0): 512}),
}

LEADING_CD = {
    "c0": IPoly.constant(Fraction(1, 12)),
    "c1": IPoly({(1, 0, 0, 0): -12}),
    "c2": IPoly({(0, 1, 0, 0): 1, (0, 0, 0, 1): Fraction(1, 4), (2, 0, 0, 0): 368}),
    "d0": IPoly.constant(Fraction(1, 216)),
    "d2": IPoly({(0, 1, 0, 0): Fraction(-1, 6), (0, 0, 0, 1): Fraction(1, 48), (2, 0, 0, 0): Fraction(-88, 3)}),
    "d3": IPoly({(0, 0, 1, 0): Fraction(1, 16), (1, 1, 0, 0): 8, (1, 0, 0, 1): Fraction(-1, 2), (3, 0, 0, 0): 896}),
}


def curve_checks(order):
    out = []
    for i, name in enumerate(sw_curve.CurvePolyAB.names):
        value = sw_curve.evaluate_ab(sw_curve.CurvePolyAB.variable(i), order)
        out.append(
            _check(
                f"leading coefficient of {name}",
                value.leading_ipoly() == LEADING_AB[name],
            )
        )
    for i, name in enumerate(sw_curve.CurvePolyCD.names):
        value = sw_curve.evaluate_cd(sw_curve.CurvePolyCD.variable(i), order)
        out.append(
            _check(
                f"leading coefficient of {name}",
                value.leading_ipoly() == LEADING_CD[name],
            )
        )

    for i, name in enumerate(sw_curve.CurvePolyAB.names):
        if name in ("a0", "b0"):
            continue
        p = sw_curve.CurvePolyAB.variable(i)
        img = sw_curve.ab_to_cd(p)
        same_value = sw_curve.evaluate_cd(img, order) == sw_curve.evaluate_ab(p, order)
        out.append(_check(f"frame change preserves the value of {name}", same_value))
        if img.min_degree_in(0) >= 0:
            out.append(
                _check(f"frame round trip is the identity on {name}", sw_curve.cd_to_ab(img) == p)
            )

    eta, delta = eta_delta(order)
    K, L, M, N = klmn(order)
    targets = (
        ("Delta*K", K.scale_series(delta, 12)),
        ("Delta^2*L", L.scale_series(delta ** 2, 24)),
        ("Delta^2*M", M.scale_series(delta ** 2, 24)),
        ("Delta^3*N", N.scale_series(delta ** 3, 36)),
    )
    ab_polys, cd_polys = sw_curve.recover_klmn()
    for (label, target), poly in zip(targets, ab_polys):
        out.append(
            _check(
                f"first-frame recovery of {label}",
                sw_curve.evaluate_ab(poly, order) == target,
            )
        )
    for (label, target), poly in zip(targets, cd_polys):
        out.append(
            _check(
                f"second-frame recovery of {label}",
                sw_curve.evaluate_cd(poly, order) == target,
            )
        )
    return out


K_MAX, M_MAX = 24, 8


def _oracle_dimension(k, m):
    total = 0
    for da in range((k - m) // 4 + 1):
        rest = k - m - 4 * da
        if rest >= 0 and rest % 6 == 0:
            total += covariants.semiinvariant_dimension(da, rest // 6, (k - 3 * m) // 2)
    return total


def isomorphism_checks(order):
    out = []
    table = enumerator.dimension_table(K_MAX, M_MAX)
    mismatches = [
        (k, m)
        for (k, m), dim in sorted(table.items())
        if dim != _oracle_dimension(k, m)
    ]
    out.append(
        _check(
            f"enumerated dimensions match the semiinvariant oracle (k<={K_MAX}, m<={M_MAX})",
            not mismatches,
            f"mismatched cells: {mismatches}" if mismatches else f"{len(table)} cells",
        )
    )
    below = [(k, m) for (k, m), dim in sorted(table.items()) if k < 3 * m and dim]
    out.append(
        _check(
            "no invariants of weight below 3*degree",
            not below,
            f"violations: {below}" if below else "",
        )
    )

    ranks = enumerator.rank_series(M_MAX)
    for m in (0, 2, 4, 6):
        gens = {}
        ok = True
        for k in range(0, K_MAX + 1, 2):
            s = (
                table[(k, m)]
                - table.get((k - 4, m), 0)
                - table.get((k - 6, m), 0)
                + table.get((k - 10, m), 0)
            )
            if s < 0:
                ok = False
            if s:
                gens[k] = s
        total = sum(gens.values())
        stab = max(gens) if gens else 0
        out.append(
            _check(
                f"free-module generator count at degree {m} equals rank {ranks[m]}",
                ok and total == ranks[m],
                f"stabilization weight {stab}, generator weights {gens}",
            )
        )

    gens15 = covariants.gordan_generators()
    roundtrip_ok = True
    graded_ok = True
    for g in gens15:
        semi = covariants.roberts_to_semiinvariant(g.poly)
        cov = covariants.roberts_to_covariant(semi)
        if not cov == g.poly:
            roundtrip_ok = False
        if covariants.order_of(semi) != g.order_omega or covariants.refined_form_degrees(
            semi
        ) != (g.d_a, g.d_b):
            graded_ok = False
        if covariants.roberts_to_semiinvariant(cov) != semi:
            roundtrip_ok = False
    out.append(_check("leading-coefficient round trips on all 15 generators", roundtrip_ok))
    out.append(_check("round trips preserve degree and order", graded_ok))

    psi_ok = True
    for g in gens15:
        p = covariants.psi_inverse(covariants.roberts_to_semiinvariant(g.poly))
        if covariants.psi_forward(p) != covariants.roberts_to_semiinvariant(g.poly):
            psi_ok = False
    out.append(_check("substitution isomorphism round trips on all 15 generators", psi_ok))
    return out


def table1_checks(order):
    out = []
    gens = covariants.gordan_generators()
    out.append(_check("exactly 15 generators", len(gens) == 15))
    cells = {}
    for g in gens:
        cells[(g.degree_m, g.order_omega)] = cells.get((g.degree_m, g.order_omega), 0) + 1
    expected_cells = {
        (0, 2): 1, (0, 3): 1, (2, 3): 1,
        (4, 0): 1, (4, 1): 1, (4, 2): 1,
        (6, 1): 1, (6, 2): 1, (6, 3): 1,
        (8, 0): 1, (10, 1): 1,
        (12, 0): 2, (12, 1): 1, (18, 0): 1,
    }
    out.append(_check("per-(degree, order) cell counts", cells == expected_cells))
    by_order = [0, 0, 0, 0]
    for g in gens:
        by_order[g.order_omega] += 1
    out.append(_check("order totals (5, 4, 3, 3)", by_order == [5, 4, 3, 3]))

    for g in gens:
        semi = covariants.roberts_to_semiinvariant(g.poly)
        out.append(_check(f"leading coefficient of {g.label} is a semiinvariant", covariants.is_semiinvariant(semi)))
    for g in gens:
        p = covariants.psi_inverse(covariants.roberts_to_semiinvariant(g.poly))
        out.append(_check(f"curve image of {g.label} is a triality invariant", sw_curve.is_triality_invariant(p)))

    # the six explicit low-weight evaluations, in both written forms
    eta, delta = eta_delta(order)
    e4 = eisenstein(4, order)
    e6 = eisenstein(6, order)
    AB = sw_curve.CurvePolyAB
    explicit = {
        "f": (AB({(1, 0, 0, 0, 0, 0): 1}), {(0, 0, 0, 0): e4 / 12}),
        "g": (AB({(0, 0, 1, 0, 0, 0): 1}), {(0, 0, 0, 0): e6 / 216}),
        "<f,g>^1": (AB({(1, 0, 0, 1, 0, 0): Fraction(1, 3)}), {(1, 0, 0, 0): delta / 36}),
        "<f,f>^2": (
            AB({(1, 1, 0, 0, 0, 0): 2}),
            {(2, 0, 0, 0): delta / 24, (0, 1, 0, 0): -(e4 * e6) / 144, (0, 0, 1, 0): (e4 ** 2) / 144},
        ),
        "<f,g>^2": (
            AB({(1, 0, 0, 0, 1, 0): Fraction(1, 3), (0, 1, 1, 0, 0, 0): 1}),
            {(0, 1, 0, 0): -((e6 ** 2) + 576 * delta) / 3456, (0, 0, 1, 0): (e4 * e6) / 3456},
        ),
        "<g,g>^2": (
            AB({(0, 0, 1, 0, 1, 0): Fraction(2, 3), (0, 0, 0, 2, 0, 0): Fraction(-2, 9)}),
            {
                (2, 0, 0, 0): -(12 * e4 * delta) / 93312,
                (0, 1, 0, 0): -((e4 ** 2) * e6) / 93312,
                (0, 0, 1, 0): (e6 ** 2) / 93312,
            },
        ),
    }
    by_label = {g.label: g for g in gens}
    for label, (poly_expected, klmn_expected) in explicit.items():
        g = by_label[label]
        p = covariants.psi_inverse(covariants.roberts_to_semiinvariant(g.poly))
        ok = p == poly_expected
        rep = express_in_klmn(sw_curve.evaluate_ab(p, order))
        ok = ok and set(rep.terms) == set(klmn_expected)
        ok = ok and all(rep.coefficient(key) == series for key, series in klmn_expected.items())
        out.append(_check(f"explicit forms of {label} (curve and K,L,M,N)", ok))

    for g in gens:
        p = covariants.psi_inverse(covariants.roberts_to_semiinvariant(g.poly))
        detail = ""
        try:
            express_in_klmn(sw_curve.evaluate_ab(p, order))
            ok = True
        except NoRepresentationError:
            ok = False
        except AmbiguousRepresentationError:
            ok = False
            detail = f"window q^{order} too shallow to pin the representation down"
        out.append(
            _check(f"{g.label} lies in the K,L,M,N polynomial ring over E4, E6", ok, detail)
        )
    return out


SUITES = {
    "series": series_checks,
    "jacobians": jacobian_checks,
    "curve": curve_checks,
    "isomorphism": isomorphism_checks,
    "table1": table1_checks,
}

SUITE_ORDER = ("series", "jacobians", "curve", "isomorphism", "table1")


class UnknownSuiteError(ValueError):
    pass


def run_suite(suite, order):
    """Run one named suite (or "all"); returns the list of check results."""
    if suite == "all":
        results = []
        for name in SUITE_ORDER:
            results.extend(SUITES[name](order))
        return results
    if suite not in SUITES:
        raise UnknownSuiteError(
            f"unknown suite {suite!r}; valid: {', '.join(SUITE_ORDER)}, all"
        )
    return SUITES[suite](order)
