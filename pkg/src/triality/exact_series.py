"""Truncated Laurent series in t = q^(1/24) with exact rational coefficients.

Every modular object in the package lives on the single exponent lattice
(1/24)Z, stored as integer exponents in t-units (q = t^24, q^(1/2) = t^12,
the eta prefactor q^(1/24) = t).  A series knows its truncation bound
`trunc`: coefficients at exponents >= trunc are unknown, never assumed zero.
Equality is therefore only ever tested on the common window of two series.

Constructors for the special functions (Bernoulli numbers, Eisenstein
series, Jacobi theta constants, the eta product and the discriminant, and
the weight-2 level-2 forms e1, e2, e3) take an `order` argument in q-units:
the result is exact for all exponents below q^order.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

# t-units per power of q: the lattice (1/24)Z houses eta (1/24), theta2
# (1/8) and q^(1/2) simultaneously.
LATTICE = 24


class ZeroSeriesError(ZeroDivisionError):
    """Raised when inverting a series with no nonzero term below trunc."""


class FracSeries:
    """A truncated Laurent series sum_e c_e t^e, c_e rational, e < trunc."""

    def __init__(self, terms, trunc):
        self.trunc = int(trunc)
        clean = {}
        for e, c in (terms.items() if isinstance(terms, dict) else terms):
            if e >= self.trunc:
                continue
            c = Fraction(c)
            if c:
                e = int(e)
                clean[e] = clean.get(e, Fraction(0)) + c
        self.terms = {e: c for e, c in clean.items() if c}

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls, trunc):
        return cls({}, trunc)

    @classmethod
    def constant(cls, value, trunc):
        return cls({0: Fraction(value)}, trunc)

    @classmethod
    def t_power(cls, exponent, trunc, coeff=1):
        return cls({exponent: Fraction(coeff)}, trunc)

    @classmethod
    def from_q_coeffs(cls, coeffs, order):
        """Series with integer q-exponents from {n: c} or [c0, c1, ...]."""
        if isinstance(coeffs, dict):
            items = coeffs.items()
        else:
            items = enumerate(coeffs)
        return cls({LATTICE * n: c for n, c in items}, LATTICE * order)

    # -- basic queries -----------------------------------------------

    @property
    def is_zero(self):
        return not self.terms

    @property
    def valuation(self):
        """Smallest known exponent; trunc for a (window-)zero series."""
        return min(self.terms) if self.terms else self.trunc

    def coeff(self, e):
        if e >= self.trunc:
            raise ValueError(f"exponent {e} is at or beyond trunc {self.trunc}")
        return self.terms.get(e, Fraction(0))

    def q_coeff(self, n):
        """Coefficient of q^n (n may be a Fraction on the (1/24)Z lattice)."""
        e = Fraction(n) * LATTICE
        if e.denominator != 1:
            raise ValueError(f"q-exponent {n} is off the (1/{LATTICE})Z lattice")
        return self.coeff(int(e))

    def __eq__(self, other):
        if not isinstance(other, FracSeries):
            return NotImplemented
        w = min(self.trunc, other.trunc)
        for e in self.terms.keys() | other.terms.keys():
            if e < w and self.terms.get(e, 0) != other.terms.get(e, 0):
                return False
        return True

    __hash__ = None

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, FracSeries):
            return NotImplemented
        trunc = min(self.trunc, other.trunc)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, Fraction(0)) + c
        return FracSeries(terms, trunc)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return FracSeries({e: -c for e, c in self.terms.items()}, self.trunc)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                return FracSeries({}, self.trunc)
            return FracSeries({e: c * v for e, v in self.terms.items()}, self.trunc)
        if not isinstance(other, FracSeries):
            return NotImplemented
        # The product coefficient at e is complete iff every split e = i + j
        # with i >= val(a), j >= val(b) has i, j inside the known windows.
        trunc = min(self.trunc + other.valuation, other.trunc + self.valuation)
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                if e >= trunc:
                    continue
                terms[e] = terms.get(e, Fraction(0)) + c1 * c2
        return FracSeries(terms, trunc)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        if isinstance(other, FracSeries):
            return self * other.inverse()
        return NotImplemented

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        if n == 0:
            return FracSeries.constant(1, self.trunc)
        result = None
        base = self
        while n:
            if n & 1:
                result = base if result is None else result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def inverse(self):
        """Multiplicative inverse; valuation flips sign, trunc shrinks by 2*val."""
        if self.is_zero:
            raise ZeroSeriesError("cannot invert a series with no nonzero term below trunc")
        v = self.valuation
        lead = self.terms[v]
        width = self.trunc - v
        # self = lead * t^v * (1 + u); invert 1 + u by the standard recurrence.
        u = {e - v: c / lead for e, c in self.terms.items() if e != v}
        inv = {0: Fraction(1)}
        for n in range(1, width):
            acc = Fraction(0)
            for j, uj in u.items():
                if 0 < j <= n:
                    s = inv.get(n - j)
                    if s:
                        acc += uj * s
            if acc:
                inv[n] = -acc
        return FracSeries({e - v: c / lead for e, c in inv.items()}, self.trunc - 2 * v)

    def shift(self, offset):
        """Multiply by t^offset (exponents and trunc move together)."""
        return FracSeries({e + offset: c for e, c in self.terms.items()}, self.trunc + offset)

    def truncate(self, trunc):
        return FracSeries(self.terms, min(self.trunc, trunc))

    # -- output --------------------------------------------------------

    def to_json(self):
        return {
            "trunc": self.trunc,
            "terms": [[e, f"{c.numerator}/{c.denominator}"] for e, c in sorted(self.terms.items())],
        }

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items()):
            q = Fraction(e, LATTICE)
            if q == 0:
                mono = ""
            elif q == 1:
                mono = "q"
            else:
                mono = f"q^{q}" if q.denominator == 1 else f"q^({q})"
            if mono and abs(c) == 1:
                parts.append(("-" if c < 0 else "") + mono)
            else:
                parts.append(str(c) + ("*" + mono if mono else ""))
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"FracSeries({self!s}, trunc={self.trunc})"


# -- special functions ------------------------------------------------


@lru_cache(maxsize=None)
def bernoulli(k):
    """Exact Bernoulli number B_k in the x/(e^x - 1) convention (B_1 = -1/2)."""
    if k < 0:
        raise ValueError("Bernoulli index must be nonnegative")
    if k == 0:
        return Fraction(1)
    # x/(e^x - 1) = 1 / sum_{j>=0} x^j/(j+1)!; invert the series to order k.
    denom = [Fraction(1, math.factorial(j + 1)) for j in range(k + 1)]
    coeffs = [Fraction(1)]
    for n in range(1, k + 1):
        coeffs.append(-sum(denom[j] * coeffs[n - j] for j in range(1, n + 1)))
    return coeffs[k] * math.factorial(k)


def eisenstein(two_n, order):
    """Weight-2n Eisenstein series 1 - (4n/B_2n) sum k^(2n-1) q^k/(1-q^k)."""
    if two_n < 2 or two_n % 2:
        raise ValueError("Eisenstein weight must be an even integer >= 2")
    if order < 1:
        raise ValueError("order must be >= 1")
    n = two_n // 2
    factor = Fraction(-4 * n) / bernoulli(two_n)
    coeffs = {0: Fraction(1)}
    for k in range(1, order):
        kp = Fraction(k ** (two_n - 1))
        for m in range(k, order, k):
            coeffs[m] = coeffs.get(m, Fraction(0)) + factor * kp
    return FracSeries.from_q_coeffs(coeffs, order)


def theta_const(k, order):
    """Jacobi theta constant theta_k(0, tau) for k in {2, 3, 4}.

    theta2 = sum over half-integers n of q^(n^2/2): leading term 2 q^(1/8);
    theta3/theta4 sum over integers, with alternating signs for theta4.
    The lattice sum is truncated by solving the exponent bound exactly.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    trunc = LATTICE * order
    terms = {}
    if k == 2:
        # exponent of the n-th term: (n - 1/2)^2 / 2 = 3 (2n-1)^2 t-units;
        # n and 1-n coincide, giving coefficient 2.
        n = 1
        while 3 * (2 * n - 1) ** 2 < trunc:
            terms[3 * (2 * n - 1) ** 2] = Fraction(2)
            n += 1
    elif k in (3, 4):
        terms[0] = Fraction(1)
        n = 1
        while 12 * n * n < trunc:
            sign = -1 if (k == 4 and n % 2) else 1
            terms[12 * n * n] = Fraction(2 * sign)
            n += 1
    else:
        raise ValueError("theta constant index must be 2, 3 or 4")
    return FracSeries(terms, trunc)


def eta_delta(order):
    """The eta product q^(1/24) prod (1 - q^n) and the discriminant eta^24."""
    if order < 2:
        raise ValueError("order must be >= 2")
    trunc = LATTICE * order
    eta = FracSeries.t_power(1, trunc)
    n = 1
    while LATTICE * n < trunc:
        eta = eta * FracSeries({0: Fraction(1), LATTICE * n: Fraction(-1)}, trunc)
        n += 1
    return eta, eta ** 24


def e_series(i, order):
    """The weight-2 forms e1, e2, e3 built from fourth powers of thetas."""
    if i not in (1, 2, 3):
        raise ValueError("index must be 1, 2 or 3")
    if order < 1:
        raise ValueError("order must be >= 1")
    th2 = theta_const(2, order) ** 4
    th3 = theta_const(3, order) ** 4
    th4 = theta_const(4, order) ** 4
    twelfth = Fraction(1, 12)
    if i == 1:
        return (th3 + th4) * twelfth
    if i == 2:
        return (th2 - th4) * twelfth
    return (th2 + th3) * Fraction(-1, 12)
