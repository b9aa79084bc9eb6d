"""Sparse multivariate polynomials over exact rationals.

One engine backs every polynomial flavor in the package (z-variables, the
Weyl generators, the two curve-coefficient frames, binary-form
coefficients).  Terms are a dict from exponent tuples to Fraction; zero
coefficients are never stored.  Subclasses fix the arity, print names and
which variables may carry negative (Laurent) exponents.

The canonical term order used everywhere is graded lexicographic with the
first variable largest; `sorted_terms` lists terms in decreasing order.
"""

from __future__ import annotations

from fractions import Fraction


def _grlex_key(exps):
    return (sum(exps), exps)


class SparsePoly:
    nvars = 0
    names = ()
    laurent = frozenset()

    def __init__(self, terms=()):
        clean = {}
        for exps, coeff in (terms.items() if isinstance(terms, dict) else terms):
            coeff = Fraction(coeff)
            if not coeff:
                continue
            exps = tuple(int(e) for e in exps)
            if len(exps) != self.nvars:
                raise ValueError(f"expected {self.nvars} exponents, got {exps}")
            for i, e in enumerate(exps):
                if e < 0 and i not in self.laurent:
                    raise ValueError(f"negative exponent on {self.names[i]}")
            clean[exps] = clean.get(exps, Fraction(0)) + coeff
        self.terms = {e: c for e, c in clean.items() if c}

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls.constant(1)

    @classmethod
    def constant(cls, value):
        return cls({(0,) * cls.nvars: Fraction(value)})

    @classmethod
    def variable(cls, i, power=1):
        exps = [0] * cls.nvars
        exps[i] = power
        return cls({tuple(exps): Fraction(1)})

    @classmethod
    def monomial(cls, exps, coeff=1):
        return cls({tuple(exps): Fraction(coeff)})

    # -- queries -------------------------------------------------------

    @property
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = type(self).constant(other)
        if not isinstance(other, SparsePoly) or type(other) is not type(self):
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    def coefficient(self, exps):
        return self.terms.get(tuple(exps), Fraction(0))

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    def total_degree(self):
        return max((sum(e) for e in self.terms), default=0)

    def degree_in(self, i):
        return max((e[i] for e in self.terms), default=0)

    def min_degree_in(self, i):
        return min((e[i] for e in self.terms), default=0)

    def weighted_degree(self, weights):
        """Common weighted degree of all terms; raises if inhomogeneous."""
        degs = {sum(w * e for w, e in zip(weights, exps)) for exps in self.terms}
        if len(degs) > 1:
            raise ValueError(f"inhomogeneous: weighted degrees {sorted(degs)}")
        return degs.pop() if degs else 0

    def is_homogeneous(self, weights):
        return len({sum(w * e for w, e in zip(weights, exps)) for exps in self.terms}) <= 1

    # -- arithmetic ----------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, (int, Fraction)):
            return type(self).constant(other)
        if type(other) is type(self):
            return other
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, Fraction(0)) + c
        return type(self)(terms)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return -(self - other)

    def __neg__(self):
        return type(self)({e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return type(self)({e: c * v for e, v in self.terms.items()})
        if type(other) is not type(self):
            return NotImplemented
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, Fraction(0)) + c1 * c2
        return type(self)(terms)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        return NotImplemented

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers must be nonnegative integers")
        result = type(self).one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def derivative(self, i):
        terms = {}
        for exps, c in self.terms.items():
            e = exps[i]
            if e == 0:
                continue
            new = list(exps)
            new[i] = e - 1
            terms[tuple(new)] = c * e
        return type(self)(terms)

    def evaluate(self, point):
        """Exact value at a tuple of rationals (Laurent exponents divide)."""
        total = Fraction(0)
        for exps, c in self.terms.items():
            val = c
            for x, e in zip(point, exps):
                if e:
                    val *= Fraction(x) ** e
            total += val
        return total

    # -- output ----------------------------------------------------------

    def to_json(self):
        return [[list(e), f"{c.numerator}/{c.denominator}"] for e, c in self.sorted_terms()]

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exps, c in self.sorted_terms():
            factors = [
                self.names[i] + (f"^{e}" if e != 1 else "")
                for i, e in enumerate(exps)
                if e
            ]
            mono = "*".join(factors)
            if mono and abs(c) == 1:
                parts.append(("-" if c < 0 else "") + mono)
            else:
                parts.append(str(c) + ("*" + mono if mono else ""))
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"{type(self).__name__}({self!s})"


def compose(poly, images, target_cls):
    """Substitute images[i] (elements of target_cls) for variable i of poly.

    Powers of each image are cached across terms.  A negative source
    exponent is only meaningful when the image is a single monomial, which
    is then inverted in the target Laurent ring.
    """
    powers = [{0: target_cls.one()} for _ in range(poly.nvars)]

    def power(i, e):
        cache = powers[i]
        if e not in cache:
            if e > 0:
                cache[e] = power(i, e - 1) * images[i]
            else:
                img = images[i]
                if len(img.terms) != 1:
                    raise ValueError(
                        "negative exponent on a variable whose image is not a monomial"
                    )
                (exps, coeff), = img.terms.items()
                cache[e] = target_cls.monomial(
                    tuple(x * e for x in exps), Fraction(coeff) ** e
                )
        return cache[e]

    result = target_cls.zero()
    for exps, c in poly.terms.items():
        term = target_cls.constant(c)
        for i, e in enumerate(exps):
            if e:
                term = term * power(i, e)
        result = result + term
    return result


def ring_det(matrix):
    """Determinant of a small square matrix over any commutative ring.

    Expansion by minors with memoization on (row count consumed, column
    subset); entries only need +, * and unary -.
    """
    n = len(matrix)
    if n == 0:
        raise ValueError("empty matrix")
    cache = {}

    def minor(row, cols):
        if len(cols) == 1:
            return matrix[row][cols[0]]
        key = (row, cols)
        if key in cache:
            return cache[key]
        total = None
        for k, col in enumerate(cols):
            rest = cols[:k] + cols[k + 1 :]
            term = matrix[row][col] * minor(row + 1, rest)
            if k % 2:
                term = -term
            total = term if total is None else total + term
        cache[key] = total
        return total

    return minor(0, tuple(range(n)))
