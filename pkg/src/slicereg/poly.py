"""Dense univariate polynomials over an exact field, plus exact rational
linear algebra (row reduction, nullspace) for small linear systems.

A polynomial is an immutable tuple of coefficients, index = degree, with
no trailing zero; the empty tuple is the zero polynomial.  Coefficients
may be Fraction or GaussRat (any exact field scalar with +, *, /).
"""

from __future__ import annotations

from fractions import Fraction

from .errors import (BothZeroError, PolyDivisionByZeroError,
                     ZeroPolynomialError)
from .scalars import GaussRat


class Poly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        coeffs = list(coeffs)
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def constant(cls, value) -> "Poly":
        return cls((value,))

    @classmethod
    def monomial(cls, degree: int, coeff=Fraction(1)) -> "Poly":
        return cls((0,) * degree + (coeff,))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree, with the convention that the zero polynomial has -1."""
        return len(self.coeffs) - 1

    def coeff(self, k: int):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def leading(self):
        if self.is_zero:
            raise ZeroPolynomialError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    # -- ring operations -----------------------------------------------------

    def __add__(self, other):
        other = _poly_operand(other)
        if other is None:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(tuple(self.coeff(k) + other.coeff(k) for k in range(n)))

    __radd__ = __add__

    def __neg__(self):
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = _poly_operand(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _poly_operand(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussRat)):
            if not other:
                return Poly()
            return Poly(tuple(c * other for c in self.coeffs))
        if isinstance(other, Poly):
            if self.is_zero or other.is_zero:
                return Poly()
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for a, ca in enumerate(self.coeffs):
                if not ca:
                    continue
                for b, cb in enumerate(other.coeffs):
                    out[a + b] += ca * cb
            return Poly(tuple(out))
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("only nonnegative integer powers are supported")
        result = Poly((Fraction(1),))
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other):
        """Division with remainder: self = q*other + r, deg r < deg other."""
        other = _poly_operand(other)
        if other is None:
            return NotImplemented
        if other.is_zero:
            raise PolyDivisionByZeroError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Poly(), self
        lead = other.coeffs[-1]
        quot = [Fraction(0)] * (dq + 1)
        for shift in range(dq, -1, -1):
            top = rem[shift + len(other.coeffs) - 1]
            if top:
                factor = top / lead
                quot[shift] = factor
                for m, cm in enumerate(other.coeffs):
                    rem[shift + m] -= factor * cm
        return Poly(tuple(quot)), Poly(tuple(rem[: len(other.coeffs) - 1]))

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    # -- evaluation ------------------------------------------------------------

    def __call__(self, z0):
        """Horner evaluation; the scalar kind follows the inputs."""
        acc = z0 * 0
        for c in reversed(self.coeffs):
            acc = acc * z0 + c
        return acc

    def monic(self) -> "Poly":
        if self.is_zero:
            return self
        lead = self.coeffs[-1]
        if lead == 1:
            return self
        return Poly(tuple(c / lead for c in self.coeffs))

    # -- comparison / display ----------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, GaussRat)):
            other = Poly((other,))
        if isinstance(other, Poly):
            if len(self.coeffs) != len(other.coeffs):
                return False
            return all(a == b for a, b in zip(self.coeffs, other.coeffs))
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({list(self.coeffs)!r})"

    def __str__(self):
        from .parsing import render_poly
        return render_poly(self)


def _poly_operand(value):
    if isinstance(value, Poly):
        return value
    if isinstance(value, (int, Fraction, GaussRat)):
        return Poly((value,))
    return None


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor via the Euclidean scheme.

    Remainders are renormalized to monic at every step so Fraction sizes
    stay tame at desk scale; coefficient arithmetic is exact regardless.
    """
    if a.is_zero and b.is_zero:
        raise BothZeroError("gcd(0, 0) is undefined")
    a, b = a.monic() if not a.is_zero else a, b.monic() if not b.is_zero else b
    while not b.is_zero:
        a, b = b, (a % b)
        if not b.is_zero:
            b = b.monic()
    return a.monic()


def poly_gcd_many(polys) -> Poly:
    """gcd of an iterable of polynomials; zero entries are ignored."""
    acc = None
    for p in polys:
        if p.is_zero:
            continue
        acc = p if acc is None else poly_gcd(acc, p)
        if acc.degree == 0:
            break
    if acc is None:
        raise BothZeroError("gcd of all-zero family is undefined")
    return acc.monic()


def _divide_linear(coeffs, z0):
    """Synthetic division by (z - z0).

    Returns (quotient coefficients ascending, remainder), where the
    remainder equals the value at z0.
    """
    acc = coeffs[-1] * 0
    partial = []
    for c in reversed(coeffs):
        acc = acc * z0 + c
        partial.append(acc)
    remainder = partial.pop()
    partial.reverse()
    return partial, remainder


def vanishing_order(p: Poly, z0) -> int:
    """The largest m such that (z - z0)**m divides p."""
    if p.is_zero:
        raise ZeroPolynomialError("vanishing order of 0 is undefined")
    order = 0
    coeffs = list(p.coeffs)
    while coeffs:
        quotient, remainder = _divide_linear(coeffs, z0)
        if remainder != 0:
            break
        order += 1
        coeffs = quotient
    return order


class Matrix:
    """A dense matrix of exact rationals, sized for desk-scale systems."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries):
        entries = tuple(tuple(Fraction(e) if isinstance(e, int) else e
                              for e in row) for row in entries)
        rows = len(entries)
        cols = len(entries[0]) if rows else 0
        if any(len(r) != cols for r in entries):
            raise ValueError("ragged rows")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    def rref(self):
        """Reduced row echelon form; returns (rows, pivot column list)."""
        m = [list(row) for row in self.entries]
        pivots = []
        r = 0
        for c in range(self.cols):
            pivot_row = next((k for k in range(r, self.rows) if m[k][c]), None)
            if pivot_row is None:
                continue
            m[r], m[pivot_row] = m[pivot_row], m[r]
            inv = 1 / m[r][c]
            m[r] = [e * inv for e in m[r]]
            for k in range(self.rows):
                if k != r and m[k][c]:
                    factor = m[k][c]
                    m[k] = [e - factor * mr for e, mr in zip(m[k], m[r])]
            pivots.append(c)
            r += 1
            if r == self.rows:
                break
        return m, pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def nullspace(self):
        """Exact basis of the right kernel {v : M v = 0}.

        Each basis vector has a 1 in its free coordinate and zeros in all
        other free coordinates, so the result is deterministic.  Empty list
        iff the kernel is trivial.
        """
        reduced, pivots = self.rref()
        pivot_set = set(pivots)
        free = [c for c in range(self.cols) if c not in pivot_set]
        basis = []
        for fc in free:
            v = [Fraction(0)] * self.cols
            v[fc] = Fraction(1)
            for row, pc in zip(reduced, pivots):
                v[pc] = -row[fc]
            basis.append(tuple(v))
        return basis

    def mul_vector(self, v):
        if len(v) != self.cols:
            raise ValueError("dimension mismatch")
        return tuple(sum((row[c] * v[c] for c in range(self.cols)),
                         Fraction(0)) for row in self.entries)

    def __repr__(self):
        return f"Matrix({[list(r) for r in self.entries]!r})"
