"""Exact scalar ground fields: rationals and Gaussian rationals.

Plain rationals are `fractions.Fraction` (arbitrary precision, always in
lowest terms, positive denominator).  `GaussRat` adds the commuting complex
unit, written `E` in expression syntax: a value `re + E*im` with rational
parts.  `E` is the scalar imaginary unit of the complexification and is
unrelated to the quaternion units i, j, k, with which it commutes.
"""

from __future__ import annotations

from fractions import Fraction

Rat = Fraction

_COERCIBLE = (int, Fraction)


def as_rat(value) -> Fraction:
    """Coerce an int or Fraction to Fraction; reject floats (exactness)."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


class GaussRat:
    """A Gaussian rational re + E*im with E**2 = -1.

    Values are immutable; all arithmetic returns new objects.  Mixed
    arithmetic with int and Fraction works in both operand orders.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", as_rat(re))
        object.__setattr__(self, "im", as_rat(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussRat is immutable")

    @classmethod
    def coerce(cls, value) -> "GaussRat":
        if isinstance(value, GaussRat):
            return value
        if isinstance(value, _COERCIBLE):
            return cls(value)
        raise TypeError(f"cannot interpret {type(value).__name__} as GaussRat")

    # -- predicates ------------------------------------------------------

    @property
    def is_real(self) -> bool:
        return self.im == 0

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    # -- involutions -----------------------------------------------------

    def conjugate(self) -> "GaussRat":
        """Complex conjugation E -> -E."""
        return GaussRat(self.re, -self.im)

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, _COERCIBLE):
            return GaussRat(self.re + other, self.im)
        if isinstance(other, GaussRat):
            return GaussRat(self.re + other.re, self.im + other.im)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return GaussRat(-self.re, -self.im)

    def __sub__(self, other):
        if isinstance(other, _COERCIBLE):
            return GaussRat(self.re - other, self.im)
        if isinstance(other, GaussRat):
            return GaussRat(self.re - other.re, self.im - other.im)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, _COERCIBLE):
            return GaussRat(other - self.re, -self.im)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, _COERCIBLE):
            return GaussRat(self.re * other, self.im * other)
        if isinstance(other, GaussRat):
            return GaussRat(
                self.re * other.re - self.im * other.im,
                self.re * other.im + self.im * other.re,
            )
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, _COERCIBLE):
            return GaussRat(self.re / other, self.im / other)
        if isinstance(other, GaussRat):
            den = other.re * other.re + other.im * other.im
            if den == 0:
                raise ZeroDivisionError("division by zero GaussRat")
            num = self * other.conjugate()
            return GaussRat(num.re / den, num.im / den)
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, _COERCIBLE):
            return GaussRat(other) / self
        return NotImplemented

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("only nonnegative integer powers are supported")
        result = GaussRat(1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- comparison / hashing / display -----------------------------------

    def __eq__(self, other):
        if isinstance(other, _COERCIBLE):
            return self.im == 0 and self.re == other
        if isinstance(other, GaussRat):
            return self.re == other.re and self.im == other.im
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"GaussRat({self.re!r}, {self.im!r})"

    def __str__(self):
        """Expression-syntax rendering, reparseable in point mode."""
        if self.im == 0:
            return str(self.re)
        mag = -self.im if self.im < 0 else self.im
        im_txt = "E" if mag == 1 else f"{mag}*E"
        if self.re == 0:
            return im_txt if self.im > 0 else f"-{im_txt}"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re} {sign} {im_txt}"


IOTA = GaussRat(0, 1)
