"""Truncated power series with exact quaternion coefficients, plus the
double-precision evaluation layer used for transcendental checks.

A `TruncSeries` holds the coefficients of sum_{k<N} z^k a_k modulo z^N,
exactly (rational quaternions).  Ring operations truncate to the smaller
operand order and agree with the full stem operations below it.

Floats appear in exactly one place: `eval_numeric` and the conjugation
identity check.  Every approximate comparison carries an explicit
tolerance, and evaluations report a truncation tail bound

    |tail| <= sum_{k>=N} |a_k| |q|^k

computed from a factorial majorant |a_k| <= C * A^k / k! tracked through
the series operations.  For entire-function builders (cos, sin, exp and
their half-argument variants) the majorant is sharp enough for practical
certification; series that are plain polynomials report a zero tail.  For
evaluation points that are neither central nor real quaternions the bound
uses sqrt(2)*|q| since the euclidean norm on the complexified algebra is
only sqrt(2)-submultiplicative.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .algebra import CQuat, Quaternion
from .errors import NearSingularSampleError
from .poly import Poly
from .stem import StemPoly

DEFAULT_ORDER = 40
DEFAULT_TOL = 1e-9
# Published sample grid for identity checks: 5 points, |z| <= 1.5.
DEFAULT_SAMPLES = (0.3 + 0j, 1.0 + 0j, -0.7 + 0j, 0.5 + 0.5j, -1.2j)

_SCALARS = (int, Fraction)


class TruncSeries:
    """sum_{k<order} z^k a_k, exact modulo z^order."""

    __slots__ = ("order", "coeffs", "majorant", "is_polynomial")

    def __init__(self, order: int, coeffs, majorant=(0.0, 0.0),
                 is_polynomial: bool = True):
        if order < 1:
            raise ValueError("order must be at least 1")
        coeffs = [Quaternion.coerce(c) for c in coeffs]
        if len(coeffs) > order:
            raise ValueError("more coefficients than the order admits")
        coeffs += [Quaternion()] * (order - len(coeffs))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(coeffs))
        object.__setattr__(self, "majorant", (float(majorant[0]), float(majorant[1])))
        object.__setattr__(self, "is_polynomial", bool(is_polynomial))

    def __setattr__(self, name, value):
        raise AttributeError("TruncSeries is immutable")

    # -- constructors -----------------------------------------------------

    @classmethod
    def constant(cls, value, order: int) -> "TruncSeries":
        return cls(order, (Quaternion.coerce(value),))

    @classmethod
    def from_stem(cls, stem: StemPoly, order: int | None = None) -> "TruncSeries":
        if order is None:
            order = max(stem.degree + 1, 1)
        coeffs = [stem.coeff(k) for k in range(min(order, stem.degree + 1))]
        if order > stem.degree:
            return cls(order, coeffs)
        # Truncating below the degree: the dropped part is still a polynomial,
        # so a factorial majorant over the original coefficients stays valid.
        c = max((_euclid(a) * math.factorial(k)
                 for k, a in enumerate(stem.coeffs)), default=0.0)
        return cls(order, coeffs, (c, 1.0), False)

    def coeff(self, k: int) -> Quaternion:
        return self.coeffs[k] if 0 <= k < self.order else Quaternion()

    def to_stem(self) -> StemPoly:
        return StemPoly(self.coeffs)

    # -- ring operations -----------------------------------------------------

    def __add__(self, other):
        other = _series_operand(other, self.order)
        if other is None:
            return NotImplemented
        n = min(self.order, other.order)
        c1, a1 = self.majorant
        c2, a2 = other.majorant
        return TruncSeries(n, [self.coeffs[k] + other.coeffs[k] for k in range(n)],
                           (c1 + c2, max(a1, a2)),
                           self.is_polynomial and other.is_polynomial)

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries(self.order, [-c for c in self.coeffs],
                           self.majorant, self.is_polynomial)

    def __sub__(self, other):
        other = _series_operand(other, self.order)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _series_operand(other, self.order)
        if other is None:
            return NotImplemented
        return other + (-self)

    def star(self, other) -> "TruncSeries":
        other = _series_operand(other, self.order)
        if other is None:
            raise TypeError("star expects a series or a coefficient")
        n = min(self.order, other.order)
        out = [Quaternion() for _ in range(n)]
        for a in range(min(self.order, n)):
            ca = self.coeffs[a]
            if not ca:
                continue
            for b in range(min(other.order, n - a)):
                out[a + b] += ca * other.coeffs[b]
        c1, a1 = self.majorant
        c2, a2 = other.majorant
        polynomial = False
        if self.is_polynomial and other.is_polynomial:
            deg = _poly_degree(self.coeffs) + _poly_degree(other.coeffs)
            polynomial = deg < n
        return TruncSeries(n, out, (c1 * c2, a1 + a2), polynomial)

    def __mul__(self, other):
        if isinstance(other, (TruncSeries, Quaternion) + _SCALARS):
            return self.star(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, _SCALARS):
            return self.star(other)
        if isinstance(other, Quaternion):
            return TruncSeries.constant(other, self.order).star(self)
        return NotImplemented

    def conj(self) -> "TruncSeries":
        return TruncSeries(self.order, [c.conj() for c in self.coeffs],
                           self.majorant, self.is_polynomial)

    def trace(self) -> "TruncSeries":
        c, a = self.majorant
        return TruncSeries(self.order,
                           [Quaternion(2 * q.c0) for q in self.coeffs],
                           (2 * c, a), self.is_polynomial)

    def norm(self) -> "TruncSeries":
        return self.star(self.conj())

    # -- numeric evaluation -----------------------------------------------------

    def tail_bound(self, radius: float) -> float:
        """Upper bound for the dropped tail at evaluation radius |q|."""
        if self.is_polynomial:
            return 0.0
        c, a = self.majorant
        s = a * radius
        if c == 0.0 or s == 0.0:
            return 0.0
        # sum_{k>=N} s^k/k! <= (s^N/N!) e^s, computed in log space.
        log_term = self.order * math.log(s) - math.lgamma(self.order + 1)
        return c * math.exp(log_term + s)

    def eval_numeric(self, q) -> "EvalResult":
        """Horner evaluation in double precision, with its tail bound."""
        q = CQuatF.coerce(q)
        acc = CQuatF(0, 0, 0, 0)
        for c in reversed(self.coeffs):
            acc = q * acc + CQuatF.from_quaternion(c)
        radius = q.euclid()
        if not (q.is_central or q.is_real):
            radius *= math.sqrt(2.0)
        return EvalResult(acc, self.tail_bound(radius))

    # -- comparison / display ------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, TruncSeries):
            return self.order == other.order and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __repr__(self):
        return f"TruncSeries({self.order}, {list(self.coeffs)!r})"


def _poly_degree(coeffs) -> int:
    deg = -1
    for k, c in enumerate(coeffs):
        if c:
            deg = k
    return deg


def _series_operand(value, order):
    if isinstance(value, TruncSeries):
        return value
    if isinstance(value, (Quaternion,) + _SCALARS):
        return TruncSeries.constant(value, order)
    return None


def _euclid(q: Quaternion) -> float:
    return math.sqrt(float(q.c0) ** 2 + float(q.c1) ** 2
                     + float(q.c2) ** 2 + float(q.c3) ** 2)


_BUILDERS = ("cos", "sin", "exp", "cos_half", "sin_half")


def taylor_series(kind: str, order: int) -> TruncSeries:
    """Exact rational Taylor coefficients of the named entire function."""
    if kind not in _BUILDERS:
        raise ValueError(f"unknown series kind {kind!r}; choose from {_BUILDERS}")
    if order < 1:
        raise ValueError("order must be at least 1")
    half = kind.endswith("_half")
    base = kind.removesuffix("_half")
    coeffs = []
    for k in range(order):
        if base == "exp":
            c = Fraction(1, math.factorial(k))
        elif base == "cos":
            c = Fraction((-1) ** (k // 2), math.factorial(k)) if k % 2 == 0 else Fraction(0)
        else:  # sin
            c = Fraction((-1) ** ((k - 1) // 2), math.factorial(k)) if k % 2 == 1 else Fraction(0)
        if half:
            c *= Fraction(1, 2 ** k)
        coeffs.append(Quaternion(c))
    return TruncSeries(order, coeffs, (1.0, 0.5 if half else 1.0), False)


class CQuatF:
    """A quaternion with double-precision complex components: the numeric
    image of the complexified algebra for evaluation purposes only."""

    __slots__ = ("c0", "c1", "c2", "c3")

    def __init__(self, c0=0j, c1=0j, c2=0j, c3=0j):
        object.__setattr__(self, "c0", complex(c0))
        object.__setattr__(self, "c1", complex(c1))
        object.__setattr__(self, "c2", complex(c2))
        object.__setattr__(self, "c3", complex(c3))

    def __setattr__(self, name, value):
        raise AttributeError("CQuatF is immutable")

    @classmethod
    def coerce(cls, value) -> "CQuatF":
        if isinstance(value, CQuatF):
            return value
        if isinstance(value, Quaternion):
            return cls.from_quaternion(value)
        if isinstance(value, CQuat):
            return cls(complex(value.c0), complex(value.c1),
                       complex(value.c2), complex(value.c3))
        if isinstance(value, (int, float, complex, Fraction)):
            return cls(complex(value))
        raise TypeError(f"cannot interpret {type(value).__name__} as CQuatF")

    @classmethod
    def from_quaternion(cls, q: Quaternion) -> "CQuatF":
        return cls(float(q.c0), float(q.c1), float(q.c2), float(q.c3))

    def components(self):
        return (self.c0, self.c1, self.c2, self.c3)

    @property
    def is_central(self) -> bool:
        return self.c1 == 0 and self.c2 == 0 and self.c3 == 0

    @property
    def is_real(self) -> bool:
        return all(c.imag == 0.0 for c in self.components())

    def __add__(self, other):
        if isinstance(other, CQuatF):
            return CQuatF(self.c0 + other.c0, self.c1 + other.c1,
                          self.c2 + other.c2, self.c3 + other.c3)
        return NotImplemented

    def __sub__(self, other):
        if isinstance(other, CQuatF):
            return CQuatF(self.c0 - other.c0, self.c1 - other.c1,
                          self.c2 - other.c2, self.c3 - other.c3)
        return NotImplemented

    def __neg__(self):
        return CQuatF(-self.c0, -self.c1, -self.c2, -self.c3)

    def __mul__(self, other):
        if isinstance(other, CQuatF):
            a0, a1, a2, a3 = self.components()
            b0, b1, b2, b3 = other.components()
            return CQuatF(
                a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
                a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
                a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
                a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
            )
        return NotImplemented

    def conj(self) -> "CQuatF":
        return CQuatF(self.c0, -self.c1, -self.c2, -self.c3)

    def norm(self) -> complex:
        return (self.c0 * self.c0 + self.c1 * self.c1
                + self.c2 * self.c2 + self.c3 * self.c3)

    def inverse(self) -> "CQuatF":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("numerically singular element")
        inv = 1.0 / n
        c = self.conj()
        return CQuatF(c.c0 * inv, c.c1 * inv, c.c2 * inv, c.c3 * inv)

    def euclid(self) -> float:
        return math.sqrt(sum(abs(c) ** 2 for c in self.components()))

    def distance(self, other: "CQuatF") -> float:
        return max(abs(a - b) for a, b in zip(self.components(),
                                              other.components()))

    def __repr__(self):
        return (f"CQuatF({self.c0!r}, {self.c1!r}, {self.c2!r}, {self.c3!r})")


@dataclass(frozen=True)
class EvalResult:
    value: CQuatF
    tail_bound: float

    def __iter__(self):
        return iter((self.value, self.tail_bound))


@dataclass(frozen=True)
class IdentityCheck:
    sample: complex
    value_error: float
    trace_error: float
    norm_error: float
    tail_bound: float
    passed: bool


@dataclass(frozen=True)
class ConjugationReport:
    tol: float
    checks: tuple

    @property
    def all_pass(self) -> bool:
        return all(c.passed for c in self.checks)


def check_conjugation_identity(first: TruncSeries, second: TruncSeries,
                               conjugator: TruncSeries,
                               samples=DEFAULT_SAMPLES,
                               tol: float = DEFAULT_TOL) -> ConjugationReport:
    """Check conjugator(z)**-1 * first(z) * conjugator(z) = second(z)
    numerically on the samples, within tol; trace and norm of the two
    sides are compared as well.

    Raises NearSingularSampleError when |norm(conjugator)(z)| < tol at a
    sample, since the inverse would not be trustworthy there.
    """
    checks = []
    for z in samples:
        zq = CQuatF(complex(z))
        fv, f_tail = first.eval_numeric(zq)
        gv, g_tail = second.eval_numeric(zq)
        hv, h_tail = conjugator.eval_numeric(zq)
        norm_h = hv.norm()
        if abs(norm_h) < tol:
            raise NearSingularSampleError(
                f"norm of conjugator at {z} is {abs(norm_h):.3e} < tol")
        moved = hv.inverse() * fv * hv
        value_error = moved.distance(gv)
        trace_error = abs(2 * moved.c0 - 2 * gv.c0)
        norm_error = abs(moved.norm() - gv.norm())
        tail = f_tail + g_tail + h_tail
        passed = (value_error <= tol and trace_error <= tol
                  and norm_error <= tol)
        checks.append(IdentityCheck(complex(z), value_error, trace_error,
                                    norm_error, tail, passed))
    return ConjugationReport(tol, tuple(checks))


def numeric_roots(p: Poly) -> list[complex]:
    """Approximate roots of an exact polynomial, for display only."""
    import numpy as np

    if p.degree < 1:
        return []
    desc = [complex(c) if not isinstance(c, (int, Fraction)) else complex(float(c))
            for c in reversed(p.coeffs)]
    roots = np.roots(desc)
    return sorted((complex(r) for r in roots), key=lambda r: (r.real, r.imag))


def parse_samples(text: str) -> tuple:
    """Parse a comma- or space-separated list of complex samples.

    Accepts python complex syntax with either i or j as the imaginary
    suffix, e.g. "0.3, 1, -0.7, 0.5+0.5i, -1.2i".
    """
    out = []
    for chunk in text.replace(",", " ").split():
        normalized = chunk.replace("i", "j")
        try:
            out.append(complex(normalized))
        except ValueError as exc:
            raise ValueError(f"bad sample {chunk!r}") from exc
    if not out:
        raise ValueError("no samples given")
    return tuple(out)
