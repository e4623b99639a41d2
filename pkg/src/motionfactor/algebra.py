"""Quaternions, dual quaternions and dual numbers over exact or float scalars.

Scalars are either :class:`fractions.Fraction` (exact mode, the default) or
Python floats (float mode).  Float comparisons use a relative tolerance that
can be changed per context with :func:`tolerance`.
"""
from __future__ import annotations

import contextlib
import contextvars
import math
from fractions import Fraction
from numbers import Rational
from typing import Iterator, Union

from .errors import NotInvertible

Scalar = Union[Fraction, float]

DEFAULT_TOLERANCE = 1e-10
_tolerance: contextvars.ContextVar[float] = contextvars.ContextVar(
    "motionfactor_tolerance", default=DEFAULT_TOLERANCE)


def get_tolerance() -> float:
    return _tolerance.get()


@contextlib.contextmanager
def tolerance(tau: float) -> Iterator[float]:
    """Temporarily set the float comparison tolerance."""
    token = _tolerance.set(float(tau))
    try:
        yield tau
    finally:
        _tolerance.reset(token)


def scalar(value, mode: str = "exact") -> Scalar:
    """Coerce ``value`` (int, str, Fraction, float) to a scalar of ``mode``."""
    if mode == "exact":
        if isinstance(value, Fraction):
            return value
        if isinstance(value, float):
            return Fraction(repr(value))
        return Fraction(value)
    if mode == "float":
        return float(Fraction(value)) if isinstance(value, str) else float(value)
    raise ValueError(f"unknown scalar mode {mode!r}")


def is_exact(x) -> bool:
    return isinstance(x, Rational)


def is_zero(x) -> bool:
    if isinstance(x, float):
        return abs(x) <= _tolerance.get()
    return x == 0


def scalars_equal(a, b) -> bool:
    if isinstance(a, float) or isinstance(b, float):
        a, b = float(a), float(b)
        return abs(a - b) <= _tolerance.get() * max(1.0, abs(a), abs(b))
    return a == b


def format_scalar(x) -> str:
    """``"p/q"`` for exact scalars, a decimal literal for floats."""
    if isinstance(x, float):
        return repr(x)
    return str(Fraction(x))


def parse_scalar(text: str, mode: str = "exact") -> Scalar:
    return scalar(text.strip(), mode)


def rational_sqrt(x: Fraction):
    """Exact square root of a nonnegative rational, or None if irrational."""
    x = Fraction(x)
    if x < 0:
        return None
    p, q = x.numerator, x.denominator
    rp, rq = math.isqrt(p), math.isqrt(q)
    if rp * rp == p and rq * rq == q:
        return Fraction(rp, rq)
    return None


def sqrt(x):
    """Square root respecting the scalar mode; None for irrational exact input."""
    if isinstance(x, float):
        return math.sqrt(max(x, 0.0))
    return rational_sqrt(x)


class Quaternion:
    """Quaternion w + x i + y j + z k."""

    __slots__ = ("w", "x", "y", "z")

    def __init__(self, w=0, x=0, y=0, z=0):
        self.w = w
        self.x = x
        self.y = y
        self.z = z

    @classmethod
    def real(cls, s) -> "Quaternion":
        return cls(s, 0 * s, 0 * s, 0 * s)

    @classmethod
    def from_vector(cls, v, w=0) -> "Quaternion":
        return cls(w, v[0], v[1], v[2])

    def coords(self) -> tuple:
        return (self.w, self.x, self.y, self.z)

    def vector(self) -> tuple:
        return (self.x, self.y, self.z)

    def __iter__(self):
        return iter(self.coords())

    def __repr__(self) -> str:
        return f"Quaternion({', '.join(format_scalar(c) for c in self.coords())})"

    def __str__(self) -> str:
        return format_element(self.coords(), ("", "i", "j", "k"))

    def __eq__(self, other) -> bool:
        if isinstance(other, Quaternion):
            return all(scalars_equal(a, b) for a, b in zip(self.coords(), other.coords()))
        if isinstance(other, DualQuaternion):
            return other == self
        if isinstance(other, (int, Fraction, float)):
            return self == Quaternion.real(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coords())

    def __add__(self, other) -> "Quaternion":
        if isinstance(other, Quaternion):
            return Quaternion(self.w + other.w, self.x + other.x,
                              self.y + other.y, self.z + other.z)
        if isinstance(other, (int, Fraction, float)):
            return Quaternion(self.w + other, self.x, self.y, self.z)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self) -> "Quaternion":
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def __sub__(self, other) -> "Quaternion":
        if isinstance(other, (Quaternion, int, Fraction, float)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other) -> "Quaternion":
        return (-self) + other

    def __mul__(self, other) -> "Quaternion":
        if isinstance(other, Quaternion):
            a1, b1, c1, d1 = self.w, self.x, self.y, self.z
            a2, b2, c2, d2 = other.w, other.x, other.y, other.z
            return Quaternion(
                a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
                a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
                a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
                a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
            )
        if isinstance(other, (int, Fraction, float)):
            return Quaternion(self.w * other, self.x * other, self.y * other, self.z * other)
        return NotImplemented

    def __rmul__(self, other) -> "Quaternion":
        if isinstance(other, (int, Fraction, float)):
            return self * other
        return NotImplemented

    def __truediv__(self, other) -> "Quaternion":
        if isinstance(other, (int, Fraction, float)):
            if is_zero(other):
                raise NotInvertible("division by zero scalar")
            if is_exact(other):
                other = Fraction(other)
            return Quaternion(self.w / other, self.x / other, self.y / other, self.z / other)
        return NotImplemented

    def conj(self) -> "Quaternion":
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def norm(self) -> Scalar:
        """The nonnegative scalar q * conj(q)."""
        return self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z

    def dot(self, other: "Quaternion") -> Scalar:
        return self.w * other.w + self.x * other.x + self.y * other.y + self.z * other.z

    def inverse(self) -> "Quaternion":
        n = self.norm()
        if is_zero(n):
            raise NotInvertible("zero quaternion has no inverse")
        return self.conj() / n

    def is_zero(self) -> bool:
        return all(is_zero(c) for c in self.coords())

    def is_real(self) -> bool:
        return is_zero(self.x) and is_zero(self.y) and is_zero(self.z)


class DualNumber:
    """Dual number re + eps * du."""

    __slots__ = ("re", "du")

    def __init__(self, re=0, du=0):
        self.re = re
        self.du = du

    def __repr__(self) -> str:
        return f"DualNumber({format_scalar(self.re)}, {format_scalar(self.du)})"

    def __eq__(self, other) -> bool:
        if isinstance(other, DualNumber):
            return scalars_equal(self.re, other.re) and scalars_equal(self.du, other.du)
        if isinstance(other, (int, Fraction, float)):
            return scalars_equal(self.re, other) and is_zero(self.du)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.re, self.du))

    def __add__(self, other) -> "DualNumber":
        other = _as_dual_number(other)
        return DualNumber(self.re + other.re, self.du + other.du)

    __radd__ = __add__

    def __neg__(self) -> "DualNumber":
        return DualNumber(-self.re, -self.du)

    def __sub__(self, other) -> "DualNumber":
        return self + (-_as_dual_number(other))

    def __mul__(self, other) -> "DualNumber":
        other = _as_dual_number(other)
        return DualNumber(self.re * other.re, self.re * other.du + self.du * other.re)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "DualNumber":
        other = _as_dual_number(other)
        if is_zero(other.re):
            raise NotInvertible("dual number with zero real part")
        re = other.re if not is_exact(other.re) else Fraction(other.re)
        return DualNumber(self.re / re, (self.du * re - self.re * other.du) / (re * re))


def _as_dual_number(x) -> DualNumber:
    if isinstance(x, DualNumber):
        return x
    return DualNumber(x, 0 * x)


class DualQuaternion:
    """Dual quaternion primal + eps * dual, with eps**2 = 0 and eps central."""

    __slots__ = ("primal", "dual")

    def __init__(self, primal: Quaternion, dual: Quaternion | None = None):
        if not isinstance(primal, Quaternion):
            primal = Quaternion.real(primal)
        if dual is None:
            dual = Quaternion.real(0 * primal.w)
        self.primal = primal
        self.dual = dual

    @classmethod
    def from_coords(cls, coords) -> "DualQuaternion":
        c = list(coords)
        if len(c) != 8:
            raise ValueError("a dual quaternion needs 8 coordinates")
        return cls(Quaternion(*c[:4]), Quaternion(*c[4:]))

    @classmethod
    def real(cls, s) -> "DualQuaternion":
        return cls(Quaternion.real(s))

    def coords(self) -> tuple:
        """Coordinates in basis order 1, i, j, k, e, ei, ej, ek."""
        return self.primal.coords() + self.dual.coords()

    def __repr__(self) -> str:
        return f"DualQuaternion({', '.join(format_scalar(c) for c in self.coords())})"

    def __str__(self) -> str:
        return format_element(self.coords(), ("", "i", "j", "k", "e", "ei", "ej", "ek"))

    def __eq__(self, other) -> bool:
        if isinstance(other, DualQuaternion):
            return self.primal == other.primal and self.dual == other.dual
        if isinstance(other, Quaternion):
            return self.primal == other and self.dual.is_zero()
        if isinstance(other, (int, Fraction, float)):
            return self == DualQuaternion.real(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coords())

    def __add__(self, other) -> "DualQuaternion":
        other = as_dual_quaternion(other)
        return DualQuaternion(self.primal + other.primal, self.dual + other.dual)

    __radd__ = __add__

    def __neg__(self) -> "DualQuaternion":
        return DualQuaternion(-self.primal, -self.dual)

    def __sub__(self, other) -> "DualQuaternion":
        return self + (-as_dual_quaternion(other))

    def __rsub__(self, other) -> "DualQuaternion":
        return as_dual_quaternion(other) - self

    def __mul__(self, other) -> "DualQuaternion":
        if isinstance(other, (int, Fraction, float)):
            return DualQuaternion(self.primal * other, self.dual * other)
        other = as_dual_quaternion(other)
        return DualQuaternion(
            self.primal * other.primal,
            self.primal * other.dual + self.dual * other.primal,
        )

    def __rmul__(self, other) -> "DualQuaternion":
        if isinstance(other, (int, Fraction, float)):
            return self * other
        return as_dual_quaternion(other) * self

    def __truediv__(self, other) -> "DualQuaternion":
        if isinstance(other, (int, Fraction, float)):
            return DualQuaternion(self.primal / other, self.dual / other)
        return NotImplemented

    def conj(self) -> "DualQuaternion":
        return DualQuaternion(self.primal.conj(), self.dual.conj())

    def norm(self) -> DualNumber:
        p, q = self.primal, self.dual
        return DualNumber(p.norm(), 2 * p.dot(q))

    def inverse(self) -> "DualQuaternion":
        if self.primal.is_zero():
            raise NotInvertible("dual quaternion with zero primal part")
        pinv = self.primal.inverse()
        # (p + eps q)^-1 = p^-1 - eps p^-1 q p^-1
        return DualQuaternion(pinv, -(pinv * self.dual * pinv))

    def is_zero(self) -> bool:
        return self.primal.is_zero() and self.dual.is_zero()

    def is_invertible(self) -> bool:
        return not self.primal.is_zero()

    def is_real(self) -> bool:
        return self.primal.is_real() and self.dual.is_zero()


def as_dual_quaternion(x) -> DualQuaternion:
    if isinstance(x, DualQuaternion):
        return x
    if isinstance(x, Quaternion):
        return DualQuaternion(x)
    if isinstance(x, (int, Fraction, float)):
        return DualQuaternion.real(x)
    raise TypeError(f"cannot interpret {x!r} as a dual quaternion")


def format_element(coords, basis) -> str:
    """Human readable sum like ``1 - 3/7*i + e*k``."""
    parts = []
    for c, b in zip(coords, basis):
        if is_zero(c):
            continue
        neg = c < 0
        mag = -c if neg else c
        if b == "":
            body = format_scalar(mag)
        elif mag == 1:
            body = b
        else:
            body = f"{format_scalar(mag)}*{b}"
        parts.append(("- " if neg else "+ ") + body)
    if not parts:
        return "0"
    text = " ".join(parts)
    return text[2:] if text.startswith("+ ") else "-" + text[2:]


# Functional spellings of the core operations.

def dq_mul(a: DualQuaternion, b: DualQuaternion) -> DualQuaternion:
    return as_dual_quaternion(a) * as_dual_quaternion(b)


def dq_conj(a: DualQuaternion) -> DualQuaternion:
    return as_dual_quaternion(a).conj()


def dq_norm(a: DualQuaternion) -> DualNumber:
    return as_dual_quaternion(a).norm()


def dq_inverse(a: DualQuaternion) -> DualQuaternion:
    return as_dual_quaternion(a).inverse()


# Basis constants (exact).
ONE = Quaternion(Fraction(1), Fraction(0), Fraction(0), Fraction(0))
I = Quaternion(Fraction(0), Fraction(1), Fraction(0), Fraction(0))
J = Quaternion(Fraction(0), Fraction(0), Fraction(1), Fraction(0))
K = Quaternion(Fraction(0), Fraction(0), Fraction(0), Fraction(1))
ZERO_Q = Quaternion(Fraction(0), Fraction(0), Fraction(0), Fraction(0))
EPS = DualQuaternion(ZERO_Q, ONE)


def serialize_dq(a: DualQuaternion) -> list[str]:
    """Array of 8 scalar strings in basis order [1, i, j, k, e, ei, ej, ek]."""
    return [format_scalar(c) for c in as_dual_quaternion(a).coords()]


def deserialize_dq(items, mode: str = "exact") -> DualQuaternion:
    if len(items) != 8:
        raise ValueError("expected 8 scalar strings")
    return DualQuaternion.from_coords(scalar(str(s), mode) for s in items)
