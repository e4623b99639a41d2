"""Quaternion roots of real quadratics, common roots and the flip map."""
from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .algebra import DualQuaternion, Quaternion, is_exact, is_zero, sqrt
from .errors import (
    ExactRootUnavailable,
    GcdViolation,
    IrrationalRoot,
    NonUniqueRoot,
)
from .polyring import DQPoly, QPoly, RPoly, as_dqpoly, real_gcd

DEFAULT_DENOMINATOR_BOUND = 32


@dataclass(frozen=True)
class Direction:
    """Unnormalized direction vector; roots use its normalization."""

    x1: object
    x2: object
    x3: object

    def __post_init__(self):
        if all(is_zero(c) for c in self):
            raise ValueError("direction must be nonzero")

    def __iter__(self):
        return iter((self.x1, self.x2, self.x3))

    @property
    def sqnorm(self):
        return self.x1 * self.x1 + self.x2 * self.x2 + self.x3 * self.x3


@dataclass(frozen=True)
class RootSphere:
    """Quaternion roots of the irreducible quadratic t^2 + b t + c."""

    b: object
    c: object

    @classmethod
    def of(cls, q: RPoly) -> "RootSphere":
        if q.deg != 2 or q.lead != 1:
            raise ValueError(f"{q} is not a monic quadratic")
        sphere = cls(q[1], q[0])
        if not sphere.s2 > 0 or is_zero(sphere.s2):
            raise ValueError(f"{q} is not irreducible over the reals")
        return sphere

    @property
    def s2(self):
        return 4 * self.c - self.b * self.b

    def contains(self, h) -> bool:
        """True when h**2 + b h + c == 0."""
        h = Quaternion(*h.coords()) if isinstance(h, Quaternion) else h
        return (h * h + h * self.b + self.c).is_zero()

    def root(self, direction) -> Quaternion:
        d = direction if isinstance(direction, Direction) else Direction(*direction)
        ratio = self.s2 / d.sqnorm if is_exact(self.s2) and is_exact(d.sqnorm) else \
            float(self.s2) / float(d.sqnorm)
        scale = sqrt(ratio)
        if scale is None:
            raise IrrationalRoot(
                f"no rational root of t^2 + {self.b} t + {self.c} along {tuple(d)}; "
                "try enumerate_rational_roots")
        half = scale / 2
        return Quaternion(-self.b / 2, d.x1 * half, d.x2 * half, d.x3 * half)


def quad_roots(q: RPoly, direction) -> Quaternion:
    """The root of ``q`` whose vector part points along ``direction``."""
    return RootSphere.of(q).root(direction)


def _three_square_representable(n: int) -> bool:
    while n and n % 4 == 0:
        n //= 4
    return n % 8 != 7


def _triples(n: int) -> Iterator[tuple[int, int, int]]:
    """Integer triples with x1^2 + x2^2 + x3^2 == n in a fixed order."""
    r1 = math.isqrt(n)
    for x1 in range(r1, -r1 - 1, -1):
        rest1 = n - x1 * x1
        r2 = math.isqrt(rest1)
        for x2 in range(r2, -r2 - 1, -1):
            rest2 = rest1 - x2 * x2
            x3 = math.isqrt(rest2)
            if x3 * x3 == rest2:
                yield (x1, x2, x3)
                if x3:
                    yield (x1, x2, -x3)


def enumerate_rational_roots(q: RPoly, k: int,
                             bound: int = DEFAULT_DENOMINATOR_BOUND) -> list[Quaternion]:
    """Up to ``k`` distinct rational roots of ``q``, each followed by its negated-vector twin."""
    sphere = RootSphere.of(q)
    s2 = Fraction(sphere.s2)
    half_b = -Fraction(sphere.b) / 2
    seen = set()
    out = []
    for d in range(1, bound + 1):
        n = s2 * d * d
        if n.denominator != 1 or not _three_square_representable(n.numerator):
            continue
        for x in _triples(n.numerator):
            for sign in (1, -1):
                h = Quaternion(half_b, Fraction(sign * x[0], 2 * d),
                               Fraction(sign * x[1], 2 * d), Fraction(sign * x[2], 2 * d))
                key = h.coords()
                if key in seen:
                    continue
                seen.add(key)
                out.append(h)
                if len(out) >= k:
                    return out
    return out


@functools.lru_cache(maxsize=None)
def direction_sequence(limit: int = 3) -> tuple[tuple[int, int, int], ...]:
    """Primitive integer directions, short ones first, positive axes leading."""
    dirs = []
    for v in itertools.product(range(-limit, limit + 1), repeat=3):
        if v == (0, 0, 0) or math.gcd(*v) != 1:
            continue
        dirs.append(v)

    def key(v):
        return (sum(c * c for c in v), sum(1 for c in v if c < 0),
                tuple(-abs(c) for c in v), tuple(-c for c in v))

    return tuple(sorted(dirs, key=key))


def candidate_roots(q: RPoly, directions: Sequence = (), seed: int = 0,
                    axis=None) -> Iterator[Quaternion]:
    """Deterministic stream of distinct roots of ``q`` for free root choices.

    Explicit ``directions`` come first, then the rotated default direction
    sequence, then a bounded rational search.  With ``axis`` only the two
    roots whose vector part is parallel to the axis are produced.
    """
    sphere = RootSphere.of(q)
    exact = is_exact(sphere.b) and is_exact(sphere.c)
    if axis is not None:
        axis = Direction(*axis)
        for sign in (1, -1):
            v = Direction(*(sign * c for c in axis))
            try:
                yield sphere.root(v)
            except IrrationalRoot as exc:
                raise ExactRootUnavailable(
                    f"planar roots of {q} are irrational; rerun in float mode") from exc
        return
    seen = set()

    def fresh(h):
        key = h.coords()
        if key in seen:
            return False
        seen.add(key)
        return True

    for d in directions:
        h = sphere.root(d)
        if fresh(h):
            yield h
    seq = direction_sequence()
    seed %= len(seq)
    for v in seq[seed:] + seq[:seed]:
        try:
            h = sphere.root(v)
        except IrrationalRoot:
            continue
        if fresh(h):
            yield h
    if exact:
        for h in enumerate_rational_roots(q, 64):
            if fresh(h):
                yield h


def _linear_zero(rem):
    """Zero h of r1 t + r0 (evaluated with coefficients on the left)."""
    r1, r0 = rem[1], rem[0]
    try:
        inv = r1.inverse()
    except ZeroDivisionError as exc:
        raise NonUniqueRoot(
            f"linear remainder {rem} has a non-invertible leading coefficient") from exc
    return -(inv * r0)


def split_right(m, q: RPoly):
    """(h, m') with m = m' (t - h) and q(h) = 0, from the remainder of m mod q."""
    if isinstance(m, RPoly):
        m = QPoly(m.coeffs)
    _, rem = m.divmod_right(q)
    h = _linear_zero(rem)
    quot, check = m.divmod_right(m._ring().linear(h))
    if not check.is_zero():
        raise NonUniqueRoot(f"remainder of {m} modulo {q} has no common root")
    return h, quot


def common_root(m, q: RPoly):
    """The h with ``m = m' (t - h)`` and q(h) = 0."""
    return split_right(m, q)[0]


def flip_root(q: RPoly, d: QPoly, h_l: Quaternion) -> tuple[Quaternion, QPoly]:
    """The root h_r of q with (t - h_l) d = d_new (t - h_r); returns (h_r, d_new)."""
    if isinstance(d, RPoly):
        d = QPoly(d.coeffs)
    elif not isinstance(d, QPoly):
        d = QPoly(d.coeffs) if not isinstance(d, DQPoly) else d.primal
    norm = d.norm()
    if norm.is_zero() or real_gcd(norm, q).deg > 0:
        raise GcdViolation(f"norm of {d} shares a factor with {q}")
    if not RootSphere.of(q).contains(h_l):
        raise ValueError(f"{h_l} is not a root of {q}")
    prod = QPoly.linear(h_l) * d
    _, rem = prod.divmod_right(q)
    h_r = _linear_zero(rem)
    d_new = prod.right_quotient(QPoly.linear(h_r))
    return h_r, d_new


def right_root(p: QPoly, q: RPoly):
    """Right root of p on the sphere of q, or None when q divides p."""
    _, rem = p.divmod_right(q)
    if rem.is_zero():
        return None
    return _linear_zero(rem)


def left_root(p: QPoly, q: RPoly):
    """Left root h (p = (t - h) p') on the sphere of q, or None when q divides p."""
    h = right_root(p.conj(), q)
    return None if h is None else h.conj()


def as_dual(h) -> DualQuaternion:
    return h if isinstance(h, DualQuaternion) else DualQuaternion(h)
