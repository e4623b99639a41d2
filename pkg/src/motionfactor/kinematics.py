"""Motion polynomials: validation, predicates, complexity and the point action."""
from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

from .algebra import (
    DualQuaternion,
    Quaternion,
    format_scalar,
    is_exact,
    is_zero,
)
from .errors import NotInvertibleLead, NotMotion, SingularParameter
from .polyring import (
    DQPoly,
    QPoly,
    RPoly,
    as_dqpoly,
    grpf,
    has_real_root,
    real_gcd,
)


class MotionPoly(DQPoly):
    """A validated, monic motion polynomial P + eps D.

    Instances come from :func:`validate_motion`; the constructor itself does
    not check anything, so internal code can build intermediate results
    cheaply.
    """

    __slots__ = ()

    @classmethod
    def _ring(cls):
        return DQPoly

    def __repr__(self) -> str:
        return f"MotionPoly({str(self)!r})"


@dataclass(frozen=True, order=True)
class ComplexityTriple:
    """(alpha, beta, gamma), compared lexicographically."""

    alpha: int
    beta: int
    gamma: int

    def __iter__(self):
        return iter((self.alpha, self.beta, self.gamma))

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.alpha, self.beta, self.gamma)


class Point(NamedTuple):
    x1: object
    x2: object
    x3: object

    def as_quaternion(self) -> Quaternion:
        return Quaternion(0 * self.x1, self.x1, self.x2, self.x3)


def motion_defect(m) -> RPoly:
    """Scalar polynomial P conj(D) + D conj(P); zero for motion polynomials."""
    m = as_dqpoly(m)
    return m.norm_parts()[1]


def validate_motion(m) -> MotionPoly:
    """Check the motion conditions and left-normalize to a monic polynomial."""
    m = as_dqpoly(m)
    if m.is_zero():
        raise NotMotion("the zero polynomial is not a motion polynomial")
    if not motion_defect(m).is_zero():
        raise NotMotion(f"{m} violates P conj(D) + D conj(P) = 0")
    lead = m.lead
    if not lead.is_invertible():
        raise NotInvertibleLead(f"leading coefficient {lead} is not invertible")
    if lead != 1:
        m = DQPoly([lead.inverse()]) * m
    return MotionPoly(m.coeffs)


def as_motion(m) -> MotionPoly:
    return m if isinstance(m, MotionPoly) else validate_motion(m)


def is_bounded(m) -> bool:
    """True iff the primal part has no real zeros (no real roots of P conj(P))."""
    norm = as_dqpoly(m).primal.norm()
    if norm.deg <= 0:
        return True
    return not has_real_root(norm)


def is_generic(m) -> bool:
    return grpf(as_dqpoly(m).primal).deg == 0


def complexity(m) -> ComplexityTriple:
    """(deg gcd(R, D conj(D)), deg R, deg P) with R the real factor of P."""
    m = as_dqpoly(m)
    p, d = m.primal, m.dual
    r = grpf(p)
    dd = d.norm()
    alpha = r.deg if dd.is_zero() else real_gcd(r, dd).deg
    return ComplexityTriple(int(alpha), int(r.deg), int(p.deg))


def _cross(u, v):
    return (u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0])


def _dot(u, v):
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def _vzero(u) -> bool:
    return all(is_zero(c) for c in u)


def _primitive(v):
    """Scale a rational vector to a primitive integer vector, first nonzero positive."""
    if not all(is_exact(c) for c in v):
        n = math.sqrt(sum(float(c) ** 2 for c in v))
        v = tuple(float(c) / n for c in v)
        first = next(c for c in v if not is_zero(c))
        return tuple(-c for c in v) if first < 0 else v
    fr = [Fraction(c) for c in v]
    den = 1
    for c in fr:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in fr]
    g = math.gcd(*ints)
    ints = [c // g for c in ints]
    if next(c for c in ints if c) < 0:
        ints = [-c for c in ints]
    return tuple(Fraction(c) for c in ints)


def is_planar(m) -> tuple[bool, tuple | None]:
    """Coefficient-subspace test for a planar motion.

    Returns (True, axis) when every primal coefficient lies in span{1, v}
    and every dual coefficient is a pure vector orthogonal to v.
    """
    m = as_dqpoly(m)
    pvecs = [c.primal.vector() for c in m.coeffs if not _vzero(c.primal.vector())]
    duals = [c.dual for c in m.coeffs]
    if any(not is_zero(q.w) for q in duals):
        return False, None
    dvecs = [q.vector() for q in duals if not _vzero(q.vector())]
    if pvecs:
        axis = pvecs[0]
        if any(not _vzero(_cross(axis, u)) for u in pvecs[1:]):
            return False, None
    else:
        if not dvecs:
            return True, (Fraction(1), Fraction(0), Fraction(0))
        u = dvecs[0]
        normal = next((_cross(u, w) for w in dvecs[1:] if not _vzero(_cross(u, w))), None)
        if normal is None:
            # prefer a coordinate axis so that planar roots stay rational
            basis = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
            normal = next((e for e in basis if is_zero(_dot(u, e))), None)
            if normal is None:
                normal = next(_cross(u, e) for e in basis if not _vzero(_cross(u, e)))
        axis = normal
    if any(not is_zero(_dot(axis, w)) for w in dvecs):
        return False, None
    return True, _primitive(axis)


def in_planar_group(h, axis) -> bool:
    """True when a dual quaternion lies in span{1, v, eps v^perp}."""
    h = h if isinstance(h, DualQuaternion) else DualQuaternion(h)
    return (_vzero(_cross(h.primal.vector(), axis))
            and is_zero(h.dual.w) and is_zero(_dot(h.dual.vector(), axis)))


def _value(poly: QPoly, t0, degree: int):
    if t0 is None or t0 == math.inf:
        return poly[degree]
    return poly.eval_right(Quaternion.real(t0))


def apply(m, t0, x) -> Point:
    """Image of the point x at parameter t0 (``math.inf`` or None for infinity)."""
    m = as_dqpoly(m)
    p_poly, d_poly = m.primal, m.dual
    n = m.deg
    p = _value(p_poly, t0, n)
    d = _value(d_poly, t0, n)
    den = p.norm()
    if is_zero(den):
        raise SingularParameter(f"primal part vanishes at t = {t0}")
    xq = x.as_quaternion() if isinstance(x, Point) else Point(*x).as_quaternion()
    img = p * xq * p.conj() + p * d.conj() * 2
    if is_exact(den):
        den = Fraction(den)
    return Point(img.x / den, img.y / den, img.z / den)


def trajectory(m, x, samples: Iterable) -> list[Point]:
    m = as_dqpoly(m)
    out = []
    bad = []
    for s in samples:
        try:
            out.append(apply(m, s, x))
        except SingularParameter:
            bad.append(s)
    if bad:
        raise SingularParameter(
            "primal part vanishes at samples " + ", ".join(str(b) for b in bad))
    return out


def trajectory_csv(samples: Sequence, points: Sequence[Point]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["t", "x1", "x2", "x3"])
    for s, p in zip(samples, points):
        writer.writerow([format_scalar(s) if s != math.inf else "inf"]
                        + [format_scalar(c) for c in p])
    return buf.getvalue()


def reparameterize(m, r: RPoly, q: RPoly) -> MotionPoly:
    """Q^n M(R/Q) with n = deg M, re-validated as a motion polynomial."""
    m = as_dqpoly(m)
    if q.is_zero():
        raise ValueError("denominator must be nonzero")
    if real_gcd(r, q).deg > 0:
        raise ValueError(f"numerator {r} and denominator {q} share a factor")
    n = m.deg
    out = DQPoly()
    r_pow = [RPoly.one()]
    q_pow = [RPoly.one()]
    for _ in range(n):
        r_pow.append(r_pow[-1] * r)
        q_pow.append(q_pow[-1] * q)
    for i, c in enumerate(m.coeffs):
        out = out + DQPoly([c]) * (r_pow[i] * q_pow[n - i])
    return validate_motion(out)

