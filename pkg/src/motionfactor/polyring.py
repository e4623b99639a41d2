"""Polynomials over the reals, the quaternions and the dual quaternions.

Coefficients are stored in ascending degree and always written to the left
of the central indeterminate ``t``.  Quaternion and dual-quaternion
polynomials share the noncommutative machinery in :class:`_NCPoly`.
"""
from __future__ import annotations

import functools
import math
from fractions import Fraction
from typing import Iterable, Sequence

import mpmath
import numpy as np

from .algebra import (
    DualQuaternion,
    Quaternion,
    as_dual_quaternion,
    format_element,
    format_scalar,
    is_exact,
    is_zero,
    scalar,
    scalars_equal,
)
from .errors import HasRealRoot, IrrationalFactor, NotMonic

ZERO_DEGREE = -math.inf  # degree of the zero polynomial

_NUMBER = (int, Fraction, float)


def _exactify(c):
    return Fraction(c) if isinstance(c, int) else c


class RPoly:
    """Real polynomial with exact or float coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_exactify(c) for c in coeffs]
        while cs and is_zero(cs[-1]):
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def constant(cls, c) -> "RPoly":
        return cls([c])

    @classmethod
    def one(cls) -> "RPoly":
        return cls([Fraction(1)])

    @classmethod
    def t(cls) -> "RPoly":
        return cls([Fraction(0), Fraction(1)])

    @classmethod
    def quadratic(cls, b, c) -> "RPoly":
        """The monic quadratic t^2 + b t + c."""
        one = 1.0 if isinstance(b, float) or isinstance(c, float) else 1
        return cls([c, b, one])

    @property
    def deg(self):
        return len(self.coeffs) - 1 if self.coeffs else ZERO_DEGREE

    @property
    def lead(self):
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0 * self.lead

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_exact(self) -> bool:
        return all(is_exact(c) for c in self.coeffs)

    def __repr__(self) -> str:
        return f"RPoly([{', '.join(format_scalar(c) for c in self.coeffs)}])"

    def __str__(self) -> str:
        return format_poly([(c,) for c in self.coeffs], ("",))

    def __eq__(self, other) -> bool:
        if isinstance(other, _NUMBER):
            other = RPoly([other])
        if not isinstance(other, RPoly):
            return NotImplemented
        return len(self.coeffs) == len(other.coeffs) and all(
            scalars_equal(a, b) for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other) -> "RPoly":
        if isinstance(other, _NUMBER):
            other = RPoly([other])
        if not isinstance(other, RPoly):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return RPoly([self[i] + other[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self) -> "RPoly":
        return RPoly([-c for c in self.coeffs])

    def __sub__(self, other) -> "RPoly":
        if isinstance(other, _NUMBER):
            other = RPoly([other])
        if not isinstance(other, RPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "RPoly":
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, _NUMBER):
            return RPoly([c * other for c in self.coeffs])
        if isinstance(other, RPoly):
            if not self.coeffs or not other.coeffs:
                return RPoly()
            out = [0 * self.coeffs[0]] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if is_zero(a):
                    continue
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
            return RPoly(out)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, _NUMBER):
            return self * other
        return NotImplemented

    def __pow__(self, n: int) -> "RPoly":
        result = RPoly.one()
        for _ in range(n):
            result = result * self
        return result

    def __truediv__(self, s) -> "RPoly":
        if not isinstance(s, _NUMBER):
            return NotImplemented
        s = _exactify(s)
        return RPoly([c / s for c in self.coeffs])

    def __divmod__(self, other: "RPoly"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dn = other.deg
        lead = _exactify(other.lead)
        if self.deg < dn:
            return RPoly(), RPoly(rem)
        quot = [0 * lead] * (len(rem) - dn)
        unit = lead == 1
        for k in range(len(rem) - 1 - dn, -1, -1):
            c = rem[k + dn] if unit else rem[k + dn] / lead
            quot[k] = c
            if is_zero(c):
                continue
            for j, b in enumerate(other.coeffs):
                rem[k + j] -= c * b
        return RPoly(quot), RPoly(rem[:dn])

    def __floordiv__(self, other: "RPoly") -> "RPoly":
        return divmod(self, other)[0]

    def __mod__(self, other: "RPoly") -> "RPoly":
        return divmod(self, other)[1]

    def divides(self, other: "RPoly") -> bool:
        """True when ``self`` divides ``other``."""
        return (other % self).is_zero()

    def exact_div(self, other: "RPoly") -> "RPoly":
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ValueError(f"{other} does not divide {self}")
        return q

    def monic(self) -> "RPoly":
        if self.is_zero():
            return self
        return self / self.lead

    def derivative(self) -> "RPoly":
        return RPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, x):
        acc = 0 * self.lead
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, other: "RPoly") -> "RPoly":
        acc = RPoly()
        for c in reversed(self.coeffs):
            acc = acc * other + c
        return acc

    def to_float(self) -> "RPoly":
        return RPoly([float(c) for c in self.coeffs])


def real_gcd(a: RPoly, b: RPoly) -> RPoly:
    """Monic greatest common divisor by Euclid's algorithm."""
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd of two zero polynomials is undefined")
    a, b = a.monic(), b.monic()
    while not b.is_zero():
        a, b = b, (a % b).monic()
    return a


def squarefree_part(a: RPoly) -> list[tuple[RPoly, int]]:
    """Yun's decomposition a = lead * prod f_i**m_i, monic pairwise coprime f_i."""
    if a.is_zero():
        raise ValueError("zero polynomial has no squarefree decomposition")
    a = a.monic()
    if a.deg == 0:
        return []
    out = []
    da = a.derivative()
    g = real_gcd(a, da)
    b = a.exact_div(g)
    c = da.exact_div(g)
    d = c - b.derivative()
    i = 1
    while b.deg > 0:
        f = real_gcd(b, d)
        if f.deg > 0:
            out.append((f, i))
        b = b.exact_div(f)
        c = d.exact_div(f)
        d = c - b.derivative()
        i += 1
    return out


def sturm_sequence(a: RPoly) -> list[RPoly]:
    seq = [a, a.derivative()]
    while not seq[-1].is_zero():
        seq.append(-(seq[-2] % seq[-1]))
    return seq[:-1]


def _sign_changes(values) -> int:
    signs = [v > 0 for v in values if not is_zero(v)]
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


def count_real_roots(a: RPoly) -> int:
    """Number of distinct real roots, from a Sturm sequence."""
    if a.is_zero():
        raise ValueError("the zero polynomial vanishes everywhere")
    if a.deg <= 0:
        return 0
    seq = sturm_sequence(a)
    at_neg_inf = [p.lead * (-1 if p.deg % 2 else 1) for p in seq]
    at_pos_inf = [p.lead for p in seq]
    return _sign_changes(at_neg_inf) - _sign_changes(at_pos_inf)


def has_real_root(a: RPoly) -> bool:
    if a.is_exact():
        return count_real_roots(a) > 0
    return any(abs(r.imag) <= 1e-8 * max(1.0, abs(r)) for r in _numeric_roots(a, 20))


# ----------------------------------------------------------------------------
# quadratic factor extraction


def _initial_roots(coeffs: Sequence):
    """Double precision roots as starting points, or None on overflow."""
    try:
        desc = np.array([float(c) for c in reversed(coeffs)])
    except OverflowError:
        return None
    if not np.all(np.isfinite(desc)):
        return None
    roots = np.roots(desc)
    if len(roots) != len(coeffs) - 1 or not np.all(np.isfinite(roots)):
        return None
    # nudge coincident starting points apart; Aberth needs distinct iterates
    out = []
    for r in roots:
        r = complex(r)
        while any(abs(r - o) < 1e-12 * max(1.0, abs(r)) for o in out):
            r += 1e-8 * (1 + 1j) * max(1.0, abs(r))
        out.append(r)
    return out


def _aberth(coeffs: Sequence, dps: int) -> list:
    """Aberth-Ehrlich iteration on a monic polynomial (ascending coefficients)."""
    n = len(coeffs) - 1
    with mpmath.workdps(dps):
        cs = [mpmath.mpf(c.numerator) / c.denominator if isinstance(c, Fraction)
              else mpmath.mpf(c) for c in coeffs]
        dcs = [i * c for i, c in enumerate(cs)][1:]
        z = _initial_roots(coeffs)
        if z is None:
            radius = 1 + max(abs(c) for c in cs[:-1])
            z = [radius * 0.5 * mpmath.expj(2 * mpmath.pi * k / n + 0.4) for k in range(n)]
        else:
            z = [mpmath.mpc(r.real, r.imag) for r in z]

        def horner(poly, x):
            acc = mpmath.mpc(0)
            for c in reversed(poly):
                acc = acc * x + c
            return acc

        eps = mpmath.mpf(10) ** (-dps + 5)
        for _ in range(2000):
            worst = 0
            for k in range(n):
                pk = horner(cs, z[k])
                dk = horner(dcs, z[k])
                if pk == 0:
                    continue
                ratio = pk / dk if dk != 0 else mpmath.mpc(eps)
                s = mpmath.fsum(1 / (z[k] - z[j]) for j in range(n) if j != k)
                w = ratio / (1 - ratio * s)
                z[k] -= w
                worst = max(worst, abs(w) / max(1, abs(z[k])))
            if worst < eps:
                break
        return [complex(r) if dps <= 17 else r for r in z]


def _numeric_roots(a: RPoly, dps: int) -> list:
    m = a.monic()
    return _aberth(list(m.coeffs), dps)


def _float_quadratics(f: RPoly) -> list[RPoly]:
    roots = _numeric_roots(f, 17)
    out = []
    for r in roots:
        if r.imag > 0:
            out.append(RPoly.quadratic(-2.0 * r.real, r.real ** 2 + r.imag ** 2))
    if 2 * len(out) != f.deg:
        raise HasRealRoot(f"{f} has a real root")
    return out


def _exact_quadratics(f: RPoly) -> list[RPoly]:
    """Rational monic quadratic factors of a squarefree rational f."""
    f = f.monic()
    n = f.deg
    if n % 2:
        raise HasRealRoot(f"odd degree polynomial {f} has a real root")
    if n == 2:
        return [f]
    scale = 1
    for c in f.coeffs:
        scale = scale * c.denominator // math.gcd(scale, c.denominator)
    # g(t) = scale**n f(t/scale) is monic with integer coefficients, so by
    # Gauss's lemma its monic quadratic factors are integral as well.
    g = [c * scale ** (n - i) for i, c in enumerate(f.coeffs)]
    size = max(len(str(abs(c.numerator))) for c in g)
    for dps in (30 + size, 60 + 2 * size, 120 + 4 * size):
        roots = _aberth(g, dps)
        upper = sorted((r for r in roots if r.imag > 0), key=lambda r: (r.real, r.imag))
        if 2 * len(upper) != n:
            continue
        rest = f
        found = []
        for r in upper:
            b = int(mpmath.nint(-2 * r.real))
            c = int(mpmath.nint(r.real ** 2 + r.imag ** 2))
            quad = RPoly.quadratic(Fraction(b, scale), Fraction(c, scale * scale))
            q, rem = divmod(rest, quad)
            if not rem.is_zero():
                break
            rest = q
            found.append(quad)
        else:
            return found
    raise IrrationalFactor(f"{f} has no factorization into rational quadratics")


def _quad_key(q: RPoly):
    return (q[1], q[0])


@functools.lru_cache(maxsize=4096)
def _quadratic_factors_exact(coeffs: tuple) -> tuple:
    a = RPoly(coeffs)
    out = []
    for f, mult in squarefree_part(a):
        for quad in _exact_quadratics(f):
            out.extend([quad] * mult)
    return tuple(sorted(out, key=_quad_key))


def quadratic_factors(a: RPoly, hints: Iterable[RPoly] = ()) -> list[RPoly]:
    """Monic irreducible quadratics whose product times ``a.lead`` is ``a``.

    The result is sorted by ``(b, c)`` for factors ``t^2 + b t + c`` and
    repeated factors appear with their multiplicity.  ``hints`` are candidate
    quadratics tried by exact division before any numeric root finding.
    """
    if a.is_zero():
        raise ValueError("zero polynomial")
    if a.lead < 0:
        raise HasRealRoot(f"{a} has negative leading coefficient")
    if a.deg % 2:
        raise HasRealRoot(f"odd degree polynomial {a} has a real root")
    rest = a.monic()
    out = []
    for h in sorted(set(hints), key=_quad_key):
        if rest.deg < 2:
            break
        while rest.deg >= 2:
            q, r = divmod(rest, h)
            if not r.is_zero():
                break
            out.append(h)
            rest = q
    if rest.deg > 0:
        if rest.is_exact():
            if count_real_roots(rest) > 0:
                raise HasRealRoot(f"{a} has a real root")
            out.extend(_quadratic_factors_exact(rest.coeffs))
        else:
            for f, mult in squarefree_part(rest):
                for quad in _float_quadratics(f):
                    out.extend([quad] * mult)
    return sorted(out, key=_quad_key)


# ----------------------------------------------------------------------------
# noncommutative polynomials


class _NCPoly:
    """Polynomial with noncommutative coefficients and central indeterminate."""

    __slots__ = ("coeffs",)
    _coeff = None  # coefficient class, set by subclasses
    _width = 0

    def __init__(self, coeffs: Iterable = ()):
        cs = [self._coerce(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def _coerce(cls, c):
        raise NotImplementedError

    @classmethod
    def _ring(cls):
        """The polynomial ring class that arithmetic results belong to."""
        return cls

    @classmethod
    def _zero(cls):
        return cls._coerce(Fraction(0))

    @classmethod
    def one(cls):
        return cls([Fraction(1)])

    @classmethod
    def t(cls):
        return cls([Fraction(0), Fraction(1)])

    @classmethod
    def linear(cls, h):
        """The monic linear polynomial t - h."""
        return cls([-cls._coerce(h), Fraction(1)])

    @classmethod
    def from_rpoly(cls, r: RPoly):
        return cls(r.coeffs)

    @property
    def deg(self):
        return len(self.coeffs) - 1 if self.coeffs else ZERO_DEGREE

    @property
    def lead(self):
        return self.coeffs[-1] if self.coeffs else self._zero()

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self._zero()

    def __len__(self) -> int:
        return len(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.lead == 1

    def __eq__(self, other) -> bool:
        if isinstance(other, (RPoly,) + _NUMBER):
            other = self._ring()(other.coeffs if isinstance(other, RPoly) else [other])
        if isinstance(other, _NCPoly):
            if other._ring() is not self._ring():
                a, b = as_dqpoly(self), as_dqpoly(other)
                return a.coeffs == b.coeffs
            return len(self.coeffs) == len(other.coeffs) and all(
                a == b for a, b in zip(self.coeffs, other.coeffs))
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(c.coords() for c in self.coeffs))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({str(self)!r})"

    def __str__(self) -> str:
        return format_poly([c.coords() for c in self.coeffs], self._basis)

    def _promote(self, other):
        """Return (self, other) cast to a common polynomial class."""
        if isinstance(other, RPoly):
            return self, self._ring().from_rpoly(other)
        if isinstance(other, _NUMBER + (Quaternion, DualQuaternion)):
            if isinstance(other, DualQuaternion) and not isinstance(self, DQPoly):
                return as_dqpoly(self), DQPoly([other])
            return self, self._ring()([other])
        if isinstance(other, _NCPoly):
            if other._ring() is self._ring():
                return self, other
            return as_dqpoly(self), as_dqpoly(other)
        return None, None

    def __add__(self, other):
        a, b = self._promote(other)
        if a is None:
            return NotImplemented
        n = max(len(a.coeffs), len(b.coeffs))
        return a._ring()([a[i] + b[i] for i in range(n)])

    def __radd__(self, other):
        return self + other

    def __neg__(self):
        return self._ring()([-c for c in self.coeffs])

    def __sub__(self, other):
        a, b = self._promote(other)
        if a is None:
            return NotImplemented
        return a + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, _NUMBER):
            return self._ring()([c * other for c in self.coeffs])
        if isinstance(other, RPoly):
            return self._mul_real(other)
        a, b = self._promote(other)
        if a is None:
            return NotImplemented
        if not a.coeffs or not b.coeffs:
            return a._ring()()
        zero = a._zero()
        out = [zero] * (len(a.coeffs) + len(b.coeffs) - 1)
        for i, x in enumerate(a.coeffs):
            if x.is_zero():
                continue
            for j, y in enumerate(b.coeffs):
                out[i + j] = out[i + j] + x * y
        return a._ring()(out)

    def __rmul__(self, other):
        if isinstance(other, _NUMBER):
            return self * other
        if isinstance(other, RPoly):
            return self._mul_real(other)
        if isinstance(other, (Quaternion, DualQuaternion)):
            a, b = self._promote(other)
            return b * a
        return NotImplemented

    def __pow__(self, n: int):
        result = self._ring().one()
        for _ in range(n):
            result = result * self
        return result

    def _mul_real(self, r: RPoly):
        if not self.coeffs or r.is_zero():
            return self._ring()()
        zero = self._zero()
        out = [zero] * (len(self.coeffs) + len(r.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            for j, s in enumerate(r.coeffs):
                if not is_zero(s):
                    out[i + j] = out[i + j] + x * s
        return self._ring()(out)

    def __truediv__(self, s):
        if not isinstance(s, _NUMBER):
            return NotImplemented
        s = _exactify(s)
        return self._ring()([c / s for c in self.coeffs])

    def conj(self):
        return self._ring()([c.conj() for c in self.coeffs])

    def divmod_right(self, n):
        """(quot, rem) with self = quot * n + rem and deg rem < deg n."""
        a, n = self._promote(n)
        if not n.is_monic():
            raise NotMonic(f"divisor {n} is not monic")
        dn = n.deg
        rem = list(a.coeffs)
        if a.deg < dn:
            return a._ring()(), a._ring()(rem)
        quot = [a._zero()] * (len(rem) - dn)
        # a real divisor needs only scalar multiplications
        real = n.is_real()
        ys = [y.coords()[0] for y in n.coeffs] if real else n.coeffs
        for k in range(len(rem) - 1 - dn, -1, -1):
            c = rem[k + dn]
            quot[k] = c
            if c.is_zero():
                continue
            for j, y in enumerate(ys):
                if real and is_zero(y):
                    continue
                rem[k + j] = rem[k + j] - c * y
        return a._ring()(quot), a._ring()(rem[:dn])

    def divmod_left(self, n):
        """(quot, rem) with self = n * quot + rem and deg rem < deg n."""
        a, n = self._promote(n)
        q, r = a.conj().divmod_right(n.conj())
        return q.conj(), r.conj()

    def right_quotient(self, n):
        """Exact quotient q with self = q * n."""
        q, r = self.divmod_right(n)
        if not r.is_zero():
            raise ValueError(f"{n} is not a right factor of {self}")
        return q

    def left_quotient(self, n):
        """Exact quotient q with self = n * q."""
        q, r = self.divmod_left(n)
        if not r.is_zero():
            raise ValueError(f"{n} is not a left factor of {self}")
        return q

    def eval_right(self, h):
        """sum c_i h^i with coefficients on the left."""
        acc = self._zero()
        if isinstance(h, DualQuaternion) and not isinstance(acc, DualQuaternion):
            acc = as_dual_quaternion(acc)
        for c in reversed(self.coeffs):
            acc = acc * h + c
        return acc

    def at_infinity(self):
        return self.lead

    def components(self) -> list[RPoly]:
        """The real polynomials of each basis coordinate."""
        cols = [c.coords() for c in self.coeffs]
        return [RPoly([c[k] for c in cols]) for k in range(self._width)]

    def scalar_part(self) -> RPoly:
        return self.components()[0]

    def is_real(self) -> bool:
        return all(c.is_real() for c in self.coeffs)

    def to_rpoly(self) -> RPoly:
        if not self.is_real():
            raise ValueError(f"{self} is not a real polynomial")
        return self.scalar_part()

    def grpf(self) -> RPoly:
        return grpf(self)


class QPoly(_NCPoly):
    """Polynomial with quaternion coefficients."""

    __slots__ = ()
    _width = 4
    _basis = ("", "i", "j", "k")

    @classmethod
    def _coerce(cls, c):
        if isinstance(c, Quaternion):
            return c
        if isinstance(c, DualQuaternion):
            if not c.dual.is_zero():
                raise TypeError("dual quaternion with nonzero dual part in QPoly")
            return c.primal
        c = _exactify(c)
        return Quaternion.real(c)

    @classmethod
    def from_components(cls, comps: Sequence[RPoly]) -> "QPoly":
        n = max((len(c.coeffs) for c in comps), default=0)
        return cls([Quaternion(*(c[i] for c in comps)) for i in range(n)])

    def norm(self) -> RPoly:
        """The real polynomial self * conj(self)."""
        a, b, c, d = self.components()
        return a * a + b * b + c * c + d * d


class DQPoly(_NCPoly):
    """Polynomial with dual quaternion coefficients."""

    __slots__ = ()
    _width = 8
    _basis = ("", "i", "j", "k", "e", "e*i", "e*j", "e*k")

    @classmethod
    def _coerce(cls, c):
        return as_dual_quaternion(_exactify(c))

    @classmethod
    def from_parts(cls, primal, dual=None) -> "DQPoly":
        primal = as_qpoly(primal)
        dual = as_qpoly(dual) if dual is not None else QPoly()
        n = max(len(primal.coeffs), len(dual.coeffs))
        return cls([DualQuaternion(primal[i], dual[i]) for i in range(n)])

    @property
    def primal(self) -> QPoly:
        return QPoly([c.primal for c in self.coeffs])

    @property
    def dual(self) -> QPoly:
        return QPoly([c.dual for c in self.coeffs])

    def norm_parts(self) -> tuple[RPoly, RPoly]:
        """Real and dual part of the norm polynomial as real polynomials."""
        p = self.primal.components()
        d = self.dual.components()
        re = p[0] * p[0] + p[1] * p[1] + p[2] * p[2] + p[3] * p[3]
        du = (p[0] * d[0] + p[1] * d[1] + p[2] * d[2] + p[3] * d[3]) * 2
        return re, du


def as_qpoly(x) -> QPoly:
    if isinstance(x, QPoly):
        return x
    if isinstance(x, RPoly):
        return QPoly(x.coeffs)
    if isinstance(x, DQPoly):
        if not x.dual.is_zero():
            raise TypeError("polynomial has a nonzero dual part")
        return x.primal
    if isinstance(x, _NUMBER + (Quaternion,)):
        return QPoly([x])
    raise TypeError(f"cannot interpret {x!r} as a quaternion polynomial")


def as_dqpoly(x) -> DQPoly:
    if isinstance(x, DQPoly):
        return x
    if isinstance(x, _NCPoly):
        return DQPoly(x.coeffs)
    if isinstance(x, RPoly):
        return DQPoly(x.coeffs)
    if isinstance(x, _NUMBER + (Quaternion, DualQuaternion)):
        return DQPoly([x])
    raise TypeError(f"cannot interpret {x!r} as a dual quaternion polynomial")


def format_poly(coords_list, basis) -> str:
    terms = []
    for deg in range(len(coords_list) - 1, -1, -1):
        coords = coords_list[deg]
        if all(is_zero(c) for c in coords):
            continue
        body = format_element(coords, basis)
        mono = "" if deg == 0 else ("t" if deg == 1 else f"t^{deg}")
        nonzero = sum(1 for c in coords if not is_zero(c))
        if mono:
            if body == "1":
                body = mono
            elif body == "-1":
                body = "-" + mono
            elif nonzero > 1:
                body = f"({body})*{mono}"
            else:
                body = f"{body}*{mono}"
        terms.append(body)
    if not terms:
        return "0"
    out = terms[0]
    for term in terms[1:]:
        out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
    return out


# ----------------------------------------------------------------------------
# functional API


def poly_mul(a, b):
    return as_dqpoly(a) * as_dqpoly(b)


def poly_conj(a):
    return a.conj()


def norm_poly(a) -> DQPoly:
    """a * conj(a) as a dual quaternion polynomial."""
    a = as_dqpoly(a)
    re, du = a.norm_parts()
    return DQPoly.from_parts(QPoly(re.coeffs), QPoly(du.coeffs))


def poly_div_right(m, n):
    return as_dqpoly(m).divmod_right(as_dqpoly(n))


def poly_div_left(m, n):
    return as_dqpoly(m).divmod_left(as_dqpoly(n))


def poly_eval_right(c, h):
    return as_dqpoly(c).eval_right(as_dual_quaternion(h))


def grpf(p) -> RPoly:
    """Monic greatest real polynomial dividing every coordinate of ``p``."""
    comps = [c for c in p.components() if not c.is_zero()]
    if not comps:
        raise ValueError("the zero polynomial has no greatest real factor")
    g = comps[0].monic()
    for c in comps[1:]:
        if g.deg == 0:
            break
        g = real_gcd(g, c)
    return g


# ----------------------------------------------------------------------------
# serialization

BASIS_LABEL = "1,i,j,k,e,ei,ej,ek"
FORMAT_VERSION = 1


def poly_to_json(p) -> dict:
    p = as_dqpoly(p)
    return {
        "version": FORMAT_VERSION,
        "basis": BASIS_LABEL,
        "coeffs": [[format_scalar(x) for x in c.coords()] for c in p.coeffs],
    }


def poly_from_json(obj: dict, mode: str = "exact") -> DQPoly:
    if obj.get("basis", BASIS_LABEL).replace(" ", "") != BASIS_LABEL:
        raise ValueError(f"unsupported basis {obj.get('basis')!r}")
    version = obj.get("version", FORMAT_VERSION)
    if version != FORMAT_VERSION:
        raise ValueError(f"unsupported format version {version!r}")
    coeffs = []
    for item in obj["coeffs"]:
        if len(item) != 8:
            raise ValueError("every coefficient needs 8 scalar strings")
        coeffs.append(DualQuaternion.from_coords(scalar(str(s), mode) for s in item))
    return DQPoly(coeffs)


def rpoly_to_json(r: RPoly) -> list[str]:
    return [format_scalar(c) for c in r.coeffs]


def rpoly_from_json(items, mode: str = "exact") -> RPoly:
    return RPoly([scalar(str(s), mode) for s in items])
