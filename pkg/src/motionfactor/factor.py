"""Factorization engines for bounded motion polynomials.

Every engine returns a :class:`Factorization` ``(Q, [t - h_1, ..., t - h_n])``
with ``Q * M == (t - h_1) ... (t - h_n)``.  ``gfactor`` handles generic input,
``factor_all`` handles every bounded input with a cofactor of minimal degree
bound, ``factor_i`` goes through two planar sub-problems and ``pfactor``
keeps all factors inside one planar motion group.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Iterator, Sequence

from .algebra import (
    DualQuaternion,
    Quaternion,
    as_dual_quaternion,
    deserialize_dq,
    is_zero,
    scalar,
    serialize_dq,
)
from .errors import (
    ExactRootUnavailable,
    HasRealRoot,
    InternalDescentViolation,
    NotBounded,
    NotGeneric,
    NotMonic,
    NotMotion,
    NotPlanar,
)
from .kinematics import (
    ComplexityTriple,
    MotionPoly,
    complexity,
    in_planar_group,
    is_bounded,
    is_planar,
    motion_defect,
    validate_motion,
)
from .polyring import (
    DQPoly,
    QPoly,
    RPoly,
    as_dqpoly,
    grpf,
    has_real_root,
    quadratic_factors,
    real_gcd,
    rpoly_from_json,
    rpoly_to_json,
)
from .roots import candidate_roots, flip_root, left_root, right_root, split_right

STRATEGIES = ("gfactor", "factor_i", "factor_all", "planar")
MODES = ("exact", "float")


# ----------------------------------------------------------------------------
# result types


@dataclass(frozen=True)
class LinearFactor:
    """The monic linear motion polynomial t - h."""

    h: DualQuaternion

    def __post_init__(self):
        object.__setattr__(self, "h", as_dual_quaternion(self.h))

    @property
    def poly(self) -> DQPoly:
        return DQPoly.linear(self.h)

    @property
    def kind(self) -> str:
        return "translation" if self.h.primal.is_real() else "rotation"

    def is_motion(self) -> bool:
        return motion_defect(self.poly).is_zero()

    def __str__(self) -> str:
        return str(self.poly)


@dataclass(frozen=True)
class TraceStep:
    """One pass through the recursion of :func:`factor_all`."""

    branch: str
    complexity: ComplexityTriple
    P1: RPoly | None = None
    h_l: object = None
    h_r: object = None

    def to_json(self) -> dict:
        def dq(h):
            return None if h is None else serialize_dq(h)

        return {
            "branch": self.branch,
            "P1": None if self.P1 is None else rpoly_to_json(self.P1),
            "h_l": dq(self.h_l),
            "h_r": dq(self.h_r),
            "complexity": list(self.complexity.as_tuple()),
        }

    @classmethod
    def from_json(cls, obj: dict, mode: str = "exact") -> "TraceStep":
        def dq(items):
            return None if items is None else deserialize_dq(items, mode)

        return cls(
            branch=obj["branch"],
            complexity=ComplexityTriple(*obj["complexity"]),
            P1=None if obj.get("P1") is None else rpoly_from_json(obj["P1"], mode),
            h_l=dq(obj.get("h_l")),
            h_r=dq(obj.get("h_r")),
        )


@dataclass
class Factorization:
    """Real cofactor Q and linear factors with Q * M = product(factors)."""

    cofactor: RPoly
    factors: list[LinearFactor]
    trace: list[TraceStep] = field(default_factory=list)
    depth: int = 0

    @property
    def kinds(self) -> list[str]:
        return [f.kind for f in self.factors]

    @property
    def hs(self) -> list[DualQuaternion]:
        return [f.h for f in self.factors]

    def product(self) -> DQPoly:
        out = DQPoly.one()
        for f in self.factors:
            out = out * f.poly
        return out

    def to_json(self, include_trace: bool = True) -> dict:
        obj = {
            "cofactor": rpoly_to_json(self.cofactor),
            "factors": [serialize_dq(f.h) for f in self.factors],
            "kinds": self.kinds,
        }
        if include_trace and self.trace:
            obj["trace"] = [s.to_json() for s in self.trace]
        return obj

    @classmethod
    def from_json(cls, obj: dict, mode: str = "exact") -> "Factorization":
        try:
            cofactor = rpoly_from_json(obj["cofactor"], mode)
            factors = [LinearFactor(deserialize_dq(f, mode)) for f in obj["factors"]]
            trace = [TraceStep.from_json(s, mode) for s in obj.get("trace", [])]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed factorization: {exc}") from exc
        kinds = obj.get("kinds")
        if kinds is not None and list(kinds) != [f.kind for f in factors]:
            raise ValueError("stored kinds do not match the factors")
        return cls(cofactor, factors, trace)


@dataclass(frozen=True)
class EngineConfig:
    """Engine options.

    ``directions`` overrides the first candidate root of successive free root
    choices (``None`` entries keep the default sequence); it exists to replay
    a particular run such as a published worked example.
    """

    mode: str = "exact"
    strategy: str = "factor_all"
    factor_order: tuple[int, ...] | None = None
    direction_seed: int = 0
    planar: bool = False
    directions: tuple = ()

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.strategy not in STRATEGIES:
            raise ValueError(f"unknown strategy {self.strategy!r}")
        if self.factor_order is not None:
            object.__setattr__(self, "factor_order", tuple(self.factor_order))
        object.__setattr__(self, "directions", tuple(self.directions))


# ----------------------------------------------------------------------------
# helpers


def _in_mode(m, mode: str) -> DQPoly:
    m = as_dqpoly(m)
    if mode == "exact":
        return m
    return DQPoly([DualQuaternion.from_coords(scalar(c, mode) for c in q.coords())
                   for q in m.coeffs])


def _prepare(m, mode: str = "exact", bounded: bool = True) -> MotionPoly:
    m = _in_mode(m, mode)
    if m.is_zero():
        raise NotMotion("the zero polynomial is not a motion polynomial")
    if not m.is_monic():
        raise NotMonic(f"{m} is not monic; left-multiply by the inverse leading coefficient")
    m = validate_motion(m)
    if bounded and not is_bounded(m):
        raise NotBounded()
    return m


def _norm_hints(m: DQPoly) -> tuple[RPoly, ...]:
    norm = m.primal.norm()
    if norm.deg <= 0:
        return ()
    return tuple(quadratic_factors(norm))


def _real_quotient(p: QPoly, r: RPoly) -> QPoly:
    """p / r for a real polynomial r dividing every coordinate of p."""
    return QPoly.from_components([c.exact_div(r) for c in p.components()])


def _lin(h) -> QPoly:
    return QPoly.linear(h)


# ----------------------------------------------------------------------------
# generic factorization


def _gfactor_core(m: DQPoly, quads: Sequence[RPoly]) -> list[LinearFactor]:
    out: list[LinearFactor] = []
    for q in quads:
        h, m = split_right(m, q)
        out.insert(0, LinearFactor(h))
    if m.deg != 0 or m.lead != 1:
        raise NotGeneric(f"residual {m} after peeling all norm factors")
    return out


def _ordered(quads: list[RPoly], order) -> list[RPoly]:
    if order is None:
        return quads
    order = list(order)
    if sorted(order) != list(range(len(quads))):
        raise ValueError(
            f"order {order} is not a permutation of the {len(quads)} quadratic norm factors")
    return [quads[i] for i in order]


def gfactor(m, order: Sequence[int] | None = None, *, mode: str = "exact",
            hints: Sequence[RPoly] = ()) -> Factorization:
    """Factor a monic generic motion polynomial without a cofactor.

    Quadratic factors of the norm are consumed in ``order`` (a permutation
    of the sorted factor list); each one yields the next linear right factor.
    """
    m = _prepare(m, mode, bounded=False)
    if grpf(m.primal).deg > 0:
        raise NotGeneric(f"primal part of {m} has the real factor {grpf(m.primal)}")
    quads = quadratic_factors(m.primal.norm(), hints) if m.deg > 0 else []
    factors = _gfactor_core(m, _ordered(quads, order))
    comp = complexity(m)
    return Factorization(RPoly.one(), factors, [TraceStep("generic", comp)])


def linear_right_factor(m, q: RPoly) -> tuple[DQPoly, LinearFactor]:
    """Single generic step: m = m_rest * (t - h) with q(h) = 0."""
    h, rest = split_right(as_dqpoly(m), q)
    return rest, LinearFactor(h)


# ----------------------------------------------------------------------------
# the general engine


class _Engine:
    def __init__(self, cfg: EngineConfig, hints=(), axis=None):
        self.cfg = cfg
        self.hints = tuple(hints)
        self.axis = axis
        self.overrides = list(cfg.directions)

    def quads(self, a: RPoly) -> list[RPoly]:
        return quadratic_factors(a, self.hints)

    def candidates(self, q: RPoly) -> Iterator[Quaternion]:
        first = self.overrides.pop(0) if self.overrides else None
        if self.axis is not None:
            return candidate_roots(q, axis=self.axis)
        dirs = [first] if first is not None else []
        return candidate_roots(q, dirs, seed=self.cfg.direction_seed)

    def run(self, m: MotionPoly) -> Factorization:
        left: list[LinearFactor] = []
        right: list[LinearFactor] = []
        cof = RPoly.one()
        trace: list[TraceStep] = []
        start = complexity(m)
        depth = 0
        comp = start
        while True:
            p, d = m.primal, m.dual
            r1 = grpf(p)
            if r1.deg == 0:
                quads = self.quads(p.norm()) if m.deg > 0 else []
                order = self.cfg.factor_order if depth == 0 else None
                trace.append(TraceStep("generic", comp))
                mid = _gfactor_core(m, _ordered(quads, order))
                return Factorization(cof, left + mid + right, trace, depth)
            depth += 1
            if depth > start.beta + start.gamma:
                raise InternalDescentViolation(
                    f"recursion depth {depth} exceeds beta + gamma = {start.beta + start.gamma}")
            t_poly = _real_quotient(p, r1)
            dd = d.norm()
            shared = r1 if dd.is_zero() else real_gcd(r1, dd)
            if shared.deg > 0:
                step, m, lf, rf, comp = self._alpha_split(m, comp, shared)
            else:
                tt = t_poly.norm()
                common = real_gcd(r1, tt)
                if common.deg > 0:
                    step, m, lf, rf, comp = self._flip_step(
                        m, comp, common, t_poly, "common_factor")
                elif t_poly.deg == 0:
                    step, m, lf, rf, comp = self._flip_step(m, comp, r1, None, "real_primal")
                else:
                    step, m, lf, rf, comp = self._peel_right(m, comp, tt)
                if step.branch != "peel_right":
                    cof = cof * step.P1
            if lf is not None:
                left.append(lf)
            if rf is not None:
                right.insert(0, rf)
            trace.append(step)

    @staticmethod
    def _check(new: DQPoly, comp: ComplexityTriple, raises_cofactor: bool):
        new_comp = complexity(new)
        if not new_comp < comp:
            return None
        if raises_cofactor and new_comp.beta > comp.beta - 2:
            return None
        return new_comp

    def _alpha_split(self, m, comp, shared):
        """A quadratic factor of P is shared with the norm of D."""
        p, d = m.primal, m.dual
        p1 = self.quads(shared)[0]
        h_r = right_root(d, p1)
        if h_r is None:
            pairs = ((h, h) for h in self.candidates(p1))
        else:
            pairs = iter([(left_root(d, p1), h_r)])
        tried = False
        for h_l, h_r in pairs:
            tried = True
            p_l, d_l = p.left_quotient(_lin(h_l)), d.left_quotient(_lin(h_l))
            p_r, d_r = p.right_quotient(_lin(h_r)), d.right_quotient(_lin(h_r))
            if grpf(p_l).deg <= grpf(p_r).deg:
                new = DQPoly.from_parts(p_l, d_l)
                lf, rf = LinearFactor(h_l), None
            else:
                new = DQPoly.from_parts(p_r, d_r)
                lf, rf = None, LinearFactor(h_r)
            new_comp = self._check(new, comp, False)
            if new_comp is not None:
                step = TraceStep("alpha_split", comp, p1, h_l, h_r)
                return step, MotionPoly(new.coeffs), lf, rf, new_comp
        self._fail(tried, p1, comp)

    def _flip_step(self, m, comp, source, t_poly, branch):
        """Multiply by a quadratic P1 and move one factor to each side."""
        p, d = m.primal, m.dual
        p1 = self.quads(source)[0]
        p_rest = _real_quotient(p, p1)
        d_bar = d.conj()
        tried = False
        for h_r in self.candidates(p1):
            tried = True
            if t_poly is not None and t_poly.eval_right(h_r).is_zero():
                continue
            h_l_bar, d_bar_new = flip_root(p1, d_bar, h_r)
            h_l = h_l_bar.conj()
            if t_poly is None:
                if h_l == h_r.conj():
                    continue
                p_new = p_rest * _lin(h_l_bar) * _lin(h_r.conj())
            else:
                if t_poly.eval_right(h_l).is_zero():
                    continue
                p_new = _lin(h_l_bar) * p_rest * _lin(h_r.conj())
            new = DQPoly.from_parts(p_new, d_bar_new.conj())
            new_comp = self._check(new, comp, True)
            if new_comp is not None:
                step = TraceStep(branch, comp, p1, h_l, h_r)
                return (step, MotionPoly(new.coeffs), LinearFactor(h_l), LinearFactor(h_r),
                        new_comp)
        self._fail(tried, p1, comp)

    def _peel_right(self, m, comp, tt):
        p1 = self.quads(tt)[0]
        h, new = split_right(m, p1)
        new_comp = self._check(new, comp, False)
        if new_comp is None:
            raise InternalDescentViolation(
                f"right factor t - ({h}) did not lower complexity {comp.as_tuple()}")
        step = TraceStep("peel_right", comp, p1, None, h)
        return step, MotionPoly(new.coeffs), None, LinearFactor(h), new_comp

    @staticmethod
    def _fail(tried, p1, comp):
        if not tried:
            raise ExactRootUnavailable(
                f"no rational quaternion root of {p1} found; rerun in float mode")
        raise InternalDescentViolation(
            f"no root of {p1} lowers complexity {comp.as_tuple()}")


def factor_all(m, cfg: EngineConfig | None = None) -> Factorization:
    """Factor Q*M into linear rotation factors, with deg Q <= deg grpf(P)."""
    cfg = cfg or EngineConfig()
    if cfg.planar:
        return pfactor(m, cfg)
    m = _prepare(m, cfg.mode)
    return _Engine(cfg, _norm_hints(m)).run(m)


def pfactor(m, cfg: EngineConfig | None = None) -> Factorization:
    """Factorization inside the planar motion group of a planar input."""
    cfg = cfg or EngineConfig()
    m = _prepare(m, cfg.mode)
    ok, axis = is_planar(m)
    if not ok:
        raise NotPlanar(f"{m} is not a planar motion polynomial")
    result = _Engine(cfg, _norm_hints(m), axis=axis).run(m)
    for f in result.factors:
        if not in_planar_group(f.h, axis):
            raise InternalDescentViolation(f"factor {f} left the planar group of axis {axis}")
    return result


def factor_i(m, cfg: EngineConfig | None = None) -> Factorization:
    """Factor through the planar decomposition P*M = M1*M2.

    The cofactor is the product of T*conj(T), the real primal part used in
    the split and the two planar cofactors.
    """
    cfg = cfg or EngineConfig()
    m = _prepare(m, cfg.mode)
    hints = _norm_hints(m)
    p, d = m.primal, m.dual
    r1 = grpf(p)
    if r1.deg == 0:
        return gfactor(m, cfg.factor_order, mode=cfg.mode, hints=hints)
    t_poly = _real_quotient(p, r1)
    tail: list[LinearFactor] = []
    cof = RPoly.one()
    real_p = r1
    if t_poly.deg > 0:
        tail = gfactor(DQPoly.from_parts(t_poly), mode=cfg.mode, hints=hints).factors
        cof = t_poly.norm()
        real_p = r1 * cof
        d = d * t_poly.conj()
    comps = d.components()
    if not comps[0].is_zero():
        raise NotMotion("dual part has a scalar component over a real primal part")
    real_q = QPoly(real_p.coeffs)
    zero = RPoly()
    m1 = DQPoly.from_parts(real_q, QPoly.from_components([zero, comps[1], zero, zero]))
    m2 = DQPoly.from_parts(real_q, QPoly.from_components([zero, zero, comps[2], comps[3]]))
    sub = replace(cfg, directions=())
    f1 = pfactor(m1, sub)
    f2 = pfactor(m2, sub)
    cof = cof * real_p * f1.cofactor * f2.cofactor
    return Factorization(cof, f2.factors + f1.factors + tail,
                         f1.trace + f2.trace, f1.depth + f2.depth)


def factor(m, cfg: EngineConfig | None = None) -> Factorization:
    """Dispatch on ``cfg.strategy``."""
    cfg = cfg or EngineConfig()
    if cfg.strategy == "gfactor":
        return gfactor(m, cfg.factor_order, mode=cfg.mode)
    if cfg.strategy == "factor_i":
        return factor_i(m, cfg)
    if cfg.strategy == "planar":
        return pfactor(m, cfg)
    return factor_all(m, cfg)


# ----------------------------------------------------------------------------
# verification


@dataclass(frozen=True)
class VerifyResult:
    ok: bool
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def verify(f: Factorization, m) -> VerifyResult:
    """Exact re-multiplication check of a factorization against m."""
    try:
        m = as_dqpoly(m)
    except TypeError as exc:
        return VerifyResult(False, str(exc))
    cof = f.cofactor
    if cof.is_zero() or cof.deg == 0 and not cof.lead > 0:
        return VerifyResult(False, "cofactor must be a positive real polynomial")
    if cof.lead < 0 or is_zero(cof.lead):
        return VerifyResult(False, "cofactor has a non-positive leading coefficient")
    try:
        if cof.deg > 0 and has_real_root(cof):
            return VerifyResult(False, f"cofactor {cof} has a real root")
    except HasRealRoot:
        return VerifyResult(False, f"cofactor {cof} has a real root")
    for idx, lf in enumerate(f.factors):
        if not lf.is_motion():
            return VerifyResult(False, f"factor {idx} ({lf}) is not a motion polynomial")
    if f.product() != m * cof:
        return VerifyResult(False, "product of factors differs from cofactor * input")
    return VerifyResult(True, "ok")
