import itertools
import json
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
import worked_example as W
from corpus import (
    rand_bounded_motion,
    rand_positive_poly,
    rand_real_factor_motion,
    rand_rotation_factor,
)
from motionfactor import (
    DQPoly,
    DualQuaternion,
    EngineConfig,
    Factorization,
    LinearFactor,
    Quaternion,
    RPoly,
    complexity,
    factor,
    factor_all,
    factor_i,
    gfactor,
    grpf,
    in_planar_group,
    is_planar,
    linear_right_factor,
    pfactor,
    quadratic_factors,
    validate_motion,
    verify,
)
from motionfactor.errors import NonUniqueRoot, NotBounded, NotGeneric, NotMonic, NotPlanar
from motionfactor.parse import parse_expression as px


def polys(f):
    return [x.poly for x in f.factors]


def oracle_check(f, m, samples=(Fraction(-2), Fraction(1, 3), Fraction(5, 2))):
    """Re-multiplication checked pointwise through sympy quaternions."""
    for t0 in samples:
        lhs = oracles.product_value(polys(f), t0)
        rhs = tuple(c * f.cofactor(t0) for c in oracles.eval_dqpoly(m, t0))
        assert lhs == rhs


# generic engine

def test_gfactor_two_orders():
    m = px("(t - i)(t - 2j - 1)")
    a, b = gfactor(m, (0, 1)), gfactor(m, (1, 0))
    assert polys(a) == [px("t - i"), px("t - 1 - 2j")]
    assert polys(a) != polys(b)
    for f in (a, b):
        assert f.cofactor == RPoly.one() and verify(f, m)
        oracle_check(f, m)


def test_gfactor_repeated_norm_factor():
    m = px("(t - i)(t - j)")
    assert polys(gfactor(m)) == [px("t - i"), px("t - j")]


def test_gfactor_rejects():
    with pytest.raises(NotGeneric):
        gfactor(W.NO_FACTORIZATION)
    with pytest.raises(NotMonic):
        gfactor(px("2t - 2i"))
    with pytest.raises(ValueError):
        gfactor(px("(t - i)(t - 2j - 1)"), (0,))


def _generic_cubic(rng):
    while True:
        m = DQPoly.one()
        for _ in range(3):
            m = m * DQPoly.linear(rand_rotation_factor(rng))
        if len(set(quadratic_factors(m.primal.norm()))) == 3 and grpf(m.primal).deg == 0:
            return m


@given(st.integers(0, 10**6))
@settings(max_examples=15, deadline=None)
def test_six_orders_give_six_distinct_factorizations(seed):
    m = _generic_cubic(random.Random(seed))
    results = [polys(gfactor(m, o)) for o in itertools.permutations(range(3))]
    assert all(verify(gfactor(m, o), m) for o in itertools.permutations(range(3)))
    assert len({tuple(map(str, r)) for r in results}) == 6


def test_linear_right_factor():
    m2 = W.IT1_PL + px("eps") * W.IT1_DL
    rest, f = linear_right_factor(m2, W.IT2_P1)
    assert f.h == W.IT2_H and rest == W.IT2_M
    rest, f = linear_right_factor(px("(t - i)(t - j)"), RPoly.quadratic(0, 1))
    assert f.poly == px("t - j") and rest == px("t - i")
    with pytest.raises(NonUniqueRoot):
        linear_right_factor(W.NO_FACTORIZATION, RPoly.quadratic(0, 1))


# general engine

def test_no_factorization_example():
    f = factor_all(W.NO_FACTORIZATION)
    assert f.cofactor == RPoly.quadratic(0, 1)
    assert polys(f) == [px("t - j"), px("t + j - 1/2 eps k"), px("t + j + 1/2 eps k"), px("t - j")]
    oracle_check(f, W.NO_FACTORIZATION)


def test_family_example_after_sign_correction():
    # the two-parameter family multiplies to t^2 - eps j t + 1 - eps i
    m = px("t^2 - eps j t + 1 - eps i")
    h1, h2 = W.family(Fraction(0), Fraction(1))
    f = factor_all(m)
    assert f.cofactor == RPoly.one()
    assert polys(f) == [DQPoly.linear(h1), DQPoly.linear(h2)]


def test_printed_family_polynomial_is_not_monic():
    assert W.FAMILY_M.lead != 1
    with pytest.raises(NotMonic):
        factor_all(W.FAMILY_M)
    m = validate_motion(W.FAMILY_M)
    f = factor_all(m)
    assert verify(f, m) and f.cofactor == RPoly.one()


def test_worked_example_default_directions():
    f = factor_all(W.M)
    assert verify(f, W.M)
    assert f.cofactor.deg <= grpf(W.M.primal).deg
    oracle_check(f, W.M)


def test_darboux_examples():
    f = factor_all(W.DARBOUX)
    assert f.cofactor == RPoly.one() and verify(f, W.DARBOUX)
    assert f.trace[0].branch == "alpha_split"
    g = factor_all(W.VERTICAL)
    assert g.cofactor == W.VERTICAL_COFACTOR and verify(g, W.VERTICAL)


def test_darboux_outer_factors_of_alpha_split_have_no_dual_part():
    # the forced split at the first step emits a purely primal factor,
    # while both outer printed factors carry dual parts
    for seed in range(4):
        f = factor_all(W.DARBOUX, EngineConfig(direction_seed=seed))
        assert f.factors[0].h.dual.is_zero() or f.factors[-1].h.dual.is_zero()
    assert not W.DARBOUX_Q[0].coeffs[0].dual.is_zero()
    assert not W.DARBOUX_Q[2].coeffs[0].dual.is_zero()


def test_factor_all_rejects_unbounded():
    with pytest.raises(NotBounded) as info:
        factor_all(W.PRISMATIC)
    assert "reparam" in str(info.value)


def test_trace_is_descending():
    f = factor_all(W.M, EngineConfig(directions=W.DIRECTIONS))
    comps = [s.complexity for s in f.trace]
    assert comps == sorted(comps, reverse=True) and len(set(comps)) == len(comps)


@given(st.integers(0, 10**6))
@settings(max_examples=25, deadline=None)
def test_soundness_and_degree_bound(seed):
    m = rand_bounded_motion(random.Random(seed), 1, 3, 4)
    f = factor_all(m)
    assert verify(f, m)
    assert f.cofactor.deg <= grpf(m.primal).deg
    assert set(f.kinds) <= {"rotation"}
    comp = complexity(m)
    assert f.depth <= comp.beta + comp.gamma


def _rotation_with_primal(p, rng):
    v = p.vector()
    w = [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(3)]
    cross = (v[1] * w[2] - v[2] * w[1], v[2] * w[0] - v[0] * w[2], v[0] * w[1] - v[1] * w[0])
    return DualQuaternion(p, Quaternion(0, *cross))


def _paired_motion(rng):
    """Conjugate primal parts with unrelated duals, so the primal part has a real factor."""
    h = rand_rotation_factor(rng)
    hc = _rotation_with_primal(h.primal.conj(), rng)
    middle = [DQPoly.linear(rand_rotation_factor(rng)) for _ in range(rng.randint(0, 2))]
    m = DQPoly.linear(h)
    for g in middle:
        m = m * g
    return m * DQPoly.linear(hc) * rand_positive_poly(rng, rng.choice((0, 2)))


@given(st.integers(0, 10**6))
@settings(max_examples=25, deadline=None)
def test_soundness_on_structured_inputs(seed):
    m = _paired_motion(random.Random(seed))
    f = factor_all(m)
    assert verify(f, m)
    assert f.cofactor.deg <= grpf(m.primal).deg


@given(st.integers(0, 10**6))
@settings(max_examples=40, deadline=None)
def test_soundness_with_real_primal_factor(seed):
    m = rand_real_factor_motion(random.Random(seed))
    f = factor_all(m)
    assert verify(f, m)
    assert f.cofactor.deg <= grpf(m.primal).deg
    comp = complexity(m)
    assert f.depth <= comp.beta + comp.gamma


def test_branch_coverage():
    rng = random.Random(7)
    seen = set()
    for _ in range(40):
        seen.update(s.branch for s in factor_all(rand_real_factor_motion(rng)).trace)
        seen.update(s.branch for s in factor_all(_paired_motion(rng)).trace)
    assert seen == {"alpha_split", "real_primal", "peel_right", "generic"}
    # a shared quadratic between R1 and T conj(T) with alpha = 0 only arises mid-recursion
    assert "common_factor" in {s.branch for s in factor_all(W.M).trace}


def test_determinism():
    a = factor_all(W.M).to_json()
    b = factor_all(W.M).to_json()
    assert json.dumps(a) == json.dumps(b)


def test_seed_changes_only_choices():
    f = factor_all(W.M, EngineConfig(direction_seed=5))
    assert verify(f, W.M) and f.cofactor.deg == 4


# planar engine

def test_pfactor_examples():
    m = px("t^2 + 1 + eps (j t + k)")
    f = pfactor(m)
    ok, axis = is_planar(m)
    assert verify(f, m) and f.cofactor.deg <= 2
    assert all(in_planar_group(h, axis) for h in f.hs)
    assert polys(pfactor(px("t - i"))) == [px("t - i")]
    with pytest.raises(NotPlanar):
        pfactor(W.M)


def test_pfactor_vertical_axis_and_config_flag():
    m = W.PRISMATIC
    with pytest.raises(NotBounded):
        pfactor(m)
    m = px("(t^2 + 4)(t - k) + eps (i t + 3 j)")
    m = validate_motion(m)
    f = factor_all(m, EngineConfig(planar=True))
    ok, axis = is_planar(m)
    assert ok and verify(f, m)
    assert all(in_planar_group(h, axis) for h in f.hs)


@given(st.integers(0, 10**6))
@settings(max_examples=20, deadline=None)
def test_pfactor_random_planar(seed):
    rng = random.Random(seed)
    m = DQPoly.one()
    for _ in range(rng.randint(1, 3)):
        a, r = Fraction(rng.randint(-4, 4), 2), Fraction(rng.randint(1, 4))
        dual = (Fraction(rng.randint(-5, 5), 3), Fraction(rng.randint(-5, 5), 3))
        m = m * px(f"t - {a} - {r} i - eps ({dual[0]} j + {dual[1]} k)")
    m = m * rand_positive_poly(rng, 2).compose(RPoly.t())
    m = DQPoly([c for c in m.coeffs])
    ok, axis = is_planar(m)
    if not ok:
        return
    f = pfactor(m)
    assert verify(f, m)
    assert f.cofactor.deg <= m.deg
    assert all(in_planar_group(h, axis) for h in f.hs)


# factor_i

def test_factor_i_examples():
    f = factor_i(W.NO_FACTORIZATION)
    assert verify(f, W.NO_FACTORIZATION)
    assert f.cofactor == RPoly.quadratic(0, 1) ** 2
    g = factor_i(px("(t - i)(t - j)"))
    assert g.cofactor == RPoly.one() and polys(g) == [px("t - i"), px("t - j")]


def test_factor_i_worked_example_within_derived_bound():
    f = factor_i(W.M)
    assert verify(f, W.M)
    m, r = W.M.deg, grpf(W.M.primal).deg
    assert f.cofactor.deg <= 8 * m - 5 * r


def test_factor_i_derived_bound_on_random_inputs():
    rng = random.Random(11)
    for _ in range(8):
        m = rand_bounded_motion(rng, 2, 3, 4)
        f = factor_i(m)
        r = grpf(m.primal).deg
        assert verify(f, m)
        assert f.cofactor.deg <= 8 * m.deg - 5 * r


@pytest.mark.xfail(strict=True, reason="the real primal part of the planar split must also "
                   "enter the cofactor, which the stated bound leaves out")
def test_factor_i_worked_example_stated_bound():
    assert factor_i(W.M).cofactor.deg <= 12


def test_factor_dispatch():
    m = px("(t - i)(t - 2j - 1)")
    for strategy in ("gfactor", "factor_i", "factor_all"):
        assert verify(factor(m, EngineConfig(strategy=strategy)), m)
    assert verify(factor(px("t - i"), EngineConfig(strategy="planar")), px("t - i"))
    with pytest.raises(ValueError):
        EngineConfig(strategy="magic")
    with pytest.raises(ValueError):
        EngineConfig(mode="complex")


def test_float_mode_engine():
    f = factor_all(W.NO_FACTORIZATION, EngineConfig(mode="float"))
    assert verify(f, W.NO_FACTORIZATION)
    assert isinstance(f.cofactor.lead, float)


# verification and serialization

def test_verify_rejects_tampering():
    f = factor_all(W.M)
    swapped = list(f.factors)
    swapped[0], swapped[1] = swapped[1], swapped[0]
    res = verify(Factorization(f.cofactor, swapped), W.M)
    assert not res and "differs" in res.reason
    assert not verify(Factorization(RPoly([-1]), f.factors), W.M)
    assert not verify(Factorization(RPoly([-1, 0, 1]), f.factors), W.M)
    bogus = Factorization(f.cofactor, [LinearFactor(px("i + eps i").coeffs[0])])
    assert "not a motion" in verify(bogus, W.M).reason


def test_verify_worked_and_vertical_fixtures():
    printed = [W.L1, W.L2, W.L3, W.F1, W.F2, W.F3, W.F4, W.R1, W.R2, DQPoly.linear(W.IT2_H)]
    f = Factorization(W.COFACTOR, [LinearFactor(p.coeffs[0] * -1) for p in printed])
    assert verify(f, W.M)
    g = Factorization(W.VERTICAL_COFACTOR,
                      [LinearFactor(p.coeffs[0] * -1) for p in W.VERTICAL_FACTORS])
    assert verify(g, W.VERTICAL)


def test_linear_factor_kinds():
    assert LinearFactor(px("i").coeffs[0]).kind == "rotation"
    assert LinearFactor(px("1 + eps i").coeffs[0]).kind == "translation"


def test_json_round_trip():
    f = factor_all(W.M, EngineConfig(directions=W.DIRECTIONS))
    obj = json.loads(json.dumps(f.to_json()))
    g = Factorization.from_json(obj)
    assert g.cofactor == f.cofactor and g.hs == f.hs
    assert [s.branch for s in g.trace] == W.BRANCHES
    assert g.trace[1].h_r == W.IT2_H
    obj["kinds"][0] = "translation"
    with pytest.raises(ValueError):
        Factorization.from_json(obj)
    with pytest.raises(ValueError):
        Factorization.from_json({"factors": []})
