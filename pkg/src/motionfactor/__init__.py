"""Exact factorization of bounded motion polynomials into linear rotation factors."""
from .algebra import (
    EPS,
    I,
    J,
    K,
    ONE,
    DualNumber,
    DualQuaternion,
    Quaternion,
    get_tolerance,
    scalar,
    tolerance,
)
from .errors import *  # noqa: F401,F403
from .factor import (
    EngineConfig,
    Factorization,
    LinearFactor,
    TraceStep,
    VerifyResult,
    factor,
    factor_all,
    factor_i,
    gfactor,
    linear_right_factor,
    pfactor,
    verify,
)
from .kinematics import (
    ComplexityTriple,
    MotionPoly,
    Point,
    apply,
    complexity,
    in_planar_group,
    is_bounded,
    is_generic,
    is_planar,
    reparameterize,
    trajectory,
    validate_motion,
)
from .polyring import DQPoly, QPoly, RPoly, grpf, quadratic_factors, real_gcd
from .roots import RootSphere, common_root, flip_root, quad_roots

__version__ = "0.1.0"
