"""Exception hierarchy shared by all modules."""


class MotionFactorError(Exception):
    """Base class for every error raised by this package."""


class NotInvertible(MotionFactorError, ZeroDivisionError):
    """A dual quaternion with vanishing primal part has no inverse."""


class NotMonic(MotionFactorError, ValueError):
    pass


class HasRealRoot(MotionFactorError, ValueError):
    pass


class IrrationalFactor(MotionFactorError, ValueError):
    """A quadratic factor has no rational coefficients (exact mode only)."""


class IrrationalRoot(MotionFactorError, ValueError):
    """The requested point on a root sphere is not rational (exact mode only)."""


class ExactRootUnavailable(MotionFactorError):
    """No rational quaternion root was found within the search bound.

    Rerunning with float scalars avoids this.
    """


class NonUniqueRoot(MotionFactorError):
    """The linear remainder has a non-invertible leading coefficient."""


class GcdViolation(MotionFactorError, ValueError):
    pass


class NotMotion(MotionFactorError, ValueError):
    pass


class NotInvertibleLead(NotMotion):
    pass


class NotGeneric(MotionFactorError, ValueError):
    pass


class NotBounded(MotionFactorError, ValueError):
    def __init__(self, message="motion polynomial is not bounded; "
                 "reparameterize it first (see kinematics.reparameterize)"):
        super().__init__(message)


class NotPlanar(MotionFactorError, ValueError):
    pass


class InternalDescentViolation(MotionFactorError, AssertionError):
    """The complexity triple failed to decrease; indicates a bug."""


class SingularParameter(MotionFactorError, ValueError):
    pass


class ParseError(MotionFactorError, ValueError):
    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
