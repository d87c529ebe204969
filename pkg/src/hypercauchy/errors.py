"""Exception and warning types raised across the package."""


class HyperCauchyError(Exception):
    """Base class for all package errors."""


class PoleError(HyperCauchyError, ValueError):
    """Gamma (or a derived quantity) evaluated at a pole."""


class DegenerateParams(HyperCauchyError, ValueError):
    """Parameters hit an excluded integer lattice (logarithmic case)."""


class NoConvergence(HyperCauchyError, ArithmeticError):
    pass


class DivisionByZero(HyperCauchyError, ZeroDivisionError):
    pass


class PreconditionViolation(HyperCauchyError, ValueError):
    pass


class OutsideDomain(HyperCauchyError, ValueError):
    pass


class StepFailure(HyperCauchyError, ArithmeticError):
    """ODE continuation could not step (path too close to a singular point)."""


class BasepointInvalid(HyperCauchyError, ValueError):
    pass


class SingularityTooClose(HyperCauchyError, ValueError):
    pass


class NotDegenerate(HyperCauchyError, ValueError):
    pass


class SingularPoint(HyperCauchyError, ValueError):
    """Evaluation requested exactly on a singular point of the function."""


class UniquenessWarning(UserWarning):
    """The Cauchy problem admits null solutions; uniqueness fails."""
