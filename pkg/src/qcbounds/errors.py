"""Exception types raised across the package."""


class StateError(ValueError):
    """Base class for malformed quantum state input."""


class DimensionMismatch(StateError):
    pass


class NotHermitian(StateError):
    pass


class TraceMismatch(StateError):
    pass


class NotPositive(StateError):
    def __init__(self, min_eigenvalue: float):
        self.min_eigenvalue = float(min_eigenvalue)
        super().__init__(f"matrix is not positive semidefinite (min eigenvalue {min_eigenvalue:.3e})")


class NotNormalized(StateError):
    pass


class RankOutOfRange(StateError):
    pass


class SvdFailure(ArithmeticError):
    """SVD did not converge; the input is badly conditioned or contains non-finite entries."""


class NonpositiveLambda(ValueError):
    pass


class RegimeViolation(ValueError):
    pass


class DomainError(ValueError):
    pass


class UnknownOracle(KeyError):
    pass
