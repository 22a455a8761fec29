"""Exception types shared across the package."""


class CapacityError(ValueError):
    """Requested register exceeds the dense-method size cap (12 qubits)."""


class SingularBlockError(ValueError):
    """Closed forms are undefined at w = sqrt(x^2 + y^2) = 0; use the
    numerical engine instead."""


class NumericError(ArithmeticError):
    """A formula produced a value outside its tolerance band (e.g. a
    radicand below -1e-10), pointing at a transcription bug rather than
    round-off."""


class ConvergenceError(RuntimeError):
    """Optimizer failed to converge; carries the best candidate found."""

    def __init__(self, message, best=None):
        super().__init__(message)
        self.best = best
