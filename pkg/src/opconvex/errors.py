"""Exception types shared across the package."""


class DomainViolation(ValueError):
    """A scalar argument or eigenvalue fell outside a function's domain."""


class HypothesisViolation(ValueError):
    """An input failed a precondition of the inequality being checked.

    Raised when a supplied or generated instance does not satisfy the
    hypotheses of the statement under test (isometry defect too large,
    missing convexity flag, weights outside [0, 1], ...). Inside a
    verification campaign this always signals a generator or caller bug,
    never an inequality failure.
    """


class EigendecompositionError(ValueError):
    """The eigensolver failed to converge on a Hermitian matrix."""

    def __init__(self, dim: int, condition: float, message: str = ""):
        self.dim = int(dim)
        self.condition = float(condition)
        text = f"eigendecomposition failed for dim={dim} (max |entry| = {condition:g})"
        if message:
            text = f"{text}: {message}"
        super().__init__(text)
