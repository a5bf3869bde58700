"""Exception types shared across the package."""


class BrokenPhase(ValueError):
    """Parameters fall in the broken regime (complex-conjugate eigenvalue pair)."""


class ExceptionalPoint(ValueError):
    """Eigenvectors coalesce and normalization diverges (cos(alpha) -> 0)."""


class NonFinite(ArithmeticError):
    """A computation produced NaN or infinity."""


class ZeroOrNegativeNorm(ValueError):
    """A state cannot be normalized because its self-pairing is not positive."""


class NotNormalized(ValueError):
    """An operation that requires unit-norm inputs received something else."""


class DomainError(ValueError):
    """An argument lies outside the operation's documented domain."""
