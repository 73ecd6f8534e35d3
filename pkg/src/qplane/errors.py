"""Exception types shared across the package.

DomainError covers numerical domain violations (pole hits, branch-cut
arguments, precondition failures); the CLI maps it to exit code 2.
"""


class DomainError(ValueError):
    """Argument outside the numerical domain of an operation (pole, cut, strip)."""


class PoleError(DomainError):
    """Evaluation point is on (or numerically indistinguishable from) a pole."""


class QuadratureError(RuntimeError):
    """Quadrature failed to reach the requested tolerance within budget."""
