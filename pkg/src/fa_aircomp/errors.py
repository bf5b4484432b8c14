"""Exception types shared across the package."""


class ConfigurationError(ValueError):
    """Invalid system parameters or a malformed config file."""


class FeasibilityError(ValueError):
    """A constraint set admits no feasible point, or a budget is exceeded."""


class SingularityError(RuntimeError):
    """A linear system that should be positive definite failed to factor."""
