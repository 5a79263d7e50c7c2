"""Shared exception types."""


class OffShellError(ValueError):
    """Four-momentum violates the mass-shell requirement of the operation."""


class NotASolutionError(ValueError):
    """Input was required to solve an equation but its residual is too large."""
