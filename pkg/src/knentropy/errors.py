"""Exception types shared across the package."""


class ParameterError(ValueError):
    """Invalid deformation/order parameter or KN-function parameter."""


class DomainError(ValueError):
    """Argument outside the mathematical domain of an operation."""


class InfiniteInformationError(DomainError):
    """Single-event information requested for a zero-probability event."""


class DistributionError(ValueError):
    """Data does not form a valid probability mass function."""


class FormatError(ValueError):
    """Input text could not be parsed as a distribution file."""


class InfeasibleConstraintError(ValueError):
    """Constrained search has an empty feasible set."""
