"""Exception types shared across the simulator."""


class EmptyCombError(ValueError):
    """An operation would leave a spectrum with no nonzero lines."""


class ScenarioError(ValueError):
    """A scenario document failed parsing or validation."""


class GridMismatchError(ValueError):
    """A frequency is not commensurate with the analysis grid."""
