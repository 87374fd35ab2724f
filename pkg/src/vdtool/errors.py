"""Exception types shared across the package."""


class VdtoolError(Exception):
    """Base class for all package errors."""


class VerticalPlane(VdtoolError):
    """A plane parallel to the z-axis was used where a z-solvable plane is required."""


class VerticalFacet(VdtoolError):
    """A region facet is parallel to the z-axis where that is not allowed."""


class ParseError(VdtoolError):
    """Malformed input file; message names the offending field."""


class InvariantError(VdtoolError):
    """A structural invariant of a loaded or constructed object is violated."""


class PerturbationFailed(VdtoolError):
    """Seeded perturbation retries exhausted without reaching general position."""


class DegenerateCell(VdtoolError):
    """Cell violates the general-position requirements of the decomposition."""


class DegenerateInput(VdtoolError):
    """Input configuration is degenerate for the requested operation."""


class NoCrossing(VdtoolError):
    """split was requested for a region that does not cross the prism interior."""


class GeneralPositionError(VdtoolError):
    """Scene failed the general-position checklist."""


class OutOfBounds(VdtoolError):
    """Query point lies outside the scene bounding box."""


class RetryBudgetExceeded(VdtoolError):
    """Las Vegas retry loop exhausted its attempt budget."""


class RebuildBudgetExceeded(VdtoolError):
    """Index rebuild loop exhausted its attempt budget."""


class TooLarge(VdtoolError):
    """Instance exceeds the size precondition of a brute-force oracle."""


class MixedFamilies(VdtoolError):
    """Trivariate functions from different families in one instance."""


class LabelMismatch(VdtoolError):
    """Prism label does not match the requested function id."""
