class SpecGapError(Exception):
    """Base exception class for specgap errors."""

    pass


class InvalidInputError(SpecGapError):
    """Raised when invalid input is provided."""

    pass


class ConfigurationError(SpecGapError):
    """Raised when there's a configuration problem."""

    pass


# Graph core


class LoopEdgeError(SpecGapError):
    """Raised when an edge joins a vertex to itself."""

    pass


class IndexOutOfRangeError(SpecGapError):
    """Raised when an edge endpoint is not a vertex of the graph."""

    pass


class Graph6FormatError(SpecGapError):
    """Raised when a graph6 string cannot be decoded."""

    pass


# Blocks and assemblies


class UnknownKindError(SpecGapError):
    """Raised when a catalog tag or gadget name is not known."""

    pass


class IncompatibleAttachmentError(SpecGapError):
    """Raised when neighbouring blocks cannot be glued at a cut vertex."""

    pass


class NotQuarticAfterGlueError(SpecGapError):
    """Raised when a glued graph is not 4-regular."""

    pass


class OrderTooSmallError(SpecGapError):
    """Raised when a family is requested below its smallest order."""

    pass


class GrammarViolationError(SpecGapError):
    """Raised when a brick sequence does not form a long block."""

    pass


# Spectra


class ConvergenceFailureError(SpecGapError):
    """Raised when the eigensolver fails to converge."""

    pass


class ZeroVectorError(SpecGapError):
    """Raised when a Rayleigh quotient is requested for the zero vector."""

    pass


class ConstantVectorError(SpecGapError):
    """Raised when the shifted bound is requested for a constant vector."""

    pass


class NotRegularError(SpecGapError):
    """Raised when a regular graph is required."""

    pass


class DisconnectedError(SpecGapError):
    """Raised when a connected graph is required."""

    pass


# Structure


class NotAPartitionError(SpecGapError):
    """Raised when cells are not a partition of the vertex set."""

    pass


class DimensionMismatchError(SpecGapError):
    """Raised when a vector length does not match the graph order."""

    pass


class NotPalindromicError(SpecGapError):
    """Raised when an assembly is not its own mirrored reverse."""

    pass


# Replacement


class FitViolatedError(SpecGapError):
    """Raised when a fit witness fails one of the fit conditions."""

    pass


class CellNotConstantError(SpecGapError):
    """Raised when a Fiedler vector is not constant on a replaced cell."""

    pass


class SearchSpaceExceededError(SpecGapError):
    """Raised when a fit partition search exceeds its node budget."""

    pass


class UnknownFormulaError(SpecGapError):
    """Raised when a formula name is not in the catalog."""

    pass


class MuOutOfRangeError(SpecGapError):
    """Raised when mu lies outside the range a formula is valid for."""

    pass


class GadgetNotFoundError(SpecGapError):
    """Raised when a host graph does not contain the requested gadget."""

    pass


class HypothesisUnmetError(SpecGapError):
    """Raised when a lemma hypothesis does not hold on a host."""

    pass


# Polynomials and census


class ClaimMismatchError(SpecGapError):
    """Raised when an isolated root disagrees with its quoted value."""

    pass


class OrderCapExceededError(SpecGapError):
    """Raised when an enumeration is requested beyond the supported order."""

    pass
