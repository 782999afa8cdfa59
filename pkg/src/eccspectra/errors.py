"""Exception types shared across the package."""


class EccSpectraError(ValueError):
    """Base class for all errors raised by eccspectra."""


class InvalidOrderError(EccSpectraError):
    """Vertex count outside the admissible range for a construction."""


class InconsistentParametersError(EccSpectraError):
    """Family parameters that do not describe a valid tree."""


class DisconnectedGraphError(EccSpectraError):
    """Distances or eccentricities requested on a disconnected graph."""


class NotATreeError(EccSpectraError):
    """A tree-only operation received a graph that is not a tree."""


class AsymmetricMatrixError(EccSpectraError):
    """The symmetric eigensolver received a non-symmetric matrix."""
