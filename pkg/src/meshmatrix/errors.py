"""Exception types raised by the library."""


class MeshError(Exception):
    """Base class for all library errors."""


class NotConnected(MeshError, ValueError):
    pass


class UnknownEdge(MeshError, KeyError):
    pass


class LoopContraction(MeshError, ValueError):
    pass


class NotSpanningTree(MeshError, ValueError):
    pass


class NotCotreeEdge(MeshError, ValueError):
    pass


class NotType3(MeshError, ValueError):
    pass


class HostMismatch(MeshError, ValueError):
    pass


class NonSquare(MeshError, ValueError):
    pass


class NonSymmetric(MeshError, ValueError):
    pass


class SignUndetermined(MeshError, ValueError):
    """No cotree edge supports both tree edges, so the sign carries no information."""


class SignInconsistent(MeshError, ArithmeticError):
    """Qualifying cotree edges disagree on the sign of a Laplacian entry."""


class ImproperPartition(MeshError, ValueError):
    pass


class InvalidComplex(MeshError, ValueError):
    pass


class NotSpanningForest(MeshError, ValueError):
    pass


class TooLarge(MeshError, ValueError):
    """Exhaustive enumeration requested beyond the supported size."""


class ParseError(MeshError, ValueError):
    pass
