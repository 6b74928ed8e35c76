class RigidityLabError(Exception):
    """Base class of every error raised by rigidity_lab"""


class PartialOverlap(RigidityLabError, ValueError):
    """Vertex sets passed to induced_pair are neither equal nor disjoint"""


class SameVertex(RigidityLabError, ValueError):
    pass


class NonFinite(RigidityLabError, ValueError):
    pass


class IndexOutOfRange(RigidityLabError, IndexError):
    pass


class TooFewVertices(RigidityLabError, ValueError):
    """A d-dimensional rigidity question needs at least d+1 vertices"""


class EmptyGraph(RigidityLabError, ValueError):
    pass


class InvalidCertificate(RigidityLabError):
    """A cut hierarchy node whose split is not monochromatic"""


class EdgeDeficit(RigidityLabError):
    """Fewer coloured edges than d*n - C(d+1, 2)"""


class StructuralError(RigidityLabError, ValueError):
    """Malformed partition: overlapping parts, foreign edges, bad colour keys"""


class TooLarge(RigidityLabError, ValueError):
    pass


class InvalidSource(RigidityLabError, ValueError):
    """A converter source (strong partition, CDS family) failed its own verification"""


class InfeasibleScores(RigidityLabError, ValueError):
    """Score sequence violates Landau's condition"""


class UnequalClasses(RigidityLabError, ValueError):
    pass


class ConditionViolated(RigidityLabError, ValueError):
    """(m, n, d) outside m, n >= d+1 and m+n >= C(d+2, 2)"""


class NotRegular(RigidityLabError, ValueError):
    pass


class ParityError(RigidityLabError, ValueError):
    pass


class TooManyEdges(RigidityLabError, ValueError):
    pass


class RejectionCapExceeded(RigidityLabError):
    pass


class NoSeedClique(RigidityLabError):
    pass


class SchemaViolation(RigidityLabError, ValueError):
    pass
