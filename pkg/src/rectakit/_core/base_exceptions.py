"""Base exception hierarchy for all rectakit operations."""

from typing import Optional, Dict, Any


class RectakitError(Exception):
    """Base exception for all rectakit errors.

    Every subclass carries a stable machine-readable ``code`` that the CLI
    echoes in reports, plus a ``details`` dict with the offending values.
    """

    code: str = "RECTAKIT_ERROR"

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None) -> None:
        super().__init__(message)
        self.message = message
        self.details = details or {}

    def __str__(self) -> str:
        parts = [self.message, f"Code: {self.code}"]
        for key, value in self.details.items():
            parts.append(f"{key}: {value}")
        return " | ".join(parts)


class DimensionTooLargeError(RectakitError):
    """A codeword enumeration would exceed the configured dimension cap."""

    code = "DIMENSION_TOO_LARGE"

    def __init__(self, dimension: int, limit: int) -> None:
        super().__init__(f"Code dimension {dimension} exceeds the enumeration limit {limit}", {"dimension": dimension, "limit": limit})
        self.dimension = dimension
        self.limit = limit


class QuotientTooLargeError(RectakitError):
    """A quotient space or coset graph is too large to materialize."""

    code = "QUOTIENT_TOO_LARGE"

    def __init__(self, codimension: int, limit: int, what: str = "coset space") -> None:
        super().__init__(f"Cannot materialize {what} of codimension {codimension} (limit {limit})", {"codimension": codimension, "limit": limit})
        self.codimension = codimension
        self.limit = limit


class LengthMismatchError(RectakitError):
    """Vectors, codes or permutations of incompatible lengths were combined."""

    code = "LENGTH_MISMATCH"

    def __init__(self, expected: int, actual: int, what: str = "length") -> None:
        super().__init__(f"Expected {what} {expected}, got {actual}", {"expected": expected, "actual": actual})
        self.expected = expected
        self.actual = actual


class LoopsError(RectakitError):
    """The coset graph would have loops because some unit vector lies in the code."""

    code = "LOOPS"

    def __init__(self, coordinates: list[int]) -> None:
        super().__init__(f"Unit vectors of coordinates {coordinates} lie in the code", {"coordinates": coordinates})
        self.coordinates = coordinates


class DisconnectedError(RectakitError):
    """An operation that needs a connected graph received a disconnected one."""

    code = "DISCONNECTED"

    def __init__(self, components: int) -> None:
        super().__init__(f"Graph has {components} connected components", {"components": components})
        self.components = components


class TooLargeError(RectakitError):
    """An exhaustive graph search was requested on too many vertices."""

    code = "TOO_LARGE"

    def __init__(self, vertices: int, limit: int, what: str = "search") -> None:
        super().__init__(f"{what} on {vertices} vertices exceeds the limit {limit}", {"vertices": vertices, "limit": limit})
        self.vertices = vertices
        self.limit = limit


class NotTransitiveError(RectakitError):
    """A rank was requested for an intransitive action."""

    code = "NOT_TRANSITIVE"

    def __init__(self, orbits: int) -> None:
        super().__init__(f"Action has {orbits} orbits, expected a transitive action", {"orbits": orbits})
        self.orbits = orbits


class NotAutomorphismError(RectakitError):
    """A coordinate permutation does not preserve the code."""

    code = "NOT_AUTOMORPHISM"

    def __init__(self, generator: int) -> None:
        super().__init__(f"Generator {generator} does not preserve the code", {"generator": generator})
        self.generator = generator


class NotEvenError(RectakitError):
    """The even-coset restriction was requested for a code with odd-weight words."""

    code = "NOT_EVEN"

    def __init__(self) -> None:
        super().__init__("Restriction to even cosets requires an even code")


class HypothesesFailError(RectakitError):
    """The input does not satisfy the hypotheses of the requested certificate."""

    code = "HYPOTHESES_FAIL"

    def __init__(self, reason: str, details: Optional[Dict[str, Any]] = None) -> None:
        super().__init__(f"Hypotheses not satisfied: {reason}", details)
        self.reason = reason


class InconsistentCoveringError(RectakitError):
    """Quadrangle closure produced a map that is not a covering."""

    code = "INCONSISTENT"

    def __init__(self, reason: str, cube_vertex: int, coordinates: tuple[int, ...] = ()) -> None:
        super().__init__(f"Covering construction is inconsistent: {reason}", {"cube_vertex": cube_vertex, "coordinates": list(coordinates)})
        self.reason = reason
        self.cube_vertex = cube_vertex
        self.coordinates = coordinates


class NonLinearKernelError(RectakitError):
    """The fibre of the base vertex is not a subspace."""

    code = "NON_LINEAR_KERNEL"

    def __init__(self, fibre_size: int, rank: int) -> None:
        super().__init__(f"Fibre of size {fibre_size} spans a space of dimension {rank}", {"fibre_size": fibre_size, "rank": rank})
        self.fibre_size = fibre_size
        self.rank = rank


class NotLocallyTriangularError(RectakitError):
    """Some vertex neighbourhood is not a triangular graph."""

    code = "NOT_LOCALLY_TRIANGULAR"

    def __init__(self, vertex: int) -> None:
        super().__init__(f"Neighbourhood of vertex {vertex} is not triangular", {"vertex": vertex})
        self.vertex = vertex


class NotAutomorphismGroupError(RectakitError):
    """A group generator does not act as a graph automorphism."""

    code = "NOT_AUTOMORPHISM_GROUP"

    def __init__(self, generator: int, edge: Optional[tuple[int, int]] = None) -> None:
        details: Dict[str, Any] = {"generator": generator}
        if edge is not None:
            details["edge"] = list(edge)
        super().__init__(f"Generator {generator} is not an automorphism of the graph", details)
        self.generator = generator
        self.edge = edge


class InvalidFormatError(RectakitError):
    """An input file does not follow its documented format."""

    code = "INVALID_FORMAT"

    def __init__(self, what: str, line: int, reason: str) -> None:
        super().__init__(f"Invalid {what} at line {line}: {reason}", {"line": line})
        self.what = what
        self.line = line
        self.reason = reason


class RegistryVerificationError(RectakitError):
    """Embedded generator data failed its load-time verification."""

    code = "REGISTRY_VERIFICATION"

    def __init__(self, group: str, reason: str) -> None:
        super().__init__(f"Registry group {group} failed verification: {reason}", {"group": group})
        self.group = group
