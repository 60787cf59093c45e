"""Exception types shared across the package."""


class NdgError(Exception):
    """Base class for every error raised by ndgtool."""


# scalars
class NotAField(NdgError):
    pass


class NoPrimitiveRoot(NdgError):
    pass


class BadRoot(NdgError):
    pass


class OutOfRange(NdgError):
    pass


# linalg
class FieldMismatch(NdgError):
    pass


class ShapeError(NdgError):
    pass


class NotContained(NdgError):
    pass


# complexes
class NotNDifferential(NdgError):
    def __init__(self, degree, message=None):
        self.degree = degree
        super().__init__(message or f"d^N != 0 starting at degree {degree}")


class NotChainMap(NdgError):
    pass


class NotAcyclic(NdgError):
    pass


class NotATriangle(NdgError):
    pass


# categories and modules
class AxiomViolation(NdgError):
    """An axiom check failed; ``witness`` names the offending basis elements."""

    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message if witness is None else f"{message} (witness {witness})")


class LeibnizViolation(AxiomViolation):
    pass


class AssocViolation(AxiomViolation):
    pass


class UnitViolation(AxiomViolation):
    pass


class UnknownObject(NdgError):
    pass


class BaseMismatch(NdgError):
    pass


# cli
class ParseError(NdgError):
    pass


class ValidationError(NdgError):
    pass


class UnknownName(NdgError):
    pass


class BadArguments(NdgError):
    pass


class UnknownSuite(NdgError):
    pass
