"""Exception types shared across the package."""


class GroupDualError(Exception):
    """Base class for all library errors."""


class InvalidTable(GroupDualError):
    """A multiplication table fails the group axioms."""


class ParseError(GroupDualError):
    """A group descriptor or CLI argument cannot be parsed."""


class GroupMismatch(GroupDualError):
    """Operands belong to different groups."""


class DecompositionFailed(GroupDualError):
    """The randomized splitting could not separate an invariant subspace."""


class LayoutMismatch(GroupDualError):
    """Block effects with different block layouts were combined."""


class DimMismatch(GroupDualError):
    """Matrix dimensions do not match."""


class SpaceMismatch(GroupDualError):
    """Points of different convex spaces were combined."""


class NotAnEffect(GroupDualError):
    """A matrix is not Hermitian with spectrum inside [0, 1]."""


class NotIntertwining(GroupDualError):
    """An operator does not commute with the left regular action."""


class CatalogMismatch(GroupDualError):
    """A point or state does not match the irreducible catalog it is used with."""


class NotAState(GroupDualError):
    """A functional fails normalization or the positivity certificate."""


class SingularSystem(GroupDualError):
    """The Fourier system is singular, which signals a corrupted catalog."""


class UnrecognizedMonoid(GroupDualError):
    """The convex monoid is not one of the recognized constructions."""


class MalformedReport(GroupDualError):
    """A report file does not have the expected schema."""
