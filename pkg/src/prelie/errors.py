"""Exception hierarchy shared across the package."""


class PreLieError(Exception):
    """Base class for all errors raised by this package."""


class OrderMismatchError(PreLieError):
    """Two power series with different truncation orders were combined."""


class CompositionDomainError(PreLieError):
    """Series composition requires the inner series to have zero constant term."""


class SeriesOrderError(PreLieError):
    """A series operation needs a higher truncation order than provided."""


class NonIntegerCountError(PreLieError):
    """An EGF coefficient times n! failed to be an integer."""


class TreeParseError(PreLieError):
    """Tree literal does not conform to the grammar.

    Carries the 0-based ``position`` in the input where parsing failed.
    """

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class DuplicateLabelError(PreLieError):
    """A labelled tree used the same label twice."""


class UnknownSlotError(PreLieError):
    """Composition addressed a label that is not a vertex of the tree."""


class InvalidSlotError(PreLieError):
    """Composition addressed a vertex that is not a valid slot."""


class LabelCollisionError(PreLieError):
    """Two trees that must have disjoint labels share a label."""


class LabelMismatchError(PreLieError):
    """A block tree does not use exactly the labels of its block."""


class ResourceLimitError(PreLieError):
    """An enumeration or computation exceeded its configured bound."""
