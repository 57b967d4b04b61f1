"""Exception types shared across the package."""


class ChaoseqError(Exception):
    """Base class for all library errors."""


class CapacityExceeded(ChaoseqError):
    """A requested size is beyond the supported ceiling."""

    def __init__(self, requested: int, ceiling: int, what: str = "count"):
        self.requested = requested
        self.ceiling = ceiling
        super().__init__(f"{what} {requested} exceeds ceiling {ceiling}")


class TooShort(ChaoseqError):
    """Input sequence is too short for the requested operation."""


class ZeroDenominator(ChaoseqError):
    """A consecutive difference of the source is zero.

    `index` is the 0-based position k of the second element of the
    offending pair, i.e. source[k] == source[k-1].
    """

    def __init__(self, index: int):
        self.index = index
        super().__init__(f"zero denominator: source[{index}] equals source[{index - 1}]")


class EmptyInput(ChaoseqError):
    """A transform was requested on zero samples."""


class EmptyData(ChaoseqError):
    """A plot was requested with no points to draw."""


class UnknownFigure(ChaoseqError):
    """Figure name is not one of fig1..fig9."""


class SinkFailure(ChaoseqError):
    """Writing to an output sink failed."""
