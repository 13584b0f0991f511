"""Exception hierarchy.

Every domain error derives from :class:`ReflexiveError`; the CLI maps that
base class to exit code 1 and :class:`ParseError` / usage problems to 2.
"""


class ReflexiveError(Exception):
    """Base class for domain errors raised by this package."""


class NoPositiveRelation(ReflexiveError):
    pass


class NotFullDimensional(ReflexiveError):
    pass


class OriginNotInterior(ReflexiveError):
    pass


class NonPrimitiveNormal(ReflexiveError):
    pass


class NotStronglyConvex(ReflexiveError):
    pass


class FanNotComplete(ReflexiveError):
    pass


class NotGorenstein(ReflexiveError):
    pass


class NotAdmissible(ReflexiveError):
    pass


class MalformedTriangulation(ReflexiveError):
    pass


class NotReflexive(ReflexiveError):
    pass


class DimensionTooHigh(ReflexiveError):
    pass


class DimensionBelowFour(ReflexiveError):
    pass


class DimensionNotFour(ReflexiveError):
    pass


class NotAMorphism(ReflexiveError):
    pass


class NotASimplex(ReflexiveError):
    pass


class DegreesNotUnit(ReflexiveError):
    pass


class UnsupportedDimension(ReflexiveError):
    pass


class InvariantViolation(ReflexiveError):
    """An internal cross-check between two independent derivations failed."""


class ParseError(ReflexiveError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class StoreCorrupt(ReflexiveError):
    def __init__(self, message, line=None):
        self.line = line
        super().__init__(message if line is None else f"line {line}: {message}")
