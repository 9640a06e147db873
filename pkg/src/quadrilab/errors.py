"""Exception hierarchy.

Domain failures derive from :class:`GeometryError`; malformed polynomial
input derives from :class:`ParseError`.  The CLI maps the two families to
different exit codes.
"""


class GeometryError(ValueError):
    """A well-formed request that has no answer for the given geometry."""


class AllZero(GeometryError):
    pass


class NonFinite(GeometryError):
    pass


class NoConvergence(GeometryError):
    pass


class DegenerateInput(GeometryError):
    pass


class NotCentral(GeometryError):
    pass


class NotOnSurface(GeometryError):
    pass


class SingularPoint(GeometryError):
    pass


class NotConoid(GeometryError):
    pass


class NotTangent(GeometryError):
    def __init__(self, message, section_class=None):
        super().__init__(message)
        self.section_class = section_class


class NotEllipsoid(GeometryError):
    pass


class NotRuled(GeometryError):
    pass


class NoRealBeta(GeometryError):
    pass


class NonPositiveParameter(GeometryError):
    pass


class DegenerateConic(GeometryError):
    pass


class InsufficientSections(GeometryError):
    pass


class RevolutionSpecial(GeometryError):
    pass


class NoValidChord(GeometryError):
    pass


class DegenerateApex(GeometryError):
    pass


class IsoscelesApex(GeometryError):
    pass


class ClauseMismatch(GeometryError):
    pass


class NotOblique(GeometryError):
    pass


class OpenSection(GeometryError):
    pass


class GeneratorMiss(GeometryError):
    pass


class NoParametrization(GeometryError):
    pass


class ParseError(ValueError):
    """Base for polynomial input errors; carries the offending position."""

    def __init__(self, message, position=None, expected=()):
        self.position = position
        self.expected = tuple(expected)
        detail = message
        if position is not None:
            detail += f" at position {position}"
        if self.expected:
            detail += f" (expected one of: {', '.join(self.expected)})"
        super().__init__(detail)


class PolynomialSyntaxError(ParseError):
    pass


class DegreeError(ParseError):
    pass


class UnknownVariable(ParseError):
    pass
