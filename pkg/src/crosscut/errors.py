"""Exception types shared across the library."""


class CrosscutError(Exception):
    """Base class for all library errors."""


class CoincidentPoints(CrosscutError):
    """Two points that must be distinct coincide."""


class ParallelLines(CrosscutError):
    """A required line intersection does not exist.

    Carries the pair of lines (and, where known, a label identifying which
    inner vertex could not be constructed).
    """

    def __init__(self, msg, lines=None, vertex=None):
        super().__init__(msg)
        self.lines = lines
        self.vertex = vertex


class DegenerateFrame(CrosscutError):
    """No cyclic relabeling of the quadrilateral gives three independent
    frame vertices."""


class ZeroArea(CrosscutError):
    """The quadrilateral has zero area."""


class ZeroDenominator(CrosscutError):
    """A closed-form denominator vanishes at the given parameters."""

    def __init__(self, msg, which=None):
        super().__init__(msg)
        self.which = which


class DomainError(CrosscutError):
    """A parameter lies outside the domain of the operation."""


class IdentityFailed(CrosscutError):
    """A polynomial identity check found a nonzero difference.

    ``monomial`` is the leading (graded-lex largest) differing monomial as an
    exponent triple, ``coefficient`` its coefficient in the difference.
    """

    def __init__(self, msg, monomial=None, coefficient=None):
        super().__init__(msg)
        self.monomial = monomial
        self.coefficient = coefficient


class LocusViolation(CrosscutError):
    """An equality-locus check failed at a specific sample point."""

    def __init__(self, msg, point=None):
        super().__init__(msg)
        self.point = point


class InputError(CrosscutError):
    """Malformed user input (documents, rationals, flags)."""
