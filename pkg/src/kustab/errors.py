"""Exception hierarchy.

Every error raised for a mathematically invalid request derives from
:class:`DomainError`; the CLI maps those to exit code 1.
"""


class DomainError(Exception):
    """Base class for domain errors (bad region, singular matrix, ...)."""


class SingularMatrix(DomainError):
    pass


class IncompatibleRadicands(DomainError):
    pass


class UnsupportedGenus(DomainError):
    pass


class UnknownObject(DomainError):
    pass


class MissingCh3(DomainError):
    pass


class MissingTodd(DomainError):
    pass


class ZeroClass(DomainError):
    pass


class NonPositiveAlphaSq(DomainError):
    pass


class OutsideRegion(DomainError):
    pass


class NegativeDenominator(DomainError):
    pass


class ZeroOverZero(DomainError):
    pass


class NoRealIntersection(DomainError):
    pass


class VerticalLine(DomainError):
    pass


class NotInLattice(DomainError):
    pass


class SingularCharge(DomainError):
    pass


class NotOrientationPreserving(DomainError):
    pass


class EmptyWindow(DomainError):
    pass
