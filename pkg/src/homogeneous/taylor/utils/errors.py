#  Copyright 2026 homogeneous-taylor contributors.


class HomTaylorError(Exception):
    """
    Base class for every error raised by this package.
    """


class ShapeError(HomTaylorError, ValueError):
    """
    Orders, dimensions or index arities of the operands do not line up.
    """


class SizeGuardError(HomTaylorError, ValueError):
    """
    A dimension or order exceeds the dense-storage guards.
    """


class DomainError(HomTaylorError, ValueError):
    """
    A point, segment or jet constant term lies outside the smooth domain.
    """


class SpecError(HomTaylorError, ValueError):
    """
    A function or portfolio specification is invalid or malformed.
    """


class DegreeMismatchError(HomTaylorError, ValueError):
    """
    The declared homogeneity degree does not match the requested order.
    """


class NotPositiveDefiniteError(SpecError):
    """
    A matrix that must be symmetric positive definite is not.
    """
