"""Exception types shared across the package."""


class RegindepError(Exception):
    """Base class for all package-specific errors."""


class FormatError(RegindepError):
    """Malformed graph6 or edge-list input."""


class CapExceededError(RegindepError):
    """A configured size cap or search budget would be exceeded."""


class FamilyParameterError(RegindepError):
    """Generator parameters outside the family's valid range."""


class TntRecipeError(FamilyParameterError):
    """The canonical diameter-spider recipe is inconsistent for these parameters.

    Carries a ``report`` dict describing what the recipe produced versus
    what the target profile requires.
    """

    def __init__(self, message: str, report: dict):
        super().__init__(message)
        self.report = report


class UnsupportedShapeError(RegindepError):
    """Part-size multiset outside the shapes the closed forms cover."""


class ShapeCheckError(RegindepError):
    """Input graph fails a structural predicate required by a bound."""
