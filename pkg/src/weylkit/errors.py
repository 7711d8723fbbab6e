"""Exception hierarchy shared by all weylkit modules."""


class WeylkitError(Exception):
    pass


class UnsupportedType(WeylkitError):
    pass


class NotSymmetrizable(WeylkitError):
    pass


class InvalidCartan(WeylkitError):
    """Raised when a Cartan matrix fails validation at construction time."""


class UnrecognizedDiagram(WeylkitError):
    pass


class DimensionMismatch(WeylkitError, ValueError):
    pass


class NonTerminating(WeylkitError):
    """Root closure grew past its cap; the input is probably not of finite type."""


class NotDiagramSymmetry(WeylkitError):
    pass


class NotARealRoot(WeylkitError):
    pass


class NotALatticeTranslation(WeylkitError):
    pass


class NotQuasiWithinCap(WeylkitError):
    pass


class SearchBudgetExceeded(WeylkitError):
    pass


class IncompleteVerification(WeylkitError):
    pass


class FixtureVerificationFailed(WeylkitError):
    def __init__(self, label: str, detail: str = ""):
        self.label = label
        self.detail = detail
        super().__init__(f"{label}: {detail}" if detail else label)


class ParseError(WeylkitError, ValueError):
    def __init__(self, message: str, text: str = "", position: int | None = None):
        self.text = text
        self.position = position
        if position is not None:
            message = f"{message} at position {position} in {text!r}"
        super().__init__(message)
