"""Exception types raised by the library and surfaced by the CLI."""


class TauCongruentError(ValueError):
    """Base class for all domain errors."""


class NonPositiveInput(TauCongruentError):
    pass


class FactorizationLimitExceeded(TauCongruentError):
    """An integer cofactor could not be split within the configured budget."""

    def __init__(self, cofactor, message=None):
        self.cofactor = cofactor
        super().__init__(message or f"could not factor cofactor {cofactor}")


class PoleInput(TauCongruentError):
    pass


class NonIntegralInverseTau(TauCongruentError):
    pass


class DegenerateTriangle(TauCongruentError):
    pass


class InvalidParameter(TauCongruentError):
    pass
