"""Exception hierarchy.

Every error carries a stable ``code`` string so the CLI and reports can name
the failure without parsing messages.
"""


class HopfError(Exception):
    code = "HOPF_ERROR"

    def __init__(self, message="", **details):
        super().__init__(message or self.code)
        self.details = details


class FieldMismatch(HopfError):
    code = "FIELD_MISMATCH"


class DivisionByZero(HopfError, ZeroDivisionError):
    code = "DIVISION_BY_ZERO"


class RootUnavailable(HopfError):
    code = "ROOT_UNAVAILABLE"


class IncompatibleExtension(HopfError):
    code = "INCOMPATIBLE_EXTENSION"


class DimMismatch(HopfError, ValueError):
    code = "DIM_MISMATCH"


class AmbientMismatch(DimMismatch):
    code = "AMBIENT_MISMATCH"


class NotInvertible(HopfError):
    code = "NOT_INVERTIBLE"


class ImproperIdeal(HopfError):
    code = "IMPROPER_IDEAL"


class UnsupportedCharacteristic(HopfError):
    code = "UNSUPPORTED_CHARACTERISTIC"


class NotAutomorphism(HopfError):
    code = "NOT_AUTOMORPHISM"


class NotACharacter(HopfError):
    code = "NOT_A_CHARACTER"


class IntegralDimNotOne(HopfError):
    code = "INTEGRAL_DIM_NOT_ONE"


class ConsistencyFailure(HopfError):
    code = "CONSISTENCY_FAILURE"


class OrderInfinite(HopfError):
    code = "ORDER_INFINITE"


class NotHopfIdeal(ConsistencyFailure):
    code = "NOT_HOPF_IDEAL"


class RelatorViolation(ConsistencyFailure):
    code = "RELATOR_VIOLATION"


class InvalidParams(HopfError, ValueError):
    code = "INVALID_PARAMS"


class TruncationUndeclared(HopfError):
    code = "TRUNCATION_UNDECLARED"


class InputError(HopfError, ValueError):
    """Malformed user input; ``path`` names the offending JSON location."""

    code = "INPUT_ERROR"

    def __init__(self, message="", path=None, **details):
        super().__init__(message, path=path, **details)
        self.path = path


class UnsupportedOperation(HopfError):
    code = "UNSUPPORTED"
