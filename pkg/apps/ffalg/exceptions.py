from ..core.exceptions import MsrlabError


class FieldSpecError(MsrlabError):
    pass


class NonPrimeCharacteristic(FieldSpecError):
    pass


class ReduciblePolynomial(FieldSpecError):
    pass


class MissingReduction(FieldSpecError):
    pass


class FieldTooLarge(FieldSpecError):
    pass


class FieldMismatch(MsrlabError):
    pass


class ShapeMismatch(MsrlabError):
    pass


class DimensionMismatch(ShapeMismatch):
    pass


class AmbientMismatch(MsrlabError):
    pass


class SingularMatrix(MsrlabError):
    pass


class NotInRowSpace(MsrlabError):
    pass
