from ..core.exceptions import MsrlabError


class InvalidParams(MsrlabError):
    pass


class NonPowerOfTwo(InvalidParams):
    pass


class BoundViolated(MsrlabError):
    pass
