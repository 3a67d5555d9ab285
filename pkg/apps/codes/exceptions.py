from ..core.exceptions import LimitExceeded, MsrlabError
from ..ffalg.exceptions import ShapeMismatch


class InvalidParams(MsrlabError):
    pass


class TooManySubsets(LimitExceeded):
    pass


class SingularSystem(MsrlabError):
    pass


class InvalidNodeSet(ShapeMismatch):
    pass
