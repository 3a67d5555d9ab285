from ..core.exceptions import MsrlabError


class RequiresTwoParities(MsrlabError):
    pass


class SingularEncodingMatrix(MsrlabError):
    pass


class SystemInvalid(MsrlabError):
    pass


class ConditionsFailed(MsrlabError):
    pass
