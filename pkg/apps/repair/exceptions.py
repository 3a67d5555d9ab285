from ..core.exceptions import MsrlabError


class SchemeInvalid(MsrlabError):
    pass


class InconsistentNodeData(MsrlabError):
    pass
