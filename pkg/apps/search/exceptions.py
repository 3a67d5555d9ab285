from ..core.exceptions import LimitExceeded, MsrlabError


class NoSchemeExists(MsrlabError):
    pass


class BudgetExhausted(MsrlabError):
    pass


class TooLarge(LimitExceeded):
    pass


class WitnessRejected(MsrlabError):
    pass


class InvalidConfig(MsrlabError):
    pass
