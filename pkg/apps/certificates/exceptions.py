from ..core.exceptions import LimitExceeded, MsrlabError


class CertificateError(MsrlabError):
    pass


class IndexOutOfRange(CertificateError):
    pass


class OverlappingSets(CertificateError):
    pass


class PairsNotComplementary(CertificateError):
    pass


class PairsOverlap(CertificateError):
    pass


class IndexClash(CertificateError):
    pass


class PartitionInvalid(CertificateError):
    pass


class SumNotFull(CertificateError):
    pass


class UnequalParts(PartitionInvalid):
    pass


class TooLarge(LimitExceeded):
    pass


class CounterexampleFound(MsrlabError):
    """A family that should be independent is not

    The payload holds the complete family so it can be inspected offline.
    """


class HypothesisFailed(CertificateError):
    pass
