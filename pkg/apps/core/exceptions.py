class MsrlabError(Exception):
    """Root of every domain error raised by msrlab

    `payload` holds machine-readable details that reports serialize verbatim.
    """
    def __init__(self, message='', payload=None):
        super().__init__(message)
        self.message = message
        self.payload = payload or {}


class LimitExceeded(MsrlabError):
    pass
