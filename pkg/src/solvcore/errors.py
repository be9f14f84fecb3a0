class SolvcoreError(Exception):
    pass


class AlphabetError(SolvcoreError, ValueError):
    """A letter lies outside the alphabet of the group or word."""


class ParseError(SolvcoreError, ValueError):
    def __init__(self, message, text="", position=None):
        self.text = text
        self.position = position
        if position is not None:
            message = f"{message} at position {position}: {text!r}"
        super().__init__(message)


class UnsupportedError(SolvcoreError):
    """The requested operation is not available for this group."""


class VerificationError(SolvcoreError, AssertionError):
    """An algorithm produced an answer that failed its own check. Always a bug."""


class NotAbelianError(SolvcoreError, ValueError):
    pass


class NotInImageError(SolvcoreError, ValueError):
    pass


class SizeExceededError(SolvcoreError, ValueError):
    pass
