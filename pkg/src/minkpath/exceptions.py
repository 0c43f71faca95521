class MinKPathError(Exception):
    """Base class for solver errors."""


class MalformedTree(MinKPathError, ValueError):
    pass


class ParseError(MinKPathError, ValueError):
    def __init__(self, line: int, reason: str):
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason


class RangeError(MinKPathError, ValueError):
    pass


class LimitExceeded(MinKPathError):
    pass


class OracleFailure(MinKPathError):
    """The amplified solver gave answers that cannot all be right."""


class RecoveryFailed(MinKPathError):
    """Every trial of a vertex-deletion round was rejected."""


class ExtractionFailed(MinKPathError):
    pass
