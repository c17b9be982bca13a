class NatmatError(Exception):
    """Base class for errors raised by natmat."""


class EvenInput(NatmatError, ValueError):
    """An even number was given where an odd tree node is required."""


class LimitExceeded(NatmatError, ValueError):
    pass


class ResourceLimit(NatmatError):
    """The request would exceed a configured work or memory ceiling."""


class ScanExhausted(NatmatError):
    """No prime was found within the configured scan bound."""


class MalformedLine(NatmatError, ValueError):
    def __init__(self, lineno: int, line: str, reason: str = "expected two integer tokens"):
        self.lineno = lineno
        self.line = line
        super().__init__(f"line {lineno}: {reason}: {line!r}")


class NotCached(NatmatError):
    pass


class FetchFailed(NatmatError):
    def __init__(self, url: str, status: int | None = None, reason: str = ""):
        self.url = url
        self.status = status
        detail = f"HTTP {status}" if status is not None else reason
        super().__init__(f"fetching {url} failed: {detail}")


class CoverageGap(NatmatError):
    """The reference b-file stops before the requested bound."""
