"""Exception types shared by the engines."""


class SylowBenchError(Exception):
    pass


class CycleParseError(SylowBenchError, ValueError):
    """Malformed cycle notation. ``position`` is a 0-based column in the input."""

    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class DegreeMismatch(SylowBenchError, ValueError):
    pass


class CapExceeded(SylowBenchError):
    """A brute-force computation would exceed its configured cap.

    ``count`` is how far the computation got (or the size it needs, when known).
    """

    def __init__(self, message, count=None, cap=None):
        super().__init__(message)
        self.count = count
        self.cap = cap


class OrbitCapExceeded(CapExceeded):
    pass


class IndexCapExceeded(CapExceeded):
    pass


class NotASubgroup(SylowBenchError, ValueError):
    pass


class NonDivisorOrder(SylowBenchError, ValueError):
    pass


class PreconditionFailed(SylowBenchError, ValueError):
    pass


class SylowNotPrimeOrder(PreconditionFailed):
    pass


class NotCyclicSylow2(SylowBenchError):
    pass


class NotAbelianSylow(SylowBenchError):
    pass
