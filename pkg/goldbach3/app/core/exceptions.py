"""Error hierarchy shared by services and the CLI.

Each error carries the process exit code the CLI reports for it.
"""


class Goldbach3Error(Exception):
    """Base error for goldbach3."""

    exit_code: int = 1

    def __init__(self, detail: str):
        super().__init__(detail)
        self.detail = detail


class InvalidArgumentError(Goldbach3Error):
    """A precondition on the arguments was violated."""

    exit_code = 2


class OutOfRangeError(InvalidArgumentError):
    """An argument lies beyond the range covered by a table or oracle."""


class ImpossibleRequestError(Goldbach3Error):
    """The request asks for an object that provably does not exist."""

    exit_code = 3


class CapacityError(Goldbach3Error):
    """A configured memory or oracle ceiling would be exceeded."""

    exit_code = 4

    def __init__(self, detail: str, ceiling: int):
        super().__init__(detail)
        self.ceiling = ceiling


class ConvolutionDriftError(Goldbach3Error):
    """A transform-based convolution disagreed with its direct spot check."""
