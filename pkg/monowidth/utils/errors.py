class MonowidthError(Exception):
    """Base class of every error raised by monowidth."""

    exit_code = 1


class ShapeError(MonowidthError, ValueError):
    """Matrix or morphism shapes do not fit together."""


class IndexRangeError(MonowidthError, IndexError):
    """An index lies outside the matrix or graph it addresses."""


class ArityError(MonowidthError):
    """Arities disagree at a node of a decomposition or an expression.

    Args:
        message (str): Human readable description.
        path (str): Address of the offending node, e.g. ``"root.L.R"``.
    """

    def __init__(self, message: str, path: str = "root") -> None:
        super().__init__(f"{message} (at {path})")
        self.path = path


class CapExceededError(MonowidthError):
    """An input exceeds a configured hard cap; the computation is refused."""

    exit_code = 3


class FieldModeError(MonowidthError):
    """The operation is not available in the active scalar field."""


class CertificateError(MonowidthError):
    """A certificate is malformed or does not certify what it claims."""

    exit_code = 2


class WidthContractError(MonowidthError, AssertionError):
    """A width relation that the construction guarantees did not hold."""


class InputFormatError(MonowidthError):
    """An input file or payload could not be read."""


class DiagramSyntaxError(MonowidthError):
    """A diagram expression could not be parsed.

    Args:
        message (str): Parser message.
        line (int): 1-based line of the error.
        column (int): 1-based column of the error.
    """

    def __init__(self, message: str, line: int, column: int) -> None:
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column
