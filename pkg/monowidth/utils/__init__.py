from monowidth.utils.errors import (
    ArityError,
    CapExceededError,
    CertificateError,
    DiagramSyntaxError,
    FieldModeError,
    IndexRangeError,
    InputFormatError,
    MonowidthError,
    ShapeError,
    WidthContractError,
)

__all__ = [
    "ArityError",
    "CapExceededError",
    "CertificateError",
    "DiagramSyntaxError",
    "FieldModeError",
    "IndexRangeError",
    "InputFormatError",
    "MonowidthError",
    "ShapeError",
    "WidthContractError",
]
