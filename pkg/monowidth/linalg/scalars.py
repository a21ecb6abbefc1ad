from enum import StrEnum
from fractions import Fraction

from beartype import beartype
from beartype.typing import Any

from monowidth.utils.errors import InputFormatError

INT64_MAX = 2**63 - 1

_ALIASES = {
    "gf2": "gf2",
    "gf(2)": "gf2",
    "binary": "gf2",
    "rational": "rational",
    "rat": "rational",
    "q": "rational",
    "nat": "rational",
}


class Field(StrEnum):
    """Scalar field of a matrix: bits with addition mod 2, or exact rationals.

    Nonnegative integers in rational mode stand for the entries of matrices over the natural numbers.
    """

    GF2 = "gf2"
    RAT = "rational"

    @classmethod
    def parse(cls, name: "str | Field") -> "Field":
        """Resolve a field name or alias such as ``"gf2"``, ``"rat"`` or ``"q"``.

        Args:
            name (str | Field): Field name.

        Returns:
            Field: The matching field.
        """

        if isinstance(name, Field):
            return name
        try:
            return cls(_ALIASES[str(name).strip().lower()])
        except KeyError:
            raise InputFormatError(f"Unknown scalar field {name!r}, expected 'gf2' or 'rational'") from None

    def coerce(self, value: Any) -> int | Fraction:
        """Convert a Python value into a scalar of this field.

        Args:
            value (Any): Integer, bool, Fraction or decimal / ``p/q`` string.

        Returns:
            int | Fraction: ``0``/``1`` in GF(2), a Fraction in rational mode.
        """

        if isinstance(value, str):
            try:
                value = Fraction(value.strip())
            except ValueError:
                raise InputFormatError(f"Cannot read scalar {value!r}") from None
        if isinstance(value, bool):
            value = int(value)
        if self is Field.GF2:
            fraction = Fraction(value)
            if fraction.denominator % 2 == 0:
                raise InputFormatError(f"Scalar {value!r} has no value in GF(2)")
            return int(fraction.numerator * pow(fraction.denominator, -1, 2) % 2)
        return Fraction(value)

    def zero(self) -> int | Fraction:
        return 0 if self is Field.GF2 else Fraction(0)

    def one(self) -> int | Fraction:
        return 1 if self is Field.GF2 else Fraction(1)

    def encode(self, value: int | Fraction) -> int | str:
        """Encode a scalar for JSON: integers stay numbers unless they exceed 64 bits.

        Args:
            value (int | Fraction): Scalar of this field.

        Returns:
            int | str: JSON-ready value; non-integral rationals become ``"p/q"`` strings.
        """

        if self is Field.GF2:
            return int(value)
        fraction = Fraction(value)
        if fraction.denominator != 1:
            return f"{fraction.numerator}/{fraction.denominator}"
        if abs(fraction.numerator) > INT64_MAX:
            return str(fraction.numerator)
        return int(fraction.numerator)


@beartype
def is_natural(value: int | Fraction) -> bool:
    """Whether a scalar is a nonnegative integer."""

    return Fraction(value).denominator == 1 and value >= 0
