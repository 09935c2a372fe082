"""Place-value numerals in base ``b``, evaluated with exact rationals.

For ``b >= 2`` digit ``d_k`` at position ``k`` (counted from the point, to the
left starting at 0) weighs ``d_k * b**k``; digits right of the point take
negative powers. In base 1 every weight is ``1**k == 1``, so the value is the
count of strokes and the position of a point changes nothing.
"""

from __future__ import annotations

from collections.abc import Iterable
from fractions import Fraction

from pydantic import BaseModel, ConfigDict, Field, model_validator

from patchsim.errors import ContractError, MalformedDigitError

DIGIT_CHARS = "0123456789abcdefghijklmnopqrstuvwxyz"


class NumeralString(BaseModel):
    """A digit sequence with an optional radix point.

    ``point`` is the number of digits left of the point; ``None`` means an
    integer numeral (the point sits after the last digit).
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    digits: tuple[int, ...] = Field(min_length=1)
    base: int = Field(ge=1)
    point: int | None = None

    @model_validator(mode="after")
    def _point_in_range(self) -> NumeralString:
        if self.point is not None and not 0 <= self.point <= len(self.digits):
            raise ValueError(f"point {self.point} outside 0..{len(self.digits)}")
        return self

    @property
    def integer_digits(self) -> int:
        return len(self.digits) if self.point is None else self.point

    def check_digits(self) -> None:
        """Raise :class:`MalformedDigitError` for a digit the base does not allow."""
        for index, digit in enumerate(self.digits):
            if self.base == 1:
                if digit != 1:
                    raise MalformedDigitError(f"unary digit {index} is {digit}; unary numerals use only 1")
            elif not 0 <= digit < self.base:
                raise MalformedDigitError(f"digit {index} is {digit}; base {self.base} allows 0..{self.base - 1}")

    @classmethod
    def parse(cls, text: str, base: int) -> NumeralString:
        """Read text such as ``"29.7"`` or ``"1001"``; letters stand for digits above 9."""
        if not 1 <= base <= len(DIGIT_CHARS):
            raise ContractError(f"text numerals support bases 1..{len(DIGIT_CHARS)}, got {base}")
        body = text.strip().lower()
        if body.count(".") > 1:
            raise MalformedDigitError(f"numeral {text!r} has more than one point")
        whole, dot, frac = body.partition(".")
        digits: list[int] = []
        for char in whole + frac:
            value = DIGIT_CHARS.find(char)
            if value < 0:
                raise MalformedDigitError(f"{char!r} is not a digit")
            digits.append(value)
        if not digits:
            raise MalformedDigitError(f"numeral {text!r} has no digits")
        numeral = cls(digits=tuple(digits), base=base, point=len(whole) if dot else None)
        numeral.check_digits()
        return numeral

    def __str__(self) -> str:
        text = "".join(DIGIT_CHARS[d] if d < len(DIGIT_CHARS) else f"[{d}]" for d in self.digits)
        if self.point is not None:
            text = f"{text[: self.point]}.{text[self.point :]}"
        return f"{text}_{self.base}"


def digital_value(numeral: NumeralString) -> Fraction:
    numeral.check_digits()
    base = Fraction(numeral.base)
    top = numeral.integer_digits - 1
    return sum((digit * base ** (top - i) for i, digit in enumerate(numeral.digits)), Fraction(0))


def unary_point_invariance(digits_count: int, point_positions: Iterable[int] | None = None) -> bool:
    """Whether a unary numeral of ``digits_count`` strokes has one value for every point placement.

    Holds for any count since ``1**k == 1``; the function evaluates every
    placement rather than assuming it.
    """
    if digits_count < 1:
        raise ContractError(f"a numeral needs at least one digit, got {digits_count}")
    positions = range(digits_count + 1) if point_positions is None else point_positions
    strokes = (1,) * digits_count
    values = {digital_value(NumeralString(digits=strokes, base=1, point=p)) for p in positions}
    values.add(digital_value(NumeralString(digits=strokes, base=1)))
    return values == {Fraction(digits_count)}
