"""Analog-to-digital and digital-to-analog conversion with 0 V / 5 V digit lines."""

from __future__ import annotations

import math
from collections.abc import Sequence
from typing import ClassVar

from pydantic import Field, model_validator

from patchsim.blocks.base import Block
from patchsim.errors import MalformedDigitError, OutOfRangeError

DIGIT_LOW = 0.0
DIGIT_HIGH = 5.0
DIGIT_TOLERANCE = 0.5
MAX_BITS = 32


def _round_half_away(x: float) -> int:
    return int(math.copysign(math.floor(abs(x) + 0.5), x))


def _code_bits(code: int, n_bits: int) -> tuple[float, ...]:
    return tuple(DIGIT_HIGH if (code >> shift) & 1 else DIGIT_LOW for shift in range(n_bits - 1, -1, -1))


def adc(value: float, n_bits: int, quantum: float = 1.0) -> tuple[float, ...]:
    """Digit voltages of ``round(value/quantum)``, most significant first.

    Rounds to nearest with ties away from zero.
    """
    if not 1 <= n_bits <= MAX_BITS:
        raise OutOfRangeError(f"n_bits must be in [1, {MAX_BITS}], got {n_bits}")
    if quantum <= 0:
        raise OutOfRangeError(f"quantum must be positive, got {quantum!r}")
    scaled = value / quantum
    if not math.isfinite(scaled) or scaled < 0:
        raise OutOfRangeError(f"value {value!r} is below the converter range")
    code = _round_half_away(scaled)
    if code >= 2**n_bits:
        raise OutOfRangeError(f"value {value!r} needs more than {n_bits} bits at quantum {quantum!r}")
    return _code_bits(code, n_bits)


def _digit(voltage: float) -> int:
    if abs(voltage - DIGIT_LOW) <= DIGIT_TOLERANCE:
        return 0
    if abs(voltage - DIGIT_HIGH) <= DIGIT_TOLERANCE:
        return 1
    raise MalformedDigitError(
        f"digit voltage {voltage!r} is not within {DIGIT_TOLERANCE} of {DIGIT_LOW} or {DIGIT_HIGH}"
    )


def dac(digit_voltages: Sequence[float], quantum: float = 1.0) -> float:
    code = 0
    for voltage in digit_voltages:
        code = (code << 1) | _digit(voltage)
    return code * quantum


class AdcBlock(Block):
    """One digit line of a converter.

    Inside a running circuit the code saturates at the ends of the range
    rather than raising.
    """

    tag: ClassVar[str] = "adc"
    smooth: ClassVar[bool] = False

    n_bits: int = Field(ge=1, le=MAX_BITS)
    quantum: float = Field(default=1.0, gt=0.0)
    bit: int = Field(ge=0)

    @model_validator(mode="after")
    def _bit_in_word(self) -> AdcBlock:
        if self.bit >= self.n_bits:
            raise ValueError(f"bit {self.bit} outside a {self.n_bits}-bit word")
        return self

    def evaluate(self, inputs: Sequence[float], t: float) -> float:
        top = 2**self.n_bits - 1
        scaled = inputs[0] / self.quantum
        code = _round_half_away(scaled) if math.isfinite(scaled) else (top if scaled > 0 else 0)
        code = min(max(code, 0), top)
        return DIGIT_HIGH if (code >> (self.n_bits - 1 - self.bit)) & 1 else DIGIT_LOW


class DacBlock(Block):
    """Reassembles digit voltages (most significant input first) into a value."""

    tag: ClassVar[str] = "dac"
    max_inputs: ClassVar[int | None] = MAX_BITS
    smooth: ClassVar[bool] = False

    quantum: float = Field(default=1.0, gt=0.0)

    def evaluate(self, inputs: Sequence[float], t: float) -> float:
        return dac(inputs, self.quantum)
