"""Linear computing elements: adder, coefficient pot, inverter, multiplier, integrator."""

from __future__ import annotations

import math
from collections.abc import Sequence
from typing import ClassVar

from pydantic import field_validator

from patchsim.blocks.base import Block
from patchsim.errors import ContractError


def _exact_sum(values: Sequence[float]) -> float:
    try:
        return math.fsum(values)
    except (OverflowError, ValueError):
        # fsum refuses inf - inf and intermediate overflow; plain sum gives inf/nan.
        return sum(values, 0.0)


def eval_adder(inputs: Sequence[float]) -> float:
    if len(inputs) < 2:
        raise ContractError(f"adder needs at least 2 inputs, got {len(inputs)}")
    return _exact_sum(inputs)


def eval_pot(gain: float, value: float) -> float:
    return gain * value


def eval_inv(value: float) -> float:
    return -value


def eval_mult(a: float, b: float, scale: float = 1.0) -> float:
    return scale * a * b


class AdderBlock(Block):
    """Ideal non-inverting summer."""

    tag: ClassVar[str] = "adder"
    min_inputs: ClassVar[int] = 2
    max_inputs: ClassVar[int | None] = None

    def evaluate(self, inputs: Sequence[float], t: float) -> float:
        return _exact_sum(inputs)


class PotBlock(Block):
    """Coefficient potentiometer; the gain may exceed 1 (amplifier gain folded in)."""

    tag: ClassVar[str] = "pot"

    gain: float

    @field_validator("gain")
    @classmethod
    def _finite(cls, value: float) -> float:
        if not math.isfinite(value):
            raise ValueError("gain must be finite")
        return value

    def evaluate(self, inputs: Sequence[float], t: float) -> float:
        return self.gain * inputs[0]


class InvBlock(Block):
    tag: ClassVar[str] = "inv"

    def evaluate(self, inputs: Sequence[float], t: float) -> float:
        return -inputs[0]


class MultBlock(Block):
    tag: ClassVar[str] = "mult"
    min_inputs: ClassVar[int] = 2
    max_inputs: ClassVar[int | None] = 2

    scale: float = 1.0

    def evaluate(self, inputs: Sequence[float], t: float) -> float:
        return self.scale * inputs[0] * inputs[1]


class IntegratorBlock(Block):
    """Integrator; its output is a state variable advanced by the engine."""

    tag: ClassVar[str] = "int"
    stateful: ClassVar[bool] = True

    ic: float = 0.0

    @field_validator("ic")
    @classmethod
    def _finite(cls, value: float) -> float:
        if not math.isfinite(value):
            raise ValueError("initial condition must be finite")
        return value
