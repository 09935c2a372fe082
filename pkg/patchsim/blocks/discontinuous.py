"""Non-smooth and jump elements: limiters, arbitrary function generators, step generators.

The four limiter modes stand in for a family of diode and relay circuits:

``zero``  output held at zero until the input passes ``threshold`` (gear slack
          on the driven side of a train).
``dead``  dead zone of ``half_width`` either side of zero.
``sat``   clamp to ``+/-level``.
``bang``  relay comparator switching between ``-level`` and ``+level``.
"""

from __future__ import annotations

import bisect
import math
from collections.abc import Callable, Sequence
from enum import StrEnum
from typing import ClassVar

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from patchsim.blocks.base import Block
from patchsim.errors import ContractError, OutOfRangeError


class LimiterMode(StrEnum):
    ZERO = "zero"
    DEAD = "dead"
    SAT = "sat"
    BANG = "bang"


class ContactStyle(StrEnum):
    BREAK_BEFORE_MAKE = "break_before_make"
    MAKE_BEFORE_BREAK = "make_before_break"


def eval_limiter(
    mode: LimiterMode | str,
    value: float,
    *,
    threshold: float = 0.0,
    half_width: float = 0.0,
    level: float = 1.0,
) -> float:
    match LimiterMode(mode):
        case LimiterMode.ZERO:
            return max(0.0, value - threshold)
        case LimiterMode.DEAD:
            if abs(value) <= half_width:
                return 0.0
            return value - math.copysign(half_width, value)
        case LimiterMode.SAT:
            return min(max(value, -level), level)
        case LimiterMode.BANG:
            if value < threshold:
                return -level
            if value > threshold:
                return level
            return 0.0


class LimiterBlock(Block):
    tag: ClassVar[str] = "limiter"
    smooth: ClassVar[bool] = False

    mode: LimiterMode
    threshold: float = 0.0
    half_width: float = Field(default=0.0, ge=0.0)
    level: float = Field(default=1.0, gt=0.0)

    def evaluate(self, inputs: Sequence[float], t: float) -> float:
        return eval_limiter(
            self.mode, inputs[0], threshold=self.threshold, half_width=self.half_width, level=self.level
        )


Breakpoints = Sequence[tuple[float, float]]


def _check_breakpoints(xs: Sequence[float], ys: Sequence[float]) -> None:
    if len(xs) != len(ys):
        raise ContractError(f"breakpoint abscissae and ordinates differ in length ({len(xs)} vs {len(ys)})")
    if len(xs) < 2:
        raise ContractError("an arbitrary function generator needs at least 2 breakpoints")
    if any(b <= a for a, b in zip(xs, xs[1:])):
        raise ContractError("breakpoint abscissae must be strictly increasing")


def eval_afg(breakpoints: Breakpoints, value: float) -> float:
    """Piecewise-linear interpolation through ``breakpoints``, clamped at both ends."""
    xs = [x for x, _ in breakpoints]
    ys = [y for _, y in breakpoints]
    _check_breakpoints(xs, ys)
    return _interp(xs, ys, value)


def _interp(xs: Sequence[float], ys: Sequence[float], value: float) -> float:
    if value <= xs[0]:
        return ys[0]
    if value >= xs[-1]:
        return ys[-1]
    i = bisect.bisect_right(xs, value) - 1
    if value == xs[i]:
        return ys[i]
    frac = (value - xs[i]) / (xs[i + 1] - xs[i])
    return ys[i] + frac * (ys[i + 1] - ys[i])


def afg_breakpoints(fn: Callable[[float], float], lo: float, hi: float, n_points: int) -> list[tuple[float, float]]:
    """Sample ``fn`` at ``n_points`` evenly spaced abscissae in ``[lo, hi]``."""
    if n_points < 2 or hi <= lo:
        raise ContractError("need n_points >= 2 and hi > lo")
    return [(float(x), float(fn(float(x)))) for x in np.linspace(lo, hi, n_points)]


def afg_max_error(breakpoints: Breakpoints, fn: Callable[[float], float], n_samples: int = 10_001) -> float:
    """Largest ``|afg(x) - fn(x)|`` over a dense sweep of the breakpoint range."""
    lo, hi = breakpoints[0][0], breakpoints[-1][0]
    return max(abs(eval_afg(breakpoints, float(x)) - fn(float(x))) for x in np.linspace(lo, hi, n_samples))


class AfgBlock(Block):
    tag: ClassVar[str] = "afg"
    list_params: ClassVar[frozenset[str]] = frozenset({"xs", "ys"})
    smooth: ClassVar[bool] = False

    xs: tuple[float, ...]
    ys: tuple[float, ...]

    @model_validator(mode="after")
    def _valid_breakpoints(self) -> AfgBlock:
        try:
            _check_breakpoints(self.xs, self.ys)
        except ContractError as exc:
            raise ValueError(str(exc)) from exc
        return self

    @property
    def breakpoints(self) -> list[tuple[float, float]]:
        return list(zip(self.xs, self.ys, strict=True))

    def evaluate(self, inputs: Sequence[float], t: float) -> float:
        return _interp(self.xs, self.ys, inputs[0])


class StepSchedule(BaseModel):
    """Levels switched in at increasing times by a rotating contact.

    With ``make_before_break`` the wiper briefly shorts adjacent taps: for
    ``overlap`` seconds after each jump the output is the mean of the old and
    new levels.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    segments: tuple[tuple[float, float], ...]
    contact: ContactStyle = ContactStyle.BREAK_BEFORE_MAKE
    overlap: float = Field(default=0.0, ge=0.0)

    @model_validator(mode="after")
    def _check(self) -> StepSchedule:
        if not self.segments:
            raise ValueError("a step schedule needs at least one segment")
        starts = [s for s, _ in self.segments]
        if starts[0] != 0.0:
            raise ValueError("the first segment must start at t=0")
        if any(b <= a for a, b in zip(starts, starts[1:])):
            raise ValueError("segment start times must be strictly increasing")
        if self.contact is ContactStyle.MAKE_BEFORE_BREAK and len(starts) > 1:
            shortest = min(b - a for a, b in zip(starts, starts[1:]))
            if self.overlap >= shortest:
                raise ValueError(f"overlap {self.overlap!r} must be shorter than the shortest segment ({shortest!r})")
        return self

    @property
    def starts(self) -> tuple[float, ...]:
        return tuple(s for s, _ in self.segments)

    @property
    def levels(self) -> tuple[float, ...]:
        return tuple(level for _, level in self.segments)


def _level_at(
    starts: Sequence[float], levels: Sequence[float], contact: ContactStyle, overlap: float, t: float
) -> float:
    if t < 0:
        raise OutOfRangeError(f"step generator time must be >= 0, got {t!r}")
    i = bisect.bisect_right(starts, t) - 1
    if contact is ContactStyle.MAKE_BEFORE_BREAK and i > 0 and t < starts[i] + overlap:
        return (levels[i - 1] + levels[i]) / 2.0
    return levels[i]


def eval_stepgen(schedule: StepSchedule, t: float) -> float:
    """Right-continuous step output; at a jump time the new level applies."""
    return _level_at(schedule.starts, schedule.levels, schedule.contact, schedule.overlap, t)


class StepGenBlock(Block):
    tag: ClassVar[str] = "stepgen"
    min_inputs: ClassVar[int] = 0
    max_inputs: ClassVar[int | None] = 0
    list_params: ClassVar[frozenset[str]] = frozenset({"times", "levels"})
    smooth: ClassVar[bool] = False

    times: tuple[float, ...]
    levels: tuple[float, ...]
    contact: ContactStyle = ContactStyle.BREAK_BEFORE_MAKE
    overlap: float = Field(default=0.0, ge=0.0)

    @model_validator(mode="after")
    def _valid_schedule(self) -> StepGenBlock:
        if len(self.times) != len(self.levels):
            raise ValueError(f"times and levels differ in length ({len(self.times)} vs {len(self.levels)})")
        try:
            StepSchedule(segments=tuple(zip(self.times, self.levels)), contact=self.contact, overlap=self.overlap)
        except ValidationError as exc:
            raise ValueError(exc.errors()[0]["msg"]) from exc
        return self

    @property
    def schedule(self) -> StepSchedule:
        return StepSchedule(
            segments=tuple(zip(self.times, self.levels, strict=True)), contact=self.contact, overlap=self.overlap
        )

    def evaluate(self, inputs: Sequence[float], t: float) -> float:
        return _level_at(self.times, self.levels, self.contact, self.overlap, t)
