"""Amplitude scaling and overload reporting."""

from __future__ import annotations

import math

from pydantic import BaseModel, ConfigDict, Field, field_validator

from patchsim.core.grid import Trace

DEFAULT_MACHINE_LIMIT = 100.0


class MachineLimits(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    max_abs: float = Field(default=DEFAULT_MACHINE_LIMIT, gt=0.0)


class ScaleMap(BaseModel):
    """Linear map from problem units to machine units."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    factor: float

    @field_validator("factor")
    @classmethod
    def _nonzero(cls, value: float) -> float:
        if value == 0 or not math.isfinite(value):
            raise ValueError("scale factor must be finite and non-zero")
        return value


def apply_scale(trace: Trace, scale: ScaleMap) -> Trace:
    return trace.with_values(trace.values * scale.factor)


def check_overload(trace: Trace, limits: MachineLimits) -> list[tuple[float, float]]:
    """Every ``(time, value)`` sample whose magnitude strictly exceeds the limit."""
    times = trace.times()
    mask = abs(trace.values) > limits.max_abs
    return [(float(t), float(v)) for t, v in zip(times[mask], trace.values[mask], strict=True)]
