"""Uniform time grids and sampled traces in machine units."""

from __future__ import annotations

import math
from typing import Any

import numpy as np
import numpy.typing as npt
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from patchsim.errors import OutOfRangeError

FloatArray = npt.NDArray[np.float64]

MAX_STEPS = 10**8


class TimeGrid(BaseModel):
    """A uniform grid ``t_start + k*dt`` for ``k = 0..n_steps``."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    t_start: float = 0.0
    dt: float = Field(gt=0.0)
    n_steps: int = Field(ge=1, le=MAX_STEPS)

    @field_validator("t_start", "dt")
    @classmethod
    def _finite(cls, value: float) -> float:
        if not math.isfinite(value):
            raise ValueError("must be finite")
        return value

    @classmethod
    def from_span(cls, t_end: float, dt: float, t_start: float = 0.0) -> TimeGrid:
        """Grid covering ``[t_start, t_end]`` whose last sample is exactly ``t_end``.

        The step count is ``ceil(span/dt)`` and the step is shrunk to
        ``span/n_steps``, so the effective dt never exceeds the requested one.
        """
        span = t_end - t_start
        if span <= 0 or dt <= 0:
            raise ValueError(f"need t_end > t_start and dt > 0, got span={span!r}, dt={dt!r}")
        n_steps = max(1, math.ceil(span / dt - 1e-9))
        return cls(t_start=t_start, dt=span / n_steps, n_steps=n_steps)

    @property
    def t_end(self) -> float:
        return self.time_at(self.n_steps)

    def time_at(self, k: int) -> float:
        return self.t_start + k * self.dt

    def times(self) -> FloatArray:
        return self.t_start + np.arange(self.n_steps + 1, dtype=np.float64) * self.dt


def _frozen_array(values: Any) -> FloatArray:
    arr = np.array(values, dtype=np.float64)
    arr.setflags(write=False)
    return arr


class Trace(BaseModel):
    """One machine variable sampled on a :class:`TimeGrid`.

    ``values`` is a read-only float64 array of length ``n_steps + 1``; NaN and
    Inf are rejected at construction.
    """

    model_config = ConfigDict(frozen=True, extra="forbid", arbitrary_types_allowed=True)

    grid: TimeGrid
    values: FloatArray
    name: str = Field(min_length=1)

    @field_validator("values", mode="before")
    @classmethod
    def _as_array(cls, value: Any) -> FloatArray:
        arr = _frozen_array(value)
        if arr.ndim != 1:
            raise ValueError("values must be one-dimensional")
        if not np.all(np.isfinite(arr)):
            raise ValueError("values must be finite (no NaN/Inf)")
        return arr

    @model_validator(mode="after")
    def _length_matches_grid(self) -> Trace:
        if self.values.shape[0] != self.grid.n_steps + 1:
            raise ValueError(f"expected {self.grid.n_steps + 1} values for the grid, got {self.values.shape[0]}")
        return self

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Trace):
            return NotImplemented
        return self.name == other.name and self.grid == other.grid and np.array_equal(self.values, other.values)

    __hash__ = None  # type: ignore[assignment]

    @property
    def end_time(self) -> float:
        return self.grid.t_end

    def times(self) -> FloatArray:
        return self.grid.times()

    def with_values(self, values: Any, name: str | None = None) -> Trace:
        return Trace(grid=self.grid, values=values, name=name or self.name)

    def scaled_sum(self, a: float, other: Trace, b: float) -> Trace:
        """Pointwise ``a*self + b*other`` on the shared grid."""
        if other.grid != self.grid:
            raise ValueError("traces must share one grid")
        return self.with_values(a * self.values + b * other.values)


def trace_sample(trace: Trace, t: float) -> float:
    """Linearly interpolate ``trace`` at time ``t``; exact at grid points."""
    grid = trace.grid
    if not (grid.t_start <= t <= grid.t_end):
        raise OutOfRangeError(f"t={t!r} outside [{grid.t_start!r}, {grid.t_end!r}] of trace '{trace.name}'")
    pos = (t - grid.t_start) / grid.dt
    nearest = min(max(round(pos), 0), grid.n_steps)
    if t == grid.time_at(nearest) or nearest == grid.n_steps and t >= grid.t_end:
        return float(trace.values[nearest])
    k = min(int(math.floor(pos)), grid.n_steps - 1)
    frac = (t - grid.time_at(k)) / grid.dt
    lo = float(trace.values[k])
    hi = float(trace.values[k + 1])
    return lo + frac * (hi - lo)
