"""Input-free generators: constants, sines and Fourier partial sums of a square wave."""

from __future__ import annotations

import math
from collections.abc import Sequence
from typing import ClassVar, overload

import numpy as np
import numpy.typing as npt
from pydantic import Field

from patchsim.blocks.base import Block
from patchsim.errors import ContractError


@overload
def eval_fourier_square(t: float, n_terms: int, period: float = ..., amplitude: float = ...) -> float: ...
@overload
def eval_fourier_square(
    t: npt.NDArray[np.float64], n_terms: int, period: float = ..., amplitude: float = ...
) -> npt.NDArray[np.float64]: ...
def eval_fourier_square(
    t: float | npt.NDArray[np.float64], n_terms: int, period: float = 1.0, amplitude: float = 1.0
) -> float | npt.NDArray[np.float64]:
    """Partial Fourier sum of a square wave of the given amplitude.

    ``(4A/pi) * sum(sin(2*pi*k*t/period)/k)`` over the first ``n_terms`` odd
    harmonics ``k = 1, 3, ..., 2*n_terms - 1``. Accepts a scalar or an array of
    times.
    """
    if n_terms < 1:
        raise ContractError(f"n_terms must be >= 1, got {n_terms}")
    k = np.arange(1, 2 * n_terms, 2, dtype=np.float64)
    ts = np.asarray(t, dtype=np.float64)
    phase = np.multiply.outer(ts, 2.0 * math.pi * k / period)
    total = (np.sin(phase) / k).sum(axis=-1) * (4.0 * amplitude / math.pi)
    if np.ndim(t) == 0:
        return float(total)
    return total


def gibbs_overshoot(n_terms: int, period: float = 1.0, amplitude: float = 1.0, samples: int | None = None) -> float:
    """Peak of the partial sum over one half period, relative to ``amplitude``.

    The square wave's level is 1 in these units; values above 1 are the
    overshoot that stays near 1.179 however many terms are used.
    """
    if not amplitude > 0:
        raise ContractError(f"amplitude must be > 0, got {amplitude!r}")
    n_samples = samples or max(20_001, 400 * n_terms)
    ts = np.linspace(0.0, period / 2.0, n_samples)
    peak = float(np.max(eval_fourier_square(ts, n_terms, period, amplitude)))
    return peak / amplitude


class ConstBlock(Block):
    tag: ClassVar[str] = "const"
    min_inputs: ClassVar[int] = 0
    max_inputs: ClassVar[int | None] = 0

    val: float

    def evaluate(self, inputs: Sequence[float], t: float) -> float:
        return self.val


class SineSource(Block):
    """``amplitude * sin(omega*t + phase)``."""

    tag: ClassVar[str] = "sine_src"
    min_inputs: ClassVar[int] = 0
    max_inputs: ClassVar[int | None] = 0

    amplitude: float = 1.0
    omega: float = 1.0
    phase: float = 0.0

    def evaluate(self, inputs: Sequence[float], t: float) -> float:
        return self.amplitude * math.sin(self.omega * t + self.phase)


class FourierSquareSource(Block):
    tag: ClassVar[str] = "fourier_square_src"
    min_inputs: ClassVar[int] = 0
    max_inputs: ClassVar[int | None] = 0

    n_terms: int = Field(ge=1)
    period: float = Field(default=1.0, gt=0.0)
    amplitude: float = 1.0

    def evaluate(self, inputs: Sequence[float], t: float) -> float:
        return eval_fourier_square(t, self.n_terms, self.period, self.amplitude)
