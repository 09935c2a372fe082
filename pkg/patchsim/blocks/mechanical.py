"""Wheel-and-disk integrator.

Disk A turns at a constant rate; disk B rests on it at a radial position
given by the input. B turns faster near A's edge, not at all at the centre,
and backwards when the position crosses to the other side, so the running
count of B's rotations is the definite integral of the position.
"""

from __future__ import annotations

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from patchsim.core.grid import Trace


class DiskIntegratorParams(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    omega_a: float = Field(default=1.0, gt=0.0)
    gain: float = Field(default=1.0, gt=0.0)


def disk_rotations(position: Trace, params: DiskIntegratorParams) -> float:
    """Signed rotations of disk B over the trace (trapezoidal rule)."""
    area = float(np.trapezoid(position.values, dx=position.grid.dt))
    return params.gain * params.omega_a * area
