from __future__ import annotations

from patchsim.core.csvio import read_csv, write_csv, write_csv_stream
from patchsim.core.grid import MAX_STEPS, TimeGrid, Trace, trace_sample
from patchsim.core.scaling import DEFAULT_MACHINE_LIMIT, MachineLimits, ScaleMap, apply_scale, check_overload

__all__ = [
    "DEFAULT_MACHINE_LIMIT",
    "MAX_STEPS",
    "MachineLimits",
    "ScaleMap",
    "TimeGrid",
    "Trace",
    "apply_scale",
    "check_overload",
    "read_csv",
    "trace_sample",
    "write_csv",
    "write_csv_stream",
]
