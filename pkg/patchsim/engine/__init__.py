from __future__ import annotations

from patchsim.engine.analysis import (
    ConvergenceReport,
    DriftResult,
    convergence_order,
    damped_frequency,
    drift_experiment,
    drift_netlist,
    level_crossings,
    residual,
)
from patchsim.engine.integrators import ORDERS, STEPPERS, euler_step, rk4_step
from patchsim.engine.runner import Overload, SimResult, run
from patchsim.engine.schedule import Schedule, StateEntry, compile_schedule

__all__ = [
    "ORDERS",
    "STEPPERS",
    "ConvergenceReport",
    "DriftResult",
    "Overload",
    "Schedule",
    "SimResult",
    "StateEntry",
    "compile_schedule",
    "convergence_order",
    "damped_frequency",
    "drift_experiment",
    "drift_netlist",
    "euler_step",
    "level_crossings",
    "residual",
    "rk4_step",
    "run",
]
