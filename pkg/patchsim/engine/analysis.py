"""Checks run against simulated trajectories.

Residuals of a second-order equation, measured convergence order, the
integrator drift caused by an imperfect step, and crossing-based frequency
estimates.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Sequence
from typing import Literal, NamedTuple

import numpy as np
from pydantic import BaseModel, ConfigDict

from patchsim.blocks.sources import ConstBlock
from patchsim.core.grid import TimeGrid, Trace
from patchsim.engine.integrators import ORDERS
from patchsim.engine.runner import SimResult, run
from patchsim.errors import ContractError
from patchsim.netlist.document import IntegrationMethod, NetlistDoc
from patchsim.netlist.graph import validate
from patchsim.netlist.parser import parse

logger = logging.getLogger(__name__)

NEGLIGIBLE_ERROR = 1e-13


def _forcing_value(result: SimResult, doc: NetlistDoc, forcing: float | str) -> float | np.ndarray:
    if not isinstance(forcing, str):
        return float(forcing)
    if forcing in result.traces:
        return result.traces[forcing].values[1:-1]
    driver = doc.driver_of(forcing)
    if driver is None or driver.kind != ConstBlock.tag:
        raise ContractError(f"forcing net '{forcing}' is neither probed nor driven by a const block")
    return float(ConstBlock.model_validate(driver.params).val)


def residual(
    result: SimResult,
    doc: NetlistDoc,
    *,
    position: str = "X",
    velocity: str = "XDOT",
    mass: float = 1.0,
    damping: float = 3.0,
    stiffness: float = 16.0,
    forcing: float | str = "Y",
) -> Trace:
    """Pointwise ``|m*x''_fd + b*x' + k*x - y|`` on the interior grid points.

    ``x''_fd`` is the central difference of the velocity trace. ``forcing`` is
    a number, a probed net, or a net driven by a ``const`` block. The defaults
    are the spring-mass coefficients.
    """
    for net in (position, velocity):
        if net not in result.traces:
            raise ContractError(f"residual needs net '{net}' to be probed")
    grid = result.grid
    if grid.n_steps < 3:
        raise ContractError("residual needs at least 3 steps")
    x = result.traces[position].values
    v = result.traces[velocity].values
    accel = (v[2:] - v[:-2]) / (2.0 * grid.dt)
    y = _forcing_value(result, doc, forcing)
    values = np.abs(mass * accel + damping * v[1:-1] + stiffness * x[1:-1] - y)
    interior = TimeGrid(t_start=grid.time_at(1), dt=grid.dt, n_steps=grid.n_steps - 2)
    return Trace(grid=interior, values=values, name=f"residual_{position}")


def level_crossings(trace: Trace, level: float) -> list[float]:
    """Times where the trace crosses ``level``, by linear interpolation.

    Samples exactly at ``level`` are skipped over; a sign change across them
    counts as one crossing at the midpoint of the run of equal samples.
    """
    d = trace.values - level
    times = trace.times()
    nonzero = np.flatnonzero(d != 0.0)
    crossings: list[float] = []
    for a, b in zip(nonzero[:-1], nonzero[1:]):
        if np.sign(d[a]) == np.sign(d[b]):
            continue
        if b == a + 1:
            crossings.append(float(times[a] + d[a] / (d[a] - d[b]) * (times[b] - times[a])))
        else:
            crossings.append(float(0.5 * (times[a + 1] + times[b - 1])))
    return crossings


def damped_frequency(trace: Trace, level: float) -> float:
    """Angular frequency from the mean spacing of successive crossings of ``level``."""
    crossings = level_crossings(trace, level)
    if len(crossings) < 2:
        raise ContractError(f"need at least 2 crossings of {level!r}, found {len(crossings)}")
    return math.pi / float(np.mean(np.diff(crossings)))


class ConvergenceReport(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    method: IntegrationMethod
    dts: tuple[float, ...]
    errors: tuple[float, ...]
    order: float | None
    """Fitted slope of log(error) against log(dt); ``None`` when every error is negligible."""


def _with_step(doc: NetlistDoc, dt: float, method: IntegrationMethod) -> NetlistDoc:
    return doc.model_copy(update={"sim": doc.sim.model_copy(update={"dt": dt, "method": method})})


def _stack(result: SimResult) -> np.ndarray:
    return np.vstack([trace.values for trace in result.traces.values()])


def convergence_order(
    doc: NetlistDoc,
    dts: Sequence[float],
    *,
    method: IntegrationMethod | None = None,
    norm: Literal["sup", "final"] = "sup",
) -> ConvergenceReport:
    """Measure the order of the integration method on ``doc``.

    The reference solution is a Richardson extrapolation of runs at
    ``min(dts)/2`` and ``min(dts)/4``. Each run's error is the largest
    deviation from it over every probed net, taken on all shared grid points
    (``norm="sup"``) or at ``t_end`` only (``norm="final"``).
    """
    if len(dts) < 3:
        raise ContractError(f"need at least 3 step sizes, got {len(dts)}")
    if not doc.probes:
        raise ContractError("convergence_order needs at least one probed net")
    method = method or doc.sim.method
    graph = validate(doc)
    if not graph.smooth:
        logger.warning("circuit has discontinuous blocks; the measured order may not reflect the method")

    p = ORDERS[method]
    finest = min(dts)
    half = run(_with_step(doc, finest / 2.0, method), graph=graph)
    quarter = run(_with_step(doc, finest / 4.0, method), graph=graph)
    q_stack, h_stack = _stack(quarter), _stack(half)
    reference = (2.0**p * q_stack[:, ::2] - h_stack) / (2.0**p - 1.0)

    errors: list[float] = []
    effective: list[float] = []
    for dt in dts:
        result = run(_with_step(doc, dt, method), graph=graph)
        ratio = half.grid.n_steps / result.grid.n_steps
        if ratio != int(ratio):
            raise ContractError(f"dt={dt!r} does not nest with the reference grid")
        diff = np.abs(_stack(result) - reference[:, :: int(ratio)])
        errors.append(float(diff[:, -1].max() if norm == "final" else diff.max()))
        effective.append(result.grid.dt)

    scale = max(1.0, float(np.abs(reference).max()))
    order: float | None
    if max(errors) <= NEGLIGIBLE_ERROR * scale:
        logger.info("all errors below %g; order not applicable", NEGLIGIBLE_ERROR * scale)
        order = None
    else:
        order = float(np.polyfit(np.log(effective), np.log(np.maximum(errors, 1e-300)), 1)[0])
    return ConvergenceReport(method=method, dts=tuple(effective), errors=tuple(errors), order=order)


class DriftResult(NamedTuple):
    drift_exact: float
    drift_approx: float


def drift_netlist(epsilon: float, t_end: float, dt: float, jump_time: float, level: float) -> str:
    if jump_time > 0:
        step = f"times=0,{jump_time!r} levels=0,{level!r}"
        slope = f"times=0,{jump_time!r} levels=0,{epsilon!r}"
    else:
        step = f"times=0 levels={level!r}"
        slope = f"times=0 levels={epsilon!r}"
    return f"""\
# true step and a step whose post-jump slope is epsilon, each through one integrator
block stepgen S  {step} out=STEP
block stepgen E  {slope} out=SLOPE
block int     R  in=SLOPE out=RAMP
block adder   A  in=STEP,RAMP out=APPROX
block int     IE in=STEP out=OUT_EXACT
block int     IA in=APPROX out=OUT_APPROX
probe OUT_EXACT
probe OUT_APPROX
sim dt={dt!r} t={t_end!r} method=rk4 limit=1e300
"""


def drift_experiment(
    epsilon: float, t_end: float, *, dt: float = 0.01, jump_time: float = 0.0, level: float = 1.0
) -> DriftResult:
    """Integrator drift caused by a step whose slope after the jump is ``epsilon``.

    Returns each integrator's deviation at ``t_end`` from the ramp-free value
    ``level * (t_end - jump_time)``. For ``epsilon > 0`` the approximate path
    drifts by about ``epsilon * (t_end - jump_time)**2 / 2``. A jump after t=0
    adds the fixed-step sampling error of the jump (about ``level*dt/6``) to
    both paths.
    """
    if epsilon < 0:
        raise ContractError(f"epsilon must be >= 0, got {epsilon!r}")
    if not 0.0 <= jump_time < t_end:
        raise ContractError("jump_time must lie in [0, t_end)")
    result = run(parse(drift_netlist(epsilon, t_end, dt, jump_time, level)))
    ideal = level * (t_end - jump_time)
    exact = float(result.traces["OUT_EXACT"].values[-1]) - ideal
    approx = float(result.traces["OUT_APPROX"].values[-1]) - ideal
    return DriftResult(drift_exact=exact, drift_approx=approx)
