"""Run a patched circuit through time."""

from __future__ import annotations

import logging
import math
from collections.abc import Callable, Sequence

import numpy as np
from pydantic import BaseModel, ConfigDict

from patchsim.core.grid import TimeGrid, Trace
from patchsim.core.scaling import MachineLimits, check_overload
from patchsim.engine.integrators import STEPPERS, State
from patchsim.engine.schedule import Schedule, compile_schedule
from patchsim.errors import DivergedError
from patchsim.netlist.document import IntegrationMethod, NetlistDoc
from patchsim.netlist.graph import CircuitGraph, validate

logger = logging.getLogger(__name__)


class Overload(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    net: str
    time: float
    value: float


class SimResult(BaseModel):
    """Probed traces of one run; every trace shares ``grid``."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    grid: TimeGrid
    traces: dict[str, Trace]
    overloads: tuple[Overload, ...] = ()
    method: IntegrationMethod
    steps: int
    limit: float

    def trace(self, net: str) -> Trace:
        return self.traces[net]

    def overloaded_nets(self) -> tuple[str, ...]:
        return tuple(dict.fromkeys(o.net for o in self.overloads))


_Op = tuple[str, Callable[[Sequence[float], float], float], tuple[int, ...], int]


class _Program:
    """Index-based form of a schedule: every net is a slot in a flat list."""

    def __init__(self, graph: CircuitGraph, schedule: Schedule) -> None:
        nets = list(graph.drivers)
        self.slot = {net: i for i, net in enumerate(nets)}
        self.n_nets = len(nets)
        self.state_names = tuple(entry.block for entry in schedule.state_blocks)
        self.state_out = tuple(self.slot[entry.output_net] for entry in schedule.state_blocks)
        self.state_in = tuple(self.slot[entry.input_net] for entry in schedule.state_blocks)
        self.initial = np.array([entry.ic for entry in schedule.state_blocks], dtype=np.float64)
        self.ops: list[_Op] = []
        for name in schedule.static_order:
            decl = graph.decl(name)
            self.ops.append(
                (name, graph.blocks[name].evaluate, tuple(self.slot[n] for n in decl.inputs), self.slot[decl.output])
            )

    def evaluate(self, state: State, t: float) -> list[float]:
        values = [0.0] * self.n_nets
        for slot, value in zip(self.state_out, state):
            values[slot] = float(value)
        for name, fn, ins, out in self.ops:
            result = fn([values[i] for i in ins], t)
            if not math.isfinite(result):
                raise DivergedError(name, t)
            values[out] = result
        return values

    def derivative_of(self, values: list[float]) -> State:
        return np.array([values[i] for i in self.state_in], dtype=np.float64)

    def rhs(self, state: State, t: float) -> State:
        return self.derivative_of(self.evaluate(state, t))

    def check_state(self, state: State, t: float) -> None:
        bad = np.flatnonzero(~np.isfinite(state))
        if bad.size:
            raise DivergedError(self.state_names[int(bad[0])], t)


def _resolve_limit(doc: NetlistDoc, limits: MachineLimits | None) -> MachineLimits:
    if doc.sim.limit is not None:
        return MachineLimits(max_abs=doc.sim.limit)
    return limits or MachineLimits()


def run(doc: NetlistDoc, *, limits: MachineLimits | None = None, graph: CircuitGraph | None = None) -> SimResult:
    """Integrate the circuit from t=0 to the directive's ``t_end``.

    Args:
        doc: Parsed netlist.
        limits: Fallback machine limit when the ``sim`` line has no ``limit=``.
        graph: Already validated graph of ``doc``; validated here when omitted.

    Raises:
        NetlistError: The document does not validate.
        DivergedError: A block or state became NaN/Inf.
    """
    graph = graph or validate(doc)
    program = _Program(graph, compile_schedule(graph))
    sim = doc.sim
    grid = TimeGrid.from_span(sim.t_end, sim.dt)
    step = STEPPERS[sim.method]
    if grid.dt != sim.dt:
        logger.debug("effective dt %r (requested %r)", grid.dt, sim.dt)

    probes = doc.probe_nets
    probe_slots = [program.slot[net] for net in probes]
    recorded = np.empty((len(probes), grid.n_steps + 1), dtype=np.float64)

    state = program.initial.copy()
    values = program.evaluate(state, grid.t_start)
    recorded[:, 0] = [values[i] for i in probe_slots]
    for k in range(grid.n_steps):
        t = grid.time_at(k)
        state = step(program.rhs, state, t, grid.dt, program.derivative_of(values))
        t_next = grid.time_at(k + 1)
        program.check_state(state, t_next)
        values = program.evaluate(state, t_next)
        recorded[:, k + 1] = [values[i] for i in probe_slots]

    traces = {net: Trace(grid=grid, values=recorded[i], name=net) for i, net in enumerate(probes)}
    limit = _resolve_limit(doc, limits)
    overloads = tuple(
        Overload(net=net, time=t, value=v) for net, trace in traces.items() for t, v in check_overload(trace, limit)
    )
    for net in dict.fromkeys(o.net for o in overloads):
        hits = [o for o in overloads if o.net == net]
        peak = max(abs(o.value) for o in hits)
        logger.warning(
            "overload on net %s: %d sample(s) beyond +/-%g, first at t=%g, peak |%g|",
            net,
            len(hits),
            limit.max_abs,
            hits[0].time,
            peak,
        )
    logger.debug("run finished: %d %s steps", grid.n_steps, sim.method.value)
    return SimResult(
        grid=grid,
        traces=traces,
        overloads=overloads,
        method=sim.method,
        steps=grid.n_steps,
        limit=limit.max_abs,
    )
