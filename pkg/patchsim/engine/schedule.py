"""Compile a validated circuit into an evaluation schedule."""

from __future__ import annotations

import logging

import networkx as nx
from pydantic import BaseModel, ConfigDict

from patchsim.blocks.continuous import IntegratorBlock
from patchsim.netlist.graph import CircuitGraph

logger = logging.getLogger(__name__)


class StateEntry(BaseModel):
    """One integrator: its output net is a state, its input net the derivative."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    block: str
    ic: float
    input_net: str
    output_net: str


class Schedule(BaseModel):
    """Integrators as states plus a topological order of every other block.

    Evaluating ``static_order`` after the state nets are written never reads a
    net that has not been written yet.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    state_blocks: tuple[StateEntry, ...]
    static_order: tuple[str, ...]


def compile_schedule(graph: CircuitGraph) -> Schedule:
    position = {decl.name: i for i, decl in enumerate(graph.doc.blocks)}
    states: list[StateEntry] = []
    for decl in graph.doc.blocks:
        block = graph.blocks[decl.name]
        if isinstance(block, IntegratorBlock):
            states.append(StateEntry(block=decl.name, ic=block.ic, input_net=decl.inputs[0], output_net=decl.output))

    # Ties are broken by declaration order, so the schedule is deterministic.
    order = nx.lexicographical_topological_sort(graph.dataflow, key=lambda name: position[name])
    static = tuple(name for name in order if not graph.blocks[name].stateful)
    logger.debug("schedule: %d states, static order %s", len(states), static)
    return Schedule(state_blocks=tuple(states), static_order=static)
