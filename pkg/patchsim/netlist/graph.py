"""Validation of a parsed netlist into a dataflow graph.

Nodes are block names; an edge ``a -> b`` means ``b`` reads the net ``a``
drives. Edges into integrators are left out of the algebraic graph because an
integrator's output depends on its input only through its state, so any
cycle that survives has no integrator in it and cannot be ordered.
"""

from __future__ import annotations

import logging
from collections.abc import Mapping
from dataclasses import dataclass
from types import MappingProxyType

import networkx as nx

from patchsim.blocks.base import Block
from patchsim.blocks.instantiate import instantiate
from patchsim.blocks.registry import locate_kind
from patchsim.errors import AlgebraicLoopError, ArityError, MultiplyDrivenNetError, UndrivenNetError
from patchsim.netlist.document import BlockDecl, NetlistDoc

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class CircuitGraph:
    """A netlist that passed every structural check.

    Attributes:
        doc: The source document.
        blocks: Block evaluators keyed by block name, in declaration order.
        drivers: Net name to the name of the block driving it.
        dataflow: Frozen ``networkx.DiGraph`` of algebraic dependencies.
    """

    doc: NetlistDoc
    blocks: Mapping[str, Block]
    drivers: Mapping[str, str]
    dataflow: nx.DiGraph[str]

    @property
    def integrators(self) -> tuple[str, ...]:
        return tuple(name for name, block in self.blocks.items() if block.stateful)

    @property
    def memoryless(self) -> tuple[str, ...]:
        return tuple(name for name, block in self.blocks.items() if not block.stateful)

    def decl(self, name: str) -> BlockDecl:
        return self.doc.block(name)

    @property
    def smooth(self) -> bool:
        return all(type(block).smooth for block in self.blocks.values())


def _check_arity(decl: BlockDecl) -> None:
    cls = locate_kind(decl.kind, line=decl.line)
    if not cls.accepts(len(decl.inputs)):
        raise ArityError(decl.name, decl.kind, len(decl.inputs), cls.arity_text(), decl.line)


def _drivers(doc: NetlistDoc) -> dict[str, str]:
    drivers: dict[str, str] = {}
    for decl in doc.blocks:
        if decl.output in drivers:
            raise MultiplyDrivenNetError(decl.output, (drivers[decl.output], decl.name), decl.line)
        drivers[decl.output] = decl.name
    return drivers


def _dataflow(doc: NetlistDoc, blocks: dict[str, Block], drivers: dict[str, str]) -> nx.DiGraph[str]:
    graph: nx.DiGraph[str] = nx.DiGraph()
    graph.add_nodes_from(decl.name for decl in doc.blocks)
    for decl in doc.blocks:
        if blocks[decl.name].stateful:
            continue
        for net in decl.inputs:
            graph.add_edge(drivers[net], decl.name, net=net)
    return graph


def _reject_algebraic_loops(doc: NetlistDoc, graph: nx.DiGraph[str]) -> None:
    try:
        edges = nx.find_cycle(graph)
    except nx.NetworkXNoCycle:
        return
    cycle = [u for u, _v, *_ in edges]
    raise AlgebraicLoopError(cycle, line=doc.block(cycle[0]).line)


def validate(doc: NetlistDoc) -> CircuitGraph:
    """Check a parsed document and build its :class:`CircuitGraph`.

    Raises:
        ArityError: Input count does not fit the kind.
        BlockParamError: Parameters fail the kind's validation.
        MultiplyDrivenNetError: Two blocks drive one net.
        UndrivenNetError: A block input or probe reads a net nobody drives.
        AlgebraicLoopError: A cycle without an integrator.
    """
    for decl in doc.blocks:
        _check_arity(decl)
    blocks = {decl.name: instantiate(decl) for decl in doc.blocks}
    drivers = _drivers(doc)
    for decl in doc.blocks:
        for net in decl.inputs:
            if net not in drivers:
                raise UndrivenNetError(net, decl.line)
    for probe in doc.probes:
        if probe.net not in drivers:
            raise UndrivenNetError(probe.net, probe.line)

    graph = _dataflow(doc, blocks, drivers)
    _reject_algebraic_loops(doc, graph)
    logger.debug("validated %d blocks (%d integrators)", len(blocks), sum(b.stateful for b in blocks.values()))
    return CircuitGraph(
        doc=doc,
        blocks=MappingProxyType(blocks),
        drivers=MappingProxyType(drivers),
        dataflow=nx.freeze(graph),
    )
