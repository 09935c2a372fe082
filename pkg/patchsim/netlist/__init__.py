from __future__ import annotations

from patchsim.netlist.document import BlockDecl, IntegrationMethod, NetlistDoc, ProbeDecl, SimDirective
from patchsim.netlist.formatter import format_block, format_netlist
from patchsim.netlist.graph import CircuitGraph, validate
from patchsim.netlist.parser import parse, parse_file

__all__ = [
    "BlockDecl",
    "CircuitGraph",
    "IntegrationMethod",
    "NetlistDoc",
    "ProbeDecl",
    "SimDirective",
    "format_block",
    "format_netlist",
    "parse",
    "parse_file",
    "validate",
]
