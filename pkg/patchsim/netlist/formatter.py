"""Canonical netlist text.

Blocks keep their order; parameter keys are sorted, followed by ``in=`` and
``out=``. Comments and blank lines are not preserved.
"""

from __future__ import annotations

from patchsim.netlist.document import BlockDecl, NetlistDoc, ParamValue, SimDirective


def _value(value: ParamValue) -> str:
    if isinstance(value, str):
        return value
    if isinstance(value, tuple):
        return ",".join(repr(float(v)) for v in value)
    return repr(float(value))


def format_block(decl: BlockDecl) -> str:
    parts = ["block", decl.kind, decl.name]
    parts += [f"{key}={_value(decl.params[key])}" for key in sorted(decl.params)]
    if decl.inputs:
        parts.append("in=" + ",".join(decl.inputs))
    parts.append(f"out={decl.output}")
    return " ".join(parts)


def format_sim(sim: SimDirective) -> str:
    line = f"sim dt={sim.dt!r} t={sim.t_end!r} method={sim.method.value}"
    if sim.limit is not None:
        line += f" limit={sim.limit!r}"
    return line


def format_netlist(doc: NetlistDoc) -> str:
    lines = [format_block(decl) for decl in doc.blocks]
    lines += [f"probe {probe.net}" for probe in doc.probes]
    lines.append(format_sim(doc.sim))
    return "\n".join(lines) + "\n"
