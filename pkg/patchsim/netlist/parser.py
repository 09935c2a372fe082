"""Line-oriented netlist parser.

Grammar (one declaration per line, ``#`` starts a comment)::

    block <kind> <name> [key=value ...] [in=<net>[,<net>...]] out=<net>
    probe <net>
    sim dt=<real> t=<real> method=<euler|rk4> [limit=<real>]

A value is a number, a comma list of numbers, or an identifier.
"""

from __future__ import annotations

import logging
import math
import re
from dataclasses import dataclass
from pathlib import Path

from pydantic import ValidationError

from patchsim.blocks.registry import locate_kind
from patchsim.errors import DuplicateBlockError, MissingSimError, NetlistSyntaxError
from patchsim.netlist.document import IDENTIFIER, BlockDecl, NetlistDoc, ParamValue, ProbeDecl, SimDirective

logger = logging.getLogger(__name__)

_TOKEN = re.compile(r"\S+")
_NUMBER = re.compile(r"[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?")
_SIM_KEYS = frozenset({"dt", "t", "method", "limit"})


@dataclass(frozen=True, slots=True)
class _Token:
    text: str
    column: int


def _tokenize(line: str) -> list[_Token]:
    code = line.split("#", 1)[0]
    return [_Token(m.group(), m.start() + 1) for m in _TOKEN.finditer(code)]


def _split_pair(tok: _Token, lineno: int) -> tuple[str, str]:
    key, sep, value = tok.text.partition("=")
    if not sep or not key or not value:
        raise NetlistSyntaxError(f"expected key=value, got '{tok.text}'", lineno, tok.column)
    if not IDENTIFIER.fullmatch(key):
        raise NetlistSyntaxError(f"'{key}' is not a valid parameter name", lineno, tok.column)
    return key, value


def _number(text: str, lineno: int, column: int) -> float:
    if not _NUMBER.fullmatch(text):
        raise NetlistSyntaxError(f"'{text}' is not a number", lineno, column)
    value = float(text)
    if not math.isfinite(value):
        raise NetlistSyntaxError(f"'{text}' is not finite", lineno, column)
    return value


def _param_value(text: str, lineno: int, column: int) -> ParamValue:
    if "," in text:
        return tuple(_number(part, lineno, column) for part in text.split(","))
    if IDENTIFIER.fullmatch(text):
        return text
    return _number(text, lineno, column)


def _nets(text: str, lineno: int, column: int) -> tuple[str, ...]:
    nets = tuple(text.split(","))
    for net in nets:
        if not IDENTIFIER.fullmatch(net):
            raise NetlistSyntaxError(f"'{net}' is not a valid net name", lineno, column)
    return nets


def _invalid(exc: ValidationError, lineno: int, column: int) -> NetlistSyntaxError:
    first = exc.errors()[0]
    field = ".".join(str(p) for p in first["loc"])
    return NetlistSyntaxError(f"{field}: {first['msg']}" if field else first["msg"], lineno, column)


def _parse_block(tokens: list[_Token], lineno: int) -> BlockDecl:
    if len(tokens) < 3:
        raise NetlistSyntaxError("expected 'block <kind> <name> ... out=<net>'", lineno, tokens[0].column)
    kind_tok, name_tok = tokens[1], tokens[2]
    locate_kind(kind_tok.text, line=lineno, column=kind_tok.column)
    if not IDENTIFIER.fullmatch(name_tok.text):
        raise NetlistSyntaxError(f"'{name_tok.text}' is not a valid block name", lineno, name_tok.column)

    params: dict[str, ParamValue] = {}
    inputs: tuple[str, ...] = ()
    output: str | None = None
    seen: set[str] = set()
    for tok in tokens[3:]:
        key, value = _split_pair(tok, lineno)
        if key in seen:
            raise NetlistSyntaxError(f"'{key}' given twice", lineno, tok.column)
        seen.add(key)
        if key == "in":
            inputs = _nets(value, lineno, tok.column)
        elif key == "out":
            if not IDENTIFIER.fullmatch(value):
                raise NetlistSyntaxError(f"'{value}' is not a valid net name", lineno, tok.column)
            output = value
        else:
            params[key] = _param_value(value, lineno, tok.column)
    if output is None:
        raise NetlistSyntaxError(f"block '{name_tok.text}' has no out=<net>", lineno, tokens[-1].column)
    try:
        return BlockDecl(
            name=name_tok.text, kind=kind_tok.text, params=params, inputs=inputs, output=output, line=lineno
        )
    except ValidationError as exc:
        raise _invalid(exc, lineno, tokens[0].column) from exc


def _parse_probe(tokens: list[_Token], lineno: int) -> ProbeDecl:
    if len(tokens) != 2:
        raise NetlistSyntaxError("expected 'probe <net>'", lineno, tokens[0].column)
    net = tokens[1]
    if not IDENTIFIER.fullmatch(net.text):
        raise NetlistSyntaxError(f"'{net.text}' is not a valid net name", lineno, net.column)
    return ProbeDecl(net=net.text, line=lineno)


def _parse_sim(tokens: list[_Token], lineno: int) -> SimDirective:
    fields: dict[str, object] = {}
    for tok in tokens[1:]:
        key, value = _split_pair(tok, lineno)
        if key not in _SIM_KEYS:
            raise NetlistSyntaxError(f"unknown sim option '{key}'", lineno, tok.column)
        if key in fields:
            raise NetlistSyntaxError(f"'{key}' given twice", lineno, tok.column)
        fields[key] = value if key == "method" else _number(value, lineno, tok.column)
    missing = sorted({"dt", "t", "method"} - fields.keys())
    if missing:
        raise NetlistSyntaxError(f"sim directive lacks {', '.join(missing)}", lineno, tokens[0].column)
    fields["t_end"] = fields.pop("t")
    try:
        return SimDirective.model_validate({**fields, "line": lineno})
    except ValidationError as exc:
        raise _invalid(exc, lineno, tokens[0].column) from exc


def parse(text: str) -> NetlistDoc:
    """Parse netlist text into a :class:`NetlistDoc`.

    Raises:
        NetlistSyntaxError: Malformed line (with line and column).
        UnknownKindError: ``block`` line naming an unregistered kind.
        DuplicateBlockError: Two blocks share a name; both lines are reported.
        MissingSimError: No ``sim`` directive.
    """
    blocks: list[BlockDecl] = []
    probes: list[ProbeDecl] = []
    sim: SimDirective | None = None
    first_line: dict[str, int] = {}
    probed: dict[str, int] = {}
    lines = text.splitlines()

    for lineno, raw in enumerate(lines, start=1):
        tokens = _tokenize(raw)
        if not tokens:
            continue
        head = tokens[0].text
        if head == "block":
            decl = _parse_block(tokens, lineno)
            if decl.name in first_line:
                raise DuplicateBlockError(decl.name, (first_line[decl.name], lineno))
            first_line[decl.name] = lineno
            blocks.append(decl)
        elif head == "probe":
            probe = _parse_probe(tokens, lineno)
            if probe.net in probed:
                raise NetlistSyntaxError(
                    f"net '{probe.net}' already probed on line {probed[probe.net]}", lineno, tokens[1].column
                )
            probed[probe.net] = lineno
            probes.append(probe)
        elif head == "sim":
            if sim is not None:
                raise NetlistSyntaxError(f"second sim directive (first on line {sim.line})", lineno, tokens[0].column)
            sim = _parse_sim(tokens, lineno)
        else:
            raise NetlistSyntaxError(f"unknown directive '{head}'", lineno, tokens[0].column)

    if sim is None:
        raise MissingSimError(line=max(len(lines), 1))
    logger.debug("parsed %d blocks, %d probes", len(blocks), len(probes))
    return NetlistDoc(blocks=tuple(blocks), probes=tuple(probes), sim=sim)


def parse_file(path: str | Path) -> NetlistDoc:
    return parse(Path(path).read_text(encoding="utf-8"))
