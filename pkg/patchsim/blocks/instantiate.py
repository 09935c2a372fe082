"""Build block evaluators from netlist declarations.

The declaration's ``kind`` is resolved through the registry and its raw
``params`` are validated by the kind's model. Failures surface as
:class:`BlockParamError` with a ``full_key`` such as ``A1.xs[2]`` and the
pydantic error chained as ``__cause__``.
"""

from __future__ import annotations

from typing import TYPE_CHECKING

from pydantic import ValidationError

from patchsim.blocks.base import Block
from patchsim.blocks.registry import locate_kind
from patchsim.errors import BlockParamError

if TYPE_CHECKING:
    from patchsim.netlist.document import BlockDecl


def _format_full_key(path: tuple[str | int, ...]) -> str:
    """Dotted key with bracket notation for list indices.

    Examples::

        _format_full_key(("A1", "xs", 2)) -> "A1.xs[2]"
        _format_full_key(("P16", "gain")) -> "P16.gain"
    """
    parts: list[str] = []
    for segment in path:
        if isinstance(segment, int):
            parts.append(f"[{segment}]")
        else:
            if parts:
                parts.append(".")
            parts.append(segment)
    return "".join(parts)


def instantiate(decl: BlockDecl) -> Block:
    cls = locate_kind(decl.kind, line=decl.line)
    try:
        return cls.model_validate(dict(decl.params))
    except ValidationError as exc:
        first = exc.errors()[0]
        loc = tuple(p for p in first["loc"] if isinstance(p, (str, int)))
        raise BlockParamError(
            block=decl.name,
            kind=decl.kind,
            full_key=_format_full_key((decl.name, *loc)),
            reason=first["msg"],
            line=decl.line,
        ) from exc
