"""Lookup from netlist kind tags to block classes."""

from __future__ import annotations

from types import MappingProxyType

from patchsim.blocks.base import Block
from patchsim.blocks.continuous import AdderBlock, IntegratorBlock, InvBlock, MultBlock, PotBlock
from patchsim.blocks.conversion import AdcBlock, DacBlock
from patchsim.blocks.discontinuous import AfgBlock, LimiterBlock, StepGenBlock
from patchsim.blocks.sources import ConstBlock, FourierSquareSource, SineSource
from patchsim.errors import UnknownKindError

_KINDS: tuple[type[Block], ...] = (
    ConstBlock,
    SineSource,
    FourierSquareSource,
    AdderBlock,
    InvBlock,
    PotBlock,
    MultBlock,
    IntegratorBlock,
    LimiterBlock,
    AfgBlock,
    StepGenBlock,
    AdcBlock,
    DacBlock,
)

KINDS: MappingProxyType[str, type[Block]] = MappingProxyType({cls.tag: cls for cls in _KINDS})


def locate_kind(tag: str, line: int = 0, column: int | None = None) -> type[Block]:
    """Resolve a kind tag to its block class.

    Raises:
        UnknownKindError: If ``tag`` names no registered kind; the error
            carries ``line``/``column`` of the declaration.
    """
    try:
        return KINDS[tag]
    except KeyError:
        raise UnknownKindError(tag, line=line, column=column) from None
