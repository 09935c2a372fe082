from __future__ import annotations

from patchsim.blocks.base import Block
from patchsim.blocks.continuous import (
    AdderBlock,
    IntegratorBlock,
    InvBlock,
    MultBlock,
    PotBlock,
    eval_adder,
    eval_inv,
    eval_mult,
    eval_pot,
)
from patchsim.blocks.conversion import DIGIT_HIGH, DIGIT_LOW, AdcBlock, DacBlock, adc, dac
from patchsim.blocks.discontinuous import (
    AfgBlock,
    ContactStyle,
    LimiterBlock,
    LimiterMode,
    StepGenBlock,
    StepSchedule,
    afg_breakpoints,
    afg_max_error,
    eval_afg,
    eval_limiter,
    eval_stepgen,
)
from patchsim.blocks.instantiate import instantiate
from patchsim.blocks.mechanical import DiskIntegratorParams, disk_rotations
from patchsim.blocks.registry import KINDS, locate_kind
from patchsim.blocks.sources import ConstBlock, FourierSquareSource, SineSource, eval_fourier_square, gibbs_overshoot

__all__ = [
    "DIGIT_HIGH",
    "DIGIT_LOW",
    "KINDS",
    "AdcBlock",
    "AdderBlock",
    "AfgBlock",
    "Block",
    "ConstBlock",
    "ContactStyle",
    "DacBlock",
    "DiskIntegratorParams",
    "FourierSquareSource",
    "IntegratorBlock",
    "InvBlock",
    "LimiterBlock",
    "LimiterMode",
    "MultBlock",
    "PotBlock",
    "SineSource",
    "StepGenBlock",
    "StepSchedule",
    "adc",
    "afg_breakpoints",
    "afg_max_error",
    "dac",
    "disk_rotations",
    "eval_adder",
    "eval_afg",
    "eval_fourier_square",
    "eval_inv",
    "eval_limiter",
    "eval_mult",
    "eval_pot",
    "eval_stepgen",
    "gibbs_overshoot",
    "instantiate",
    "locate_kind",
]
