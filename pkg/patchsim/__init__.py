"""patchsim: analog-computer netlist simulator and analog/digital representation checks."""

from __future__ import annotations

from patchsim.core import MachineLimits, ScaleMap, TimeGrid, Trace, trace_sample
from patchsim.engine import SimResult, convergence_order, drift_experiment, residual, run
from patchsim.errors import (
    ContractError,
    DivergedError,
    MalformedDigitError,
    NetlistError,
    OutOfRangeError,
    PatchsimError,
)
from patchsim.netlist import NetlistDoc, format_netlist, parse, parse_file, validate
from patchsim.repclass import NumeralString, RepScheme, Verdict, affine_transform, classify, digital_value
from patchsim.settings import BaseSettingsWithYaml, PatchsimSettings

__all__ = [
    "BaseSettingsWithYaml",
    "ContractError",
    "DivergedError",
    "MachineLimits",
    "MalformedDigitError",
    "NetlistDoc",
    "NetlistError",
    "NumeralString",
    "OutOfRangeError",
    "PatchsimError",
    "PatchsimSettings",
    "RepScheme",
    "ScaleMap",
    "SimResult",
    "TimeGrid",
    "Trace",
    "Verdict",
    "affine_transform",
    "classify",
    "convergence_order",
    "digital_value",
    "drift_experiment",
    "format_netlist",
    "parse",
    "parse_file",
    "residual",
    "run",
    "trace_sample",
    "validate",
]
