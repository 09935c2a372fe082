"""Structured form of a netlist document."""

from __future__ import annotations

import re
from enum import StrEnum
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from patchsim.blocks.registry import KINDS
from patchsim.core.grid import MAX_STEPS

IDENTIFIER = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")

ParamValue = float | tuple[float, ...] | str


def _identifier(value: str) -> str:
    if not IDENTIFIER.fullmatch(value):
        raise ValueError(f"'{value}' is not an identifier")
    return value


class IntegrationMethod(StrEnum):
    EULER = "euler"
    RK4 = "rk4"


class BlockDecl(BaseModel):
    """One ``block`` line: kind, parameters, input nets and the driven net.

    Parameters a kind declares as list-valued are stored as tuples even when
    written with a single value.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    name: str
    kind: str
    params: dict[str, ParamValue] = Field(default_factory=dict)
    inputs: tuple[str, ...] = ()
    output: str
    line: int = Field(default=0, ge=0)

    check_name = field_validator("name", "output")(_identifier)

    @field_validator("inputs")
    @classmethod
    def _check_inputs(cls, value: tuple[str, ...]) -> tuple[str, ...]:
        for net in value:
            _identifier(net)
        return value

    @model_validator(mode="before")
    @classmethod
    def _normalize_lists(cls, data: Any) -> Any:
        if not isinstance(data, dict):
            return data
        kind_cls = KINDS.get(str(data.get("kind", "")))
        params = data.get("params")
        if kind_cls is None or not isinstance(params, dict):
            return data
        normalized = {
            key: (value,) if key in kind_cls.list_params and isinstance(value, (int, float)) else value
            for key, value in params.items()
        }
        return {**data, "params": normalized}


class ProbeDecl(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    net: str
    line: int = Field(default=0, ge=0)

    check_net = field_validator("net")(_identifier)


class SimDirective(BaseModel):
    """The ``sim`` line. ``limit=None`` defers to the configured machine limit."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    dt: float = Field(gt=0.0)
    t_end: float = Field(gt=0.0)
    method: IntegrationMethod = IntegrationMethod.RK4
    limit: float | None = Field(default=None, gt=0.0)
    line: int = Field(default=0, ge=0)

    @model_validator(mode="after")
    def _bounded_steps(self) -> SimDirective:
        if self.t_end / self.dt > MAX_STEPS:
            raise ValueError(f"t_end/dt must not exceed {MAX_STEPS:.0e}")
        return self


class NetlistDoc(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    blocks: tuple[BlockDecl, ...] = ()
    probes: tuple[ProbeDecl, ...] = ()
    sim: SimDirective

    @model_validator(mode="after")
    def _unique_names(self) -> NetlistDoc:
        seen: set[str] = set()
        for decl in self.blocks:
            if decl.name in seen:
                raise ValueError(f"duplicate block name '{decl.name}'")
            seen.add(decl.name)
        return self

    @property
    def probe_nets(self) -> tuple[str, ...]:
        return tuple(p.net for p in self.probes)

    def block(self, name: str) -> BlockDecl:
        for decl in self.blocks:
            if decl.name == name:
                return decl
        raise KeyError(name)

    def driver_of(self, net: str) -> BlockDecl | None:
        return next((decl for decl in self.blocks if decl.output == net), None)

    def structure(self) -> dict[str, Any]:
        """Document content without source line numbers."""
        return self.model_dump(
            exclude={
                "blocks": {"__all__": {"line"}},
                "probes": {"__all__": {"line"}},
                "sim": {"line"},
            }
        )

    def structurally_equal(self, other: NetlistDoc) -> bool:
        return self.structure() == other.structure()
