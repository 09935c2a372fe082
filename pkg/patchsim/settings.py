"""Run settings read from keyword arguments and an optional YAML file.

Environment variables and dotenv files are not consulted; the command line
and its ``--config`` file are the only inputs.
"""

from __future__ import annotations

from contextvars import ContextVar
from pathlib import Path
from typing import Any, Literal

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict
from pydantic_settings.sources import PydanticBaseSettingsSource, YamlConfigSettingsSource

from patchsim.core.scaling import DEFAULT_MACHINE_LIMIT

# Read by ``settings_customise_sources``, which is a classmethod and cannot
# see the instance being built.
_yaml_override: ContextVar[tuple[str, str] | None] = ContextVar("patchsim_yaml_override", default=None)

LogLevel = Literal["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]


class BaseSettingsWithYaml(BaseSettings):
    """Settings whose only sources are init kwargs and a YAML file.

    YAML path resolution (highest precedence first):

    1. ``_yaml_file=`` init kwarg
    2. ``model_config["yaml_file"]``
    3. no YAML source

    Init kwargs always win over YAML values.

    Example:
        >>> PatchsimSettings(_yaml_file="patchsim.yaml", plot_width=1024)
    """

    def __init__(
        self,
        _yaml_file: str | Path | None = None,
        _yaml_file_encoding: str | None = None,
        **values: Any,
    ) -> None:
        if _yaml_file is None:
            super().__init__(**values)
            return
        token = _yaml_override.set((str(_yaml_file), _yaml_file_encoding or "utf-8"))
        try:
            super().__init__(**values)
        finally:
            _yaml_override.reset(token)

    @classmethod
    def settings_customise_sources(
        cls: type[BaseSettingsWithYaml],
        settings_cls: type[BaseSettings],
        init_settings: PydanticBaseSettingsSource,
        env_settings: PydanticBaseSettingsSource,
        dotenv_settings: PydanticBaseSettingsSource,
        file_secret_settings: PydanticBaseSettingsSource,
    ) -> tuple[PydanticBaseSettingsSource, ...]:
        override = _yaml_override.get()
        if override is not None:
            yaml_file: str | None = override[0]
            yaml_file_encoding: str = override[1]
        else:
            config: SettingsConfigDict = cls.model_config
            yaml_file = config.get("yaml_file")  # type: ignore[assignment]
            yaml_file_encoding = config.get("yaml_file_encoding") or "utf-8"

        if not yaml_file:
            return (init_settings,)
        yaml_settings = YamlConfigSettingsSource(
            settings_cls,
            yaml_file=yaml_file,
            yaml_file_encoding=yaml_file_encoding,
        )
        return (init_settings, yaml_settings)


class PatchsimSettings(BaseSettingsWithYaml):
    model_config = SettingsConfigDict(extra="forbid", frozen=True)

    machine_limit: float = Field(default=DEFAULT_MACHINE_LIMIT, gt=0.0, allow_inf_nan=False)
    plot_width: int = Field(default=800, ge=64)
    plot_height: int = Field(default=480, ge=64)
    plot_max_points: int = Field(default=2000, ge=2)
    log_level: LogLevel = "WARNING"
    demo_dir: Path = Path("demo-out")


def load_settings(config: str | Path | None = None, **overrides: Any) -> PatchsimSettings:
    """Settings from ``config`` (if given) with ``overrides`` on top."""
    if config is None:
        return PatchsimSettings(**overrides)
    path = Path(config)
    if not path.is_file():
        raise FileNotFoundError(f"config file not found: {path}")
    return PatchsimSettings(_yaml_file=path, **overrides)
