"""Shared test fixtures and utilities for patchsim tests."""

from __future__ import annotations

import logging
from collections.abc import Callable, Generator
from pathlib import Path
from tempfile import NamedTemporaryFile

import pytest
import yaml

from patchsim.engine.runner import SimResult, run
from patchsim.netlist.document import NetlistDoc
from patchsim.netlist.parser import parse

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture(scope="session")
def springmass_text() -> str:
    """The spring-mass netlist shipped as a fixture."""
    return (FIXTURES / "springmass.net").read_text(encoding="utf-8")


@pytest.fixture(scope="session")
def springmass_doc(springmass_text: str) -> NetlistDoc:
    return parse(springmass_text)


@pytest.fixture(scope="session")
def springmass_result(springmass_doc: NetlistDoc) -> SimResult:
    """One rk4 run of the spring-mass fixture, shared across tests."""
    return run(springmass_doc)


@pytest.fixture
def write_netlist(tmp_path: Path) -> Callable[[str, str], Path]:
    """Write netlist text to a file under ``tmp_path`` and return its path."""

    def _write(text: str, name: str = "circuit.net") -> Path:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return path

    return _write


@pytest.fixture
def temp_yaml_file() -> Generator[Path, None, None]:
    """Create a temporary YAML file for testing."""
    with NamedTemporaryFile(mode="w", suffix=".yaml", delete=False) as f:
        temp_path = Path(f.name)
    try:
        yield temp_path
    finally:
        if temp_path.exists():
            temp_path.unlink()


@pytest.fixture
def settings_yaml(temp_yaml_file: Path) -> Path:
    """A settings file overriding the limit and the plot geometry."""
    temp_yaml_file.write_text(
        yaml.dump({"machine_limit": 10.0, "plot_width": 640, "plot_height": 400, "log_level": "DEBUG"})
    )
    return temp_yaml_file


@pytest.fixture
def invalid_yaml_file(temp_yaml_file: Path) -> Path:
    temp_yaml_file.write_text("invalid: yaml: content: [unclosed")
    return temp_yaml_file


@pytest.fixture(autouse=True)
def reset_patchsim_logger() -> Generator[None, None, None]:
    """Undo handlers the CLI installs so caplog sees library records again."""
    yield
    logger = logging.getLogger("patchsim")
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
    logger.setLevel(logging.NOTSET)
    logger.propagate = True


def squash(text: str) -> str:
    """Collapse whitespace so wrapped console output can be matched."""
    return " ".join(text.split())
