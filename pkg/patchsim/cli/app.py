"""``patchsim`` command line.

Exit codes: 0 success, 1 parse/validation/input error (including a block
that rejects its input during a run, and unknown demo names), 2 diverged
run, 3 scheme not analog.
"""

from __future__ import annotations

import logging
import sys
from pathlib import Path
from typing import Annotated

import typer
import yaml
from pydantic import ValidationError
from rich.console import Console
from rich.table import Table

from patchsim.cli.demos import DemoName, run_demo
from patchsim.cli.plotting import PlotSpec, plot_svg
from patchsim.core.csvio import write_csv, write_csv_stream
from patchsim.core.scaling import MachineLimits
from patchsim.engine.runner import SimResult, run
from patchsim.errors import ContractError, DivergedError, MalformedDigitError, NetlistError, PatchsimError
from patchsim.log import configure_logging
from patchsim.netlist.formatter import format_netlist
from patchsim.netlist.parser import parse_file
from patchsim.repclass.io import read_scheme_csv
from patchsim.repclass.numerals import NumeralString, digital_value
from patchsim.repclass.scheme import VerdictTag, classify
from patchsim.settings import PatchsimSettings, load_settings

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_DIVERGED = 2
EXIT_NOT_ANALOG = 3

app = typer.Typer(
    name="patchsim",
    help="Simulate patched analog-computer netlists and classify representation schemes.",
    no_args_is_help=True,
    add_completion=False,
    pretty_exceptions_enable=False,
)

ConfigOption = Annotated[
    Path | None,
    typer.Option("--config", help="YAML settings file.", dir_okay=False),
]


def _setup(config: Path | None) -> PatchsimSettings:
    try:
        settings = load_settings(config)
    except (FileNotFoundError, ValidationError, yaml.YAMLError) as exc:
        configure_logging()
        logger.error("bad configuration: %s", exc)
        raise typer.Exit(EXIT_INVALID) from exc
    configure_logging(settings.log_level)
    return settings


def _console() -> Console:
    return Console(file=sys.stdout, highlight=False, soft_wrap=True)


def _write_report(result: SimResult, path: Path) -> None:
    lines = [
        f"method = {result.method.value}",
        f"steps = {result.steps}",
        f"dt = {result.grid.dt!r}",
        f"limit = {result.limit!r}",
        f"overloaded_nets = {len(result.overloaded_nets())}",
    ]
    for net in result.overloaded_nets():
        hits = [o for o in result.overloads if o.net == net]
        peak = max(abs(o.value) for o in hits)
        lines.append(f"overload {net}: {len(hits)} sample(s), first t={hits[0].time!r}, peak |{peak!r}|")
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text("".join(f"{line}\n" for line in lines), encoding="utf-8")


@app.command("run")
def run_command(
    netlist: Annotated[Path, typer.Argument(help="Netlist file.")],
    output: Annotated[Path | None, typer.Option("-o", "--output", help="CSV output; stdout if omitted.")] = None,
    svg: Annotated[Path | None, typer.Option("--svg", help="Also plot every probed net to this SVG.")] = None,
    report: Annotated[Path | None, typer.Option("--report", help="Write run summary and overloads here.")] = None,
    config: ConfigOption = None,
) -> None:
    """Parse, validate and run a netlist, writing the probed traces as CSV."""
    settings = _setup(config)
    try:
        doc = parse_file(netlist)
        result = run(doc, limits=MachineLimits(max_abs=settings.machine_limit))
    except OSError as exc:
        logger.error("cannot read %s: %s", netlist, exc)
        raise typer.Exit(EXIT_INVALID) from exc
    except NetlistError as exc:
        logger.error("%s: %s", netlist, exc)
        raise typer.Exit(EXIT_INVALID) from exc
    except DivergedError as exc:
        logger.error("%s: %s", netlist, exc)
        raise typer.Exit(EXIT_DIVERGED) from exc
    except PatchsimError as exc:
        logger.error("%s: run failed: %s", netlist, exc)
        raise typer.Exit(EXIT_INVALID) from exc

    if not result.traces:
        logger.warning("%s: no probe lines; nothing to write", netlist)
    elif output is None:
        write_csv_stream(list(result.traces.values()), sys.stdout)
    else:
        write_csv(list(result.traces.values()), output)
    if svg is not None and result.traces:
        spec = PlotSpec.for_nets(
            list(result.traces), width=settings.plot_width, height=settings.plot_height, title=netlist.name
        )
        plot_svg(result, spec, svg, max_points=settings.plot_max_points)
    if report is not None:
        _write_report(result, report)


@app.command("demo")
def demo_command(
    name: Annotated[str, typer.Argument(help=f"Demo to run: {', '.join(d.value for d in DemoName)}.")],
    out_dir: Annotated[Path | None, typer.Option("-d", "--out-dir", help="Output directory.")] = None,
    config: ConfigOption = None,
) -> None:
    """Run a named demonstration and print its checked quantities."""
    settings = _setup(config)
    try:
        demo = DemoName(name.lower())
    except ValueError as exc:
        logger.error("unknown demo %r; choose one of %s", name, ", ".join(d.value for d in DemoName))
        raise typer.Exit(EXIT_INVALID) from exc
    outcome = run_demo(demo, out_dir or settings.demo_dir, settings)
    console = _console()
    for line in outcome.report:
        console.print(line, markup=False)
    console.print(f"wrote {outcome.csv_path}, {outcome.svg_path}, {outcome.report_path}", markup=False)


@app.command("classify")
def classify_command(
    scheme: Annotated[Path, typer.Argument(help="CSV with header Q,P.")],
    resolution: Annotated[float, typer.Option("--resolution", "-r", help="Resolution r >= 0.")] = 0.0,
    config: ConfigOption = None,
) -> None:
    """Check whether a finite sample of (Q, P) pairs is consistent with an analog scheme."""
    _setup(config)
    try:
        parsed = read_scheme_csv(scheme, resolution)
        verdict = classify(parsed)
    except (OSError, ContractError, ValidationError) as exc:
        logger.error("%s: %s", scheme, exc)
        raise typer.Exit(EXIT_INVALID) from exc

    console = _console()
    if verdict.is_analog:
        note = "degenerate: every magnitude lies within r" if verdict.degenerate else "consistent with analog"
        console.print(f"{verdict.tag.value} ({note}, on {len(parsed.pairs)} sampled pairs)", markup=False)
        raise typer.Exit(EXIT_OK)

    table = Table("i", "j", "Q_i", "P_i", "Q_j", "P_j", title=VerdictTag.NOT_ANALOG.value)
    for i, j in verdict.witnesses:
        (qi, pi), (qj, pj) = parsed.pairs[i], parsed.pairs[j]
        table.add_row(str(i), str(j), f"{qi:g}", f"{pi:g}", f"{qj:g}", f"{pj:g}")
    console.print(VerdictTag.NOT_ANALOG.value, markup=False)
    console.print(table)
    raise typer.Exit(EXIT_NOT_ANALOG)


@app.command("fmt")
def fmt_command(
    netlist: Annotated[Path, typer.Argument(help="Netlist file.")],
    config: ConfigOption = None,
) -> None:
    """Print the canonical form of a netlist."""
    _setup(config)
    try:
        doc = parse_file(netlist)
    except OSError as exc:
        logger.error("cannot read %s: %s", netlist, exc)
        raise typer.Exit(EXIT_INVALID) from exc
    except NetlistError as exc:
        logger.error("%s: %s", netlist, exc)
        raise typer.Exit(EXIT_INVALID) from exc
    sys.stdout.write(format_netlist(doc))


@app.command("numeral")
def numeral_command(
    text: Annotated[str, typer.Argument(help="Numeral such as 29.7 or 1001.")],
    base: Annotated[int, typer.Option("--base", "-b", help="Base b >= 1.")] = 10,
    config: ConfigOption = None,
) -> None:
    """Evaluate a place-value numeral exactly."""
    _setup(config)
    try:
        numeral = NumeralString.parse(text, base)
        value = digital_value(numeral)
    except (MalformedDigitError, ContractError, ValidationError) as exc:
        logger.error("%s", exc)
        raise typer.Exit(EXIT_INVALID) from exc
    _console().print(f"{numeral} = {value} ({float(value):g})", markup=False)


def main() -> None:
    app()


if __name__ == "__main__":
    main()
