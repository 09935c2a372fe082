"""End-to-end playground for patchsim, run from project root.

Usage::

    python playground/demo_patchsim.py

Walks through the public API: netlist parsing and formatting, validation
errors, runs and their checks, discontinuous blocks, conversion, scheme
classification and numerals.
"""

from __future__ import annotations

import math
import sys
import time
from fractions import Fraction

from rich.console import Console
from rich.live import Live
from rich.panel import Panel
from rich.syntax import Syntax
from rich.table import Table
from rich.text import Text

from patchsim import DivergedError, NumeralString, RepScheme, classify, digital_value, format_netlist, parse, run
from patchsim.blocks import StepSchedule, adc, dac, eval_limiter, eval_stepgen, gibbs_overshoot
from patchsim.cli.demos import SPRINGMASS
from patchsim.engine import convergence_order, damped_frequency, drift_experiment, residual
from patchsim.errors import AlgebraicLoopError, IllFormedSchemeError
from patchsim.repclass import VerdictTag, unary_point_invariance

console = Console()
results: list[tuple[str, str, bool]] = []  # (section, label, passed)

TICK = 0.012

SEC_1 = "1. Netlist"
SEC_2 = "2. Validation"
SEC_3 = "3. Spring-mass run"
SEC_4 = "4. Convergence"
SEC_5 = "5. Discontinuous"
SEC_6 = "6. Conversion"
SEC_7 = "7. Schemes"
SEC_8 = "8. Numerals"


def check(section: str, label: str, condition: bool) -> None:
    results.append((section, label, condition))


def run_checks() -> str:
    text = SPRINGMASS.netlist()
    doc = parse(text)
    check(SEC_1, "8 blocks, 2 probes", len(doc.blocks) == 8 and doc.probe_nets == ("X", "XDOT"))
    check(SEC_1, "format is idempotent", format_netlist(parse(format_netlist(doc))) == format_netlist(doc))

    try:
        run(parse("block const C val=1 out=ONE\nblock adder S1 in=ONE,LOOP out=LOOP\nprobe LOOP\nsim dt=0.01 t=1\n"))
        check(SEC_2, "should have raised for loop", False)
    except AlgebraicLoopError as e:
        check(SEC_2, "loop through S1 reported", e.cycle == ("S1",))
    try:
        run(parse(SPRINGMASS.netlist(dt=1.0, t_end=1000.0, limit=1e300)))
        check(SEC_2, "should have diverged", False)
    except DivergedError as e:
        check(SEC_2, "divergence has a time", e.time > 0)

    result = run(doc)
    x = result.trace("X")
    check(SEC_3, "x(0) == 2", x.values[0] == 2.0)
    check(SEC_3, "x(10) ~ -5", abs(x.values[-1] + 5.0) < 0.01)
    omega = math.sqrt(55) / 2
    check(SEC_3, "omega ~ sqrt(55)/2", abs(damped_frequency(x, -5.0) - omega) < 0.05 * omega)
    res = residual(result, doc)
    inside = (res.times() > 0.1) & (res.times() < 9.9)
    check(SEC_3, "residual <= 0.05 inside", float(res.values[inside].max()) <= 0.05)

    short = parse(SPRINGMASS.netlist(t_end=2.0))
    report = convergence_order(short, (4e-3, 2e-3, 1e-3))
    check(SEC_4, "rk4 order ~ 4", report.order is not None and abs(report.order - 4) < 0.5)
    drift = drift_experiment(0.01, 100.0)
    check(SEC_4, f"drift {drift.drift_approx:.2f} ~ 50", abs(drift.drift_approx - 50.0) < 0.05)

    check(SEC_5, "zero limiter clips", eval_limiter("zero", -1.0) == 0.0)
    check(SEC_5, "dead zone", eval_limiter("dead", 0.3, half_width=0.5) == 0.0)
    steps = StepSchedule(segments=((0.0, 9.6), (1.0, 7.5), (2.0, 2.1), (3.0, 5.9)))
    check(SEC_5, "stepgen right-continuous", eval_stepgen(steps, 1.0) == 7.5)
    check(SEC_5, "gibbs ~ 1.179", 1.17 <= gibbs_overshoot(50) <= 1.19)

    check(SEC_6, "7 -> 0111", adc(7.0, 4) == (0.0, 5.0, 5.0, 5.0))
    check(SEC_6, "dac(adc(9)) == 9", dac(adc(9.0, 4)) == 9.0)

    check(SEC_7, "voltage scheme", classify(RepScheme(pairs=((34, 34), (34.8, 34.8), (2, 2)), r=0.01)).tag
          is VerdictTag.ANALOG_INCREASING)
    low_bit = classify(RepScheme(pairs=((1, 5), (2, 0), (3, 5), (4, 0)), r=1))
    check(SEC_7, "low bit is not analog", low_bit.tag is VerdictTag.NOT_ANALOG and (0, 1) in low_bit.witnesses)
    try:
        classify(RepScheme(pairs=((1, 0), (1, 5)), r=1))
        check(SEC_7, "should have raised", False)
    except IllFormedSchemeError:
        check(SEC_7, "ill-formed rejected", True)

    check(SEC_8, "29.7 is exact", digital_value(NumeralString.parse("29.7", 10)) == Fraction(297, 10))
    check(SEC_8, "1001_2 == 9", digital_value(NumeralString.parse("1001", 2)) == 9)
    check(SEC_8, "unary point meaningless", all(unary_point_invariance(n) for n in range(1, 21)))
    return text


def build_partial_table(n: int) -> Table:
    """Build a table showing only the first *n* results (for animation)."""
    table = Table(title="patchsim  --  feature demo", title_style="bold cyan", pad_edge=True)
    table.add_column("#", style="dim", width=4, justify="right")
    table.add_column("Section", style="bold white", width=22, no_wrap=True)
    table.add_column("Check", no_wrap=True, min_width=30)
    table.add_column("", justify="center", width=6)

    prev_section = ""
    for i, (sec, label, passed) in enumerate(results[:n], 1):
        status = Text("PASS", style="bold green") if passed else Text("FAIL", style="bold red")
        table.add_row(str(i), sec if sec != prev_section else "", label, status)
        prev_section = sec
    return table


def main() -> int:
    text = run_checks()
    console.print(Panel(Syntax(text, "ini", theme="monokai"), title="[bold magenta]springmass.net[/]", expand=False))
    with Live(build_partial_table(0), console=console, refresh_per_second=30) as live:
        for n in range(1, len(results) + 1):
            time.sleep(TICK)
            live.update(build_partial_table(n))
    failed = sum(not passed for _, _, passed in results)
    console.print(f"[bold]{len(results) - failed} passed, {failed} failed[/]")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
