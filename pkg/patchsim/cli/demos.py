"""Named demonstrations with fixed parameters.

Each demo writes ``<name>.csv``, ``<name>.svg`` and ``<name>.txt`` into the
output directory. The text report holds one ``key = value`` line per checked
quantity so that scripts can grep it.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Callable
from enum import StrEnum
from pathlib import Path

from pydantic import BaseModel, ConfigDict, Field, model_validator

from patchsim.blocks.conversion import DIGIT_HIGH, adc, dac
from patchsim.blocks.mechanical import DiskIntegratorParams, disk_rotations
from patchsim.blocks.sources import gibbs_overshoot
from patchsim.cli.plotting import PlotSpec, SeriesStyle, plot_svg
from patchsim.core.csvio import write_csv
from patchsim.engine.analysis import damped_frequency, drift_experiment, drift_netlist, level_crossings, residual
from patchsim.engine.runner import SimResult, run
from patchsim.netlist.parser import parse
from patchsim.repclass.scheme import RepScheme, classify
from patchsim.settings import PatchsimSettings

logger = logging.getLogger(__name__)


class DemoName(StrEnum):
    SPRINGMASS = "springmass"
    GIBBS = "gibbs"
    DRIFT = "drift"
    SINE_INTEGRAL = "sine-integral"
    ADC_ROUNDTRIP = "adc-roundtrip"


class SpringMassParams(BaseModel):
    """``M*x'' + B*x' + K*x = y`` in SI units (kg, nt/m/sec, nt/m, nt, m, m/s)."""

    model_config = ConfigDict(frozen=True, extra="forbid", allow_inf_nan=False)

    mass: float = Field(default=1.0, gt=0.0)
    damping: float = 3.0
    stiffness: float = 16.0
    forcing: float = -80.0
    x0: float = 2.0
    v0: float = -0.64

    @property
    def steady_state(self) -> float:
        return self.forcing / self.stiffness

    @property
    def damped_omega(self) -> float:
        disc = 4.0 * self.mass * self.stiffness - self.damping**2
        if disc <= 0:
            return 0.0
        return math.sqrt(disc) / (2.0 * self.mass)

    def netlist(self, dt: float = 1e-3, t_end: float = 10.0, method: str = "rk4", limit: float = 100.0) -> str:
        mass_line = ""
        into_inv = "NEGXDD"
        if self.mass != 1.0:
            mass_line = f"block pot    PM  gain={1.0 / self.mass!r} in=NEGXDD out=NEGXDDM\n"
            into_inv = "NEGXDDM"
        return (
            f"# -M*x'' = B*x' + K*x - y ; y = {self.forcing!r} ; x(0)={self.x0!r} ; x'(0)={self.v0!r}\n"
            f"block const  Y   val={self.forcing!r} out=Y\n"
            f"block pot    P16 gain={self.stiffness!r} in=X out=KX\n"
            f"block pot    P3  gain={self.damping!r} in=XDOT out=BXDOT\n"
            "block adder  S1  in=KX,BXDOT,NEGY out=NEGXDD\n"
            "block inv    N1  in=Y out=NEGY\n"
            f"{mass_line}"
            f"block inv    N2  in={into_inv} out=XDD\n"
            f"block int    I1  ic={self.v0!r} in=XDD out=XDOT\n"
            f"block int    I2  ic={self.x0!r} in=XDOT out=X\n"
            "probe X\n"
            "probe XDOT\n"
            f"sim dt={dt!r} t={t_end!r} method={method} limit={limit!r}\n"
        )


SPRINGMASS = SpringMassParams()


class DemoPreset(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    name: DemoName
    title: str
    plotted: tuple[str, ...] = Field(min_length=1)
    springmass: SpringMassParams | None = None

    @model_validator(mode="after")
    def _frozen_constants(self) -> DemoPreset:
        if self.name is DemoName.SPRINGMASS and self.springmass != SPRINGMASS:
            raise ValueError("the springmass demo runs M=1, B=3, K=16, y=-80, x(0)=2, x'(0)=-0.64")
        return self


PRESETS: dict[DemoName, DemoPreset] = {
    DemoName.SPRINGMASS: DemoPreset(
        name=DemoName.SPRINGMASS, title="Spring-mass system: x(t)", plotted=("X",), springmass=SPRINGMASS
    ),
    DemoName.GIBBS: DemoPreset(
        name=DemoName.GIBBS, title="Square wave and its 50-term Fourier sum", plotted=("STEP", "FOURIER")
    ),
    DemoName.DRIFT: DemoPreset(
        name=DemoName.DRIFT, title="Integrator drift from a sloped step", plotted=("OUT_EXACT", "OUT_APPROX")
    ),
    DemoName.SINE_INTEGRAL: DemoPreset(
        name=DemoName.SINE_INTEGRAL, title="Integral of sin(t) from 0 to pi", plotted=("SIN", "AREA")
    ),
    DemoName.ADC_ROUNDTRIP: DemoPreset(
        name=DemoName.ADC_ROUNDTRIP, title="4-bit ADC and DAC round trip", plotted=("V", "BACK")
    ),
}


class DemoOutcome(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    preset: DemoPreset
    csv_path: Path
    svg_path: Path
    report_path: Path
    report: tuple[str, ...]


def _springmass(settings: PatchsimSettings) -> tuple[SimResult, list[str]]:
    params = SPRINGMASS
    doc = parse(params.netlist(limit=settings.machine_limit))
    result = run(doc)
    x = result.traces["X"]
    crossings = level_crossings(x, params.steady_state)
    omega = damped_frequency(x, params.steady_state)
    res = residual(
        result,
        doc,
        mass=params.mass,
        damping=params.damping,
        stiffness=params.stiffness,
        forcing=params.forcing,
    )
    inside = (res.times() > 0.1) & (res.times() < 9.9)
    report = [
        f"x(0) = {x.values[0]:.6f}",
        f"x({x.end_time:g}) = {x.values[-1]:.6f}",
        f"steady_state = {params.steady_state:.3f}",
        f"crossings_of_steady_state = {len(crossings)}",
        f"damped_frequency = {omega:.4f} rad/s (expected {params.damped_omega:.4f})",
        f"max_residual = {float(res.values[inside].max()):.3e}",
    ]
    return result, report


GIBBS_TERMS = 50


def _gibbs(settings: PatchsimSettings) -> tuple[SimResult, list[str]]:
    text = (
        "block stepgen S times=0,0.5 levels=1,-1 out=STEP\n"
        f"block fourier_square_src F n_terms={GIBBS_TERMS} period=1 amplitude=1 out=FOURIER\n"
        "probe STEP\n"
        "probe FOURIER\n"
        f"sim dt=0.0005 t=1 method=rk4 limit={settings.machine_limit!r}\n"
    )
    result = run(parse(text))
    report = [f"overshoot = {gibbs_overshoot(GIBBS_TERMS):.4f} (n_terms={GIBBS_TERMS}, amplitude=1)"]
    report += [f"overshoot(n_terms={n}) = {gibbs_overshoot(n):.4f}" for n in (10, 25, 100)]
    return result, report


DRIFT_EPSILON = 0.01
DRIFT_T_END = 100.0


def _drift(settings: PatchsimSettings) -> tuple[SimResult, list[str]]:
    outcome = drift_experiment(DRIFT_EPSILON, DRIFT_T_END)
    result = run(parse(drift_netlist(DRIFT_EPSILON, DRIFT_T_END, 0.01, 0.0, 1.0)))
    report = [
        f"epsilon = {DRIFT_EPSILON:g}",
        f"drift_exact = {outcome.drift_exact:.3e}",
        f"drift_approx = {outcome.drift_approx:.4f} (expected {DRIFT_EPSILON * DRIFT_T_END**2 / 2:.4f})",
    ]
    return result, report


def _sine_integral(settings: PatchsimSettings) -> tuple[SimResult, list[str]]:
    text = (
        "block sine_src S amplitude=1 omega=1 out=SIN\n"
        "block int I ic=0 in=SIN out=AREA\n"
        "probe SIN\n"
        "probe AREA\n"
        f"sim dt=0.001 t={math.pi!r} method=rk4 limit={settings.machine_limit!r}\n"
    )
    result = run(parse(text))
    area = float(result.traces["AREA"].values[-1])
    disk = disk_rotations(result.traces["SIN"], DiskIntegratorParams())
    report = [
        f"integral = {area:.3f}",
        f"integral_engine = {area:.9f}",
        f"disk_rotations = {disk:.9f}",
        f"disagreement = {abs(area - disk):.3e}",
    ]
    return result, report


ADC_BITS = 4
ADC_VALUES = (7.0, 9.0, 10.0)


def _digits_text(voltages: tuple[float, ...]) -> str:
    return "".join("1" if v == DIGIT_HIGH else "0" for v in voltages)


def _adc_roundtrip(settings: PatchsimSettings) -> tuple[SimResult, list[str]]:
    levels = ",".join(repr(v) for v in ADC_VALUES)
    times = ",".join(repr(float(i)) for i in range(len(ADC_VALUES)))
    bits = "".join(
        f"block adc A{b} n_bits={ADC_BITS} bit={b} in=V out=B{b}\n" for b in range(ADC_BITS)
    )
    text = (
        f"block stepgen S times={times} levels={levels} out=V\n"
        f"{bits}"
        f"block dac D in={','.join(f'B{b}' for b in range(ADC_BITS))} out=BACK\n"
        "probe V\n"
        "probe BACK\n"
        f"sim dt=0.01 t={float(len(ADC_VALUES))!r} method=euler limit={settings.machine_limit!r}\n"
    )
    result = run(parse(text))
    report: list[str] = []
    for value in ADC_VALUES:
        word = adc(value, ADC_BITS)
        report.append(f"{value:g} → {_digits_text(word)} → {dac(word):g}")
    verdict = classify(RepScheme(pairs=((0.0, 0.0), (1.0, DIGIT_HIGH)), r=1.0))
    report.append(f"digit_scheme = {verdict.tag.value} (consistent with analog on this sample)")
    return result, report


_RUNNERS: dict[DemoName, Callable[[PatchsimSettings], tuple[SimResult, list[str]]]] = {
    DemoName.SPRINGMASS: _springmass,
    DemoName.GIBBS: _gibbs,
    DemoName.DRIFT: _drift,
    DemoName.SINE_INTEGRAL: _sine_integral,
    DemoName.ADC_ROUNDTRIP: _adc_roundtrip,
}


def run_demo(name: DemoName | str, out_dir: str | Path, settings: PatchsimSettings | None = None) -> DemoOutcome:
    """Run one demo and write its CSV, SVG and report into ``out_dir``.

    Raises:
        ValueError: ``name`` is not a known demo.
    """
    settings = settings or PatchsimSettings()
    preset = PRESETS[DemoName(name)]
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    logger.info("running demo %s into %s", preset.name.value, out)
    result, report = _RUNNERS[preset.name](settings)

    stem = preset.name.value
    csv_path = write_csv(list(result.traces.values()), out / f"{stem}.csv")
    spec = PlotSpec(
        width=settings.plot_width,
        height=settings.plot_height,
        series=tuple(SeriesStyle(net=net) for net in preset.plotted),
        title=preset.title,
    )
    svg_path = plot_svg(result, spec, out / f"{stem}.svg", max_points=settings.plot_max_points)
    report_path = out / f"{stem}.txt"
    report_path.write_text("".join(f"{line}\n" for line in report), encoding="utf-8")
    return DemoOutcome(
        preset=preset, csv_path=csv_path, svg_path=svg_path, report_path=report_path, report=tuple(report)
    )
