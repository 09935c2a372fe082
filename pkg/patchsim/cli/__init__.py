from __future__ import annotations

from patchsim.cli.demos import PRESETS, DemoName, DemoOutcome, DemoPreset, SpringMassParams, run_demo
from patchsim.cli.plotting import PlotSpec, SeriesStyle, decimate, plot_svg, plot_traces

__all__ = [
    "PRESETS",
    "DemoName",
    "DemoOutcome",
    "DemoPreset",
    "PlotSpec",
    "SeriesStyle",
    "SpringMassParams",
    "decimate",
    "plot_svg",
    "plot_traces",
    "run_demo",
]
