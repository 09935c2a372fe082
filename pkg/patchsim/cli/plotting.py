"""SVG line charts of simulated traces.

Output is byte-identical for identical inputs: the SVG id salt is fixed, the
date stamp is dropped and text is rendered as paths.
"""

from __future__ import annotations

import logging
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import numpy as np  # noqa: E402
from matplotlib.figure import Figure  # noqa: E402
from pydantic import BaseModel, ConfigDict, Field  # noqa: E402

from patchsim.core.grid import FloatArray, Trace  # noqa: E402
from patchsim.engine.runner import SimResult  # noqa: E402
from patchsim.errors import ContractError  # noqa: E402

logger = logging.getLogger(__name__)

DPI = 100
PALETTE = ("#1f77b4", "#7f7f7f", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e")
LINESTYLES = ("-", "--", ":", "-.")
SVG_RC = {"svg.hashsalt": "patchsim", "svg.fonttype": "path", "path.simplify": False}


class SeriesStyle(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    net: str
    color: str | None = None
    linestyle: str | None = None
    linewidth: float = Field(default=1.5, gt=0.0)
    label: str | None = None


class PlotSpec(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    width: int = Field(default=800, ge=64)
    height: int = Field(default=480, ge=64)
    series: tuple[SeriesStyle, ...] = Field(min_length=1)
    x_label: str = "t (s)"
    y_label: str = "machine units"
    title: str | None = None

    @classmethod
    def for_nets(cls, nets: list[str] | tuple[str, ...], **kwargs: object) -> PlotSpec:
        return cls(series=tuple(SeriesStyle(net=net) for net in nets), **kwargs)  # type: ignore[arg-type]


def decimate(times: FloatArray, values: FloatArray, max_points: int) -> tuple[FloatArray, FloatArray]:
    """Evenly spaced subset of at most ``max_points`` samples, always keeping both ends."""
    if max_points < 2:
        raise ContractError(f"max_points must be >= 2, got {max_points}")
    n = times.shape[0]
    if n <= max_points:
        return times, values
    index = np.unique(np.linspace(0, n - 1, max_points).round().astype(np.int64))
    return times[index], values[index]


def _series_trace(result: SimResult, net: str) -> Trace:
    if net not in result.traces:
        raise ContractError(f"net '{net}' was not probed; available: {', '.join(result.traces) or 'none'}")
    return result.traces[net]


def plot_traces(traces: list[Trace], spec: PlotSpec, path: str | Path, *, max_points: int = 2000) -> Path:
    """Write ``traces`` (matched to ``spec.series`` by name) as one SVG file."""
    by_name = {trace.name: trace for trace in traces}
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with matplotlib.rc_context(SVG_RC):
        fig = Figure(figsize=(spec.width / DPI, spec.height / DPI), dpi=DPI)
        ax = fig.add_subplot()
        for i, style in enumerate(spec.series):
            if style.net not in by_name:
                raise ContractError(f"no trace named '{style.net}'")
            trace = by_name[style.net]
            times, values = decimate(trace.times(), trace.values, max_points)
            (line,) = ax.plot(
                times,
                values,
                color=style.color or PALETTE[i % len(PALETTE)],
                linestyle=style.linestyle or LINESTYLES[i % len(LINESTYLES)],
                linewidth=style.linewidth,
                label=style.label or style.net,
            )
            line.set_gid(f"series-{style.net}")
            logger.debug("series %s: %d of %d points", style.net, len(times), len(trace.values))
        ax.set_xlabel(spec.x_label)
        ax.set_ylabel(spec.y_label)
        if spec.title:
            ax.set_title(spec.title)
        if len(spec.series) > 1:
            ax.legend(loc="best")
        ax.grid(True, linewidth=0.5, alpha=0.5)
        fig.savefig(path, format="svg", metadata={"Date": None})
    return path


def plot_svg(result: SimResult, spec: PlotSpec, path: str | Path, *, max_points: int = 2000) -> Path:
    """Line chart of probed nets of ``result``.

    Raises:
        ContractError: A series names a net that was not probed.
    """
    traces = [_series_trace(result, style.net) for style in spec.series]
    return plot_traces(traces, spec, path, max_points=max_points)
