"""CSV trace format: header ``t,<name1>,<name2>,...`` and one row per grid point.

Floats are written with ``repr`` so reading a file back gives bit-identical
values.
"""

from __future__ import annotations

import csv
from collections.abc import Sequence
from pathlib import Path
from typing import TextIO

import numpy as np

from patchsim.core.grid import TimeGrid, Trace


def write_csv_stream(traces: Sequence[Trace], stream: TextIO) -> None:
    if not traces:
        raise ValueError("need at least one trace")
    grid = traces[0].grid
    if any(tr.grid != grid for tr in traces):
        raise ValueError("traces must share one grid")
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(["t", *(tr.name for tr in traces)])
    columns = [tr.values for tr in traces]
    for k, t in enumerate(grid.times()):
        writer.writerow([repr(float(t)), *(repr(float(col[k])) for col in columns)])


def write_csv(traces: Sequence[Trace], path: str | Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf-8", newline="") as fh:
        write_csv_stream(traces, fh)
    return path


def read_csv(path: str | Path) -> list[Trace]:
    """Read traces written by :func:`write_csv`.

    The grid is recovered from the first two time stamps; the file must hold
    at least two rows.
    """
    with Path(path).open(encoding="utf-8", newline="") as fh:
        rows = list(csv.reader(fh))
    if len(rows) < 3 or not rows[0] or rows[0][0] != "t":
        raise ValueError(f"{path}: not a trace CSV (need header 't,...' and at least two rows)")
    names = rows[0][1:]
    data = np.array([[float(cell) for cell in row] for row in rows[1:]], dtype=np.float64)
    t_start = float(data[0, 0])
    grid = TimeGrid(t_start=t_start, dt=float(data[1, 0] - t_start), n_steps=data.shape[0] - 1)
    return [Trace(grid=grid, values=data[:, i + 1], name=name) for i, name in enumerate(names)]
