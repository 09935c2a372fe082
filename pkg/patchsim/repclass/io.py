"""Scheme files: CSV with a ``Q,P`` header and one pair per row."""

from __future__ import annotations

import csv
import math
from pathlib import Path

from patchsim.errors import ContractError
from patchsim.repclass.scheme import Pair, RepScheme


def read_scheme_pairs(path: str | Path) -> tuple[Pair, ...]:
    with Path(path).open(encoding="utf-8", newline="") as fh:
        rows = [row for row in csv.reader(fh) if row and any(cell.strip() for cell in row)]
    if not rows:
        raise ContractError(f"{path}: empty scheme file")
    header = [cell.strip() for cell in rows[0]]
    if header != ["Q", "P"]:
        raise ContractError(f"{path}: expected header 'Q,P', got {','.join(header)!r}")
    pairs: list[Pair] = []
    for lineno, row in enumerate(rows[1:], start=2):
        if len(row) != 2:
            raise ContractError(f"{path}: row {lineno} has {len(row)} fields, expected 2")
        try:
            q, p = float(row[0]), float(row[1])
        except ValueError as exc:
            raise ContractError(f"{path}: row {lineno} is not numeric") from exc
        if not (math.isfinite(q) and math.isfinite(p)):
            raise ContractError(f"{path}: row {lineno} is not finite")
        pairs.append((q, p))
    if len(pairs) < 2:
        raise ContractError(f"{path}: a scheme needs at least 2 pairs, got {len(pairs)}")
    return tuple(pairs)


def read_scheme_csv(path: str | Path, r: float = 0.0) -> RepScheme:
    if not (math.isfinite(r) and r >= 0):
        raise ContractError(f"resolution must be a finite value >= 0, got {r!r}")
    return RepScheme(pairs=read_scheme_pairs(path), r=r)
