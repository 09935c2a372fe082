"""Monotone-with-resolution test for one-dimensional representation schemes.

A scheme is a finite sample of (quantity Q, magnitude P) pairs and a
resolution ``r``. Two magnitudes closer than ``r`` do not stand for different
quantities, so such pairs impose nothing. For every other pair the smaller
magnitude must stand for the strictly smaller quantity (increasing scheme)
or for the strictly larger one (decreasing scheme).

Whether each magnitude genuinely *represents* its quantity cannot be checked
from numbers; callers are trusted to supply representational pairs. On a
finite sample the verdict means "consistent with analog", not a proof.
"""

from __future__ import annotations

import math
from enum import StrEnum
from itertools import combinations

from pydantic import BaseModel, ConfigDict, Field, field_validator

from patchsim.errors import ContractError, IllFormedSchemeError

Pair = tuple[float, float]


class VerdictTag(StrEnum):
    ANALOG_INCREASING = "analog_increasing"
    ANALOG_DECREASING = "analog_decreasing"
    NOT_ANALOG = "not_analog"


class RepScheme(BaseModel):
    """``pairs`` are ``(Q, P)``: represented quantity, representing magnitude."""

    model_config = ConfigDict(frozen=True, extra="forbid", allow_inf_nan=False)

    pairs: tuple[Pair, ...] = Field(min_length=2)
    r: float = Field(default=0.0, ge=0.0)

    @field_validator("pairs")
    @classmethod
    def _finite(cls, pairs: tuple[Pair, ...]) -> tuple[Pair, ...]:
        if not all(math.isfinite(q) and math.isfinite(p) for q, p in pairs):
            raise ValueError("quantities and magnitudes must be finite")
        return pairs

    def check_well_formed(self) -> None:
        """Raise if one quantity maps to magnitudes at least ``r`` apart."""
        for (q1, p1), (q2, p2) in combinations(self.pairs, 2):
            if q1 == q2 and p1 != p2 and abs(p1 - p2) >= self.r:
                raise IllFormedSchemeError(
                    f"quantity {q1!r} maps to magnitudes {p1!r} and {p2!r}, which differ by at least r={self.r!r}"
                )

    @property
    def quantities(self) -> tuple[float, ...]:
        return tuple(q for q, _ in self.pairs)

    @property
    def magnitudes(self) -> tuple[float, ...]:
        return tuple(p for _, p in self.pairs)


class Verdict(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    tag: VerdictTag
    increasing_witnesses: tuple[tuple[int, int], ...] = ()
    decreasing_witnesses: tuple[tuple[int, int], ...] = ()
    degenerate: bool = False

    @property
    def witnesses(self) -> tuple[tuple[int, int], ...]:
        """Index pairs that break a hypothesis; empty iff the scheme is analog."""
        if self.tag is not VerdictTag.NOT_ANALOG:
            return ()
        return tuple(sorted(set(self.increasing_witnesses) | set(self.decreasing_witnesses)))

    @property
    def is_analog(self) -> bool:
        return self.tag is not VerdictTag.NOT_ANALOG


def classify(scheme: RepScheme) -> Verdict:
    """Test every unordered pair of the scheme against both monotone hypotheses."""
    scheme.check_well_formed()
    inc: list[tuple[int, int]] = []
    dec: list[tuple[int, int]] = []
    constrained = False
    for (i, (qi, pi)), (j, (qj, pj)) in combinations(enumerate(scheme.pairs), 2):
        if pi == pj or abs(pi - pj) < scheme.r:
            continue
        constrained = True
        # Orient so that ``lo`` holds the smaller magnitude.
        q_lo, q_hi = (qi, qj) if pi < pj else (qj, qi)
        if not q_lo < q_hi:
            inc.append((i, j))
        if not q_lo > q_hi:
            dec.append((i, j))

    if not constrained:
        return Verdict(tag=VerdictTag.ANALOG_INCREASING, degenerate=True)
    if not inc:
        return Verdict(tag=VerdictTag.ANALOG_INCREASING, decreasing_witnesses=tuple(dec))
    if not dec:
        return Verdict(tag=VerdictTag.ANALOG_DECREASING, increasing_witnesses=tuple(inc))
    return Verdict(tag=VerdictTag.NOT_ANALOG, increasing_witnesses=tuple(inc), decreasing_witnesses=tuple(dec))


def affine_transform(scheme: RepScheme, a: float, c: float = 0.0) -> RepScheme:
    """Map every magnitude to ``a*P + c`` and the resolution to ``|a|*r``."""
    if a == 0:
        raise ContractError("affine scale a must be non-zero")
    return RepScheme(pairs=tuple((q, a * p + c) for q, p in scheme.pairs), r=abs(a) * scheme.r)
