from __future__ import annotations

from collections.abc import Sequence
from typing import ClassVar

from pydantic import BaseModel, ConfigDict


class Block(BaseModel):
    """Base class for every component kind.

    A subclass is the validated parameter set of one block kind *and* its
    evaluator. Class variables describe the kind to the netlist validator and
    the engine; instances are immutable and pure.
    """

    model_config = ConfigDict(frozen=True, extra="forbid", allow_inf_nan=False)

    tag: ClassVar[str]
    min_inputs: ClassVar[int] = 1
    max_inputs: ClassVar[int | None] = 1
    # Parameters that are always lists, even when written with a single value.
    list_params: ClassVar[frozenset[str]] = frozenset()
    # False for kinds that introduce kinks or jumps (affects convergence studies).
    smooth: ClassVar[bool] = True
    # Integrators are state, not memoryless evaluation.
    stateful: ClassVar[bool] = False

    @classmethod
    def arity_text(cls) -> str:
        if cls.max_inputs is None:
            return f"at least {cls.min_inputs}"
        if cls.max_inputs == cls.min_inputs:
            return f"exactly {cls.min_inputs}"
        return f"{cls.min_inputs} to {cls.max_inputs}"

    @classmethod
    def accepts(cls, n_inputs: int) -> bool:
        return n_inputs >= cls.min_inputs and (cls.max_inputs is None or n_inputs <= cls.max_inputs)

    def evaluate(self, inputs: Sequence[float], t: float) -> float:
        raise NotImplementedError(f"{type(self).__name__} does not evaluate")
