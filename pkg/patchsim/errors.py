"""Error hierarchy for patchsim.

Every error keeps its context as attributes and renders ``str(err)`` from
them, so callers can either show the message or inspect the fields. Netlist
errors always carry the source line they refer to.
"""

from __future__ import annotations

from collections.abc import Sequence


class PatchsimError(Exception):
    """Root of every error raised by patchsim."""


class NetlistError(PatchsimError):
    """A problem located in a netlist document.

    Attributes:
        line: 1-based source line of the offending declaration.
        column: 1-based column, when the parser knows it.
        detail: The message without the location prefix.
    """

    def __init__(self, detail: str, line: int, column: int | None = None) -> None:
        self.detail = detail
        self.line = line
        self.column = column
        super().__init__(self._build_message())

    def _build_message(self) -> str:
        where = f"line {self.line}"
        if self.column is not None:
            where += f", col {self.column}"
        return f"{where}: {self.detail}"

    def __str__(self) -> str:
        return self._build_message()


class NetlistSyntaxError(NetlistError):
    """The text does not follow the line grammar."""


class DuplicateBlockError(NetlistError):
    def __init__(self, name: str, lines: Sequence[int]) -> None:
        self.name = name
        self.lines = tuple(lines)
        joined = ", ".join(str(n) for n in self.lines)
        super().__init__(f"duplicate block name '{name}' (lines {joined})", line=self.lines[-1])


class UnknownKindError(NetlistError):
    def __init__(self, kind: str, line: int, column: int | None = None) -> None:
        self.kind = kind
        super().__init__(f"unknown block kind '{kind}'", line=line, column=column)


class MissingSimError(NetlistError):
    def __init__(self, line: int) -> None:
        super().__init__("missing sim directive", line=line)


class ArityError(NetlistError):
    def __init__(self, block: str, kind: str, got: int, expected: str, line: int) -> None:
        self.block = block
        self.kind = kind
        self.got = got
        super().__init__(f"block '{block}' of kind '{kind}' takes {expected} input(s), got {got}", line=line)


class UndrivenNetError(NetlistError):
    def __init__(self, net: str, line: int) -> None:
        self.net = net
        super().__init__(f"net '{net}' has no driving block", line=line)


class MultiplyDrivenNetError(NetlistError):
    def __init__(self, net: str, drivers: Sequence[str], line: int) -> None:
        self.net = net
        self.drivers = tuple(drivers)
        super().__init__(f"net '{net}' is driven by more than one block: {', '.join(self.drivers)}", line=line)


class AlgebraicLoopError(NetlistError):
    """A feedback cycle with no integrator in it."""

    def __init__(self, cycle: Sequence[str], line: int) -> None:
        self.cycle = tuple(cycle)
        path = " -> ".join((*self.cycle, self.cycle[0]))
        super().__init__(f"algebraic loop through blocks {path}", line=line)


class BlockParamError(NetlistError):
    """Parameters of a block declaration failed validation.

    The pydantic ``ValidationError`` is chained as ``__cause__``; ``full_key``
    names the first offending parameter as ``<block>.<param>``.
    """

    def __init__(self, block: str, kind: str, full_key: str, reason: str, line: int) -> None:
        self.block = block
        self.kind = kind
        self.full_key = full_key
        super().__init__(f"bad parameters for {kind} block '{block}': {reason}\nfull_key: {full_key}", line=line)


class DivergedError(PatchsimError):
    """A run produced NaN or Inf."""

    def __init__(self, block: str, time: float) -> None:
        self.block = block
        self.time = time
        super().__init__(f"run diverged: block '{block}' produced a non-finite value at t={time!r}")


class OutOfRangeError(PatchsimError, ValueError):
    """An argument lies outside the operation's domain."""


class MalformedDigitError(PatchsimError, ValueError):
    """A digit (or digit voltage) is not valid for its encoding."""


class ContractError(PatchsimError, ValueError):
    """A precondition of an operation was violated by the caller."""


class IllFormedSchemeError(ContractError):
    """A representation scheme maps one quantity to clearly different magnitudes."""
