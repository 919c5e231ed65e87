"""Toy enumerator VM: programs with simulated halting costs.

A program denotes a partial function on the naturals: ``value`` gives the
output for input i, ``cost`` the number of simulated steps before input i
halts, and an optional ``guard`` marks inputs that never halt.  The
dovetailer runs rounds r = 1, 2, ...; in round r every pending input
i <= r that satisfies its guard halts as soon as cost(i) <= r, and its
value is emitted unless already seen.  This makes the enumeration order
of a set depend on halting times rather than on value magnitude, which
is the whole point of the model.

Schedulers derive alternative listings of the same emitted set by
buffering up to ``window`` elements of the native order and choosing
which buffered element to emit next.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Sequence, Union

from .expressions import ArithExpr, EvaluationError, GuardExpr, parse_arith, parse_guard
from .patterns import ListingPrefix

SCHEDULER_KINDS = ("native", "min_first", "max_first", "explicit")


class ProgramError(ValueError):
    """A program document is malformed."""


class InsufficientPrefixError(ValueError):
    """The native prefix is too short to supply the requested outputs."""


class ChoiceError(ValueError):
    """An explicit scheduler choice does not index the current buffer."""

    def __init__(self, step: int, message: str):
        self.step = step
        super().__init__(f"step {step}: {message}")


@dataclass(frozen=True)
class EnumeratorProgram:
    """A named partial function with explicit halting costs."""

    name: str
    value: ArithExpr
    cost: ArithExpr
    guard: GuardExpr | None = None


def parse_program(source: str) -> EnumeratorProgram:
    """Parse and validate a JSON program document.

    Required keys: "name", "value", "cost"; optional "guard" (string or
    null).  Expression fields must parse in the grammar of
    :mod:`eolab.expressions`, with only ``i`` bound.
    """
    try:
        doc = json.loads(source)
    except json.JSONDecodeError as exc:
        raise ProgramError(f"invalid JSON: {exc.msg} (line {exc.lineno}, column {exc.colno})")
    if not isinstance(doc, dict):
        raise ProgramError("program document must be a JSON object")
    unknown = set(doc) - {"name", "value", "cost", "guard"}
    if unknown:
        raise ProgramError(f"unknown keys: {', '.join(sorted(unknown))}")
    for key in ("name", "value", "cost"):
        if key not in doc:
            raise ProgramError(f"missing key: {key}")
        if not isinstance(doc[key], str):
            raise ProgramError(f"key {key!r} must be a string")
    name = doc["name"]
    if not name or not name.replace("_", "").isalnum():
        raise ProgramError(f"name {name!r} is not an identifier")
    guard_src = doc.get("guard")
    if guard_src is not None and not isinstance(guard_src, str):
        raise ProgramError("key 'guard' must be a string or null")
    return EnumeratorProgram(
        name=name,
        value=parse_arith(doc["value"]),
        cost=parse_arith(doc["cost"]),
        guard=parse_guard(guard_src) if guard_src is not None else None,
    )


@dataclass(frozen=True)
class DovetailTrace:
    """Result of dovetailing a program.

    ``emitted`` is the deduplicated value sequence in emission order (a
    prefix of the program's native listing); it is a plain tuple because
    a truncated trace may hold no emissions at all.  ``steps_charged``
    totals the simulated steps: every round-r attempt at a pending input
    charges min(cost, r) when the guard holds and r when it does not.
    """

    program: str
    rounds: int
    emitted: tuple[int, ...]
    halted_inputs: frozenset[int]
    steps_charged: int
    truncated: bool

    def as_prefix(self) -> ListingPrefix:
        if not self.emitted:
            raise InsufficientPrefixError(f"trace of {self.program!r} emitted nothing")
        return ListingPrefix(self.emitted)

    def to_json(self) -> dict:
        return {
            "emitted": list(self.emitted),
            "rounds": self.rounds,
            "truncated": self.truncated,
        }


def dovetail(prog: EnumeratorProgram, k: int, round_cap: int) -> DovetailTrace:
    """Run the dovetailer until k values are emitted or round_cap is hit.

    Deterministic: rounds increase, and within a round pending inputs
    are tried in increasing order.  Hitting round_cap yields a trace
    flagged truncated, not an error.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if round_cap < 1:
        raise ValueError(f"round_cap must be >= 1, got {round_cap}")

    guard_memo: dict[int, bool] = {}
    cost_memo: dict[int, int] = {}
    halted: set[int] = set()
    diverging: set[int] = set()
    emitted: list[int] = []
    seen: set[int] = set()
    steps = 0

    def guard_holds(i: int) -> bool:
        if i not in guard_memo:
            guard_memo[i] = prog.guard.evaluate(i) if prog.guard is not None else True
        return guard_memo[i]

    def cost_of(i: int) -> int:
        if i not in cost_memo:
            cost = prog.cost.evaluate(i)
            if cost < 1:
                raise EvaluationError("cost must be >= 1", prog.cost.source, i)
            cost_memo[i] = cost
        return cost_memo[i]

    for r in range(1, round_cap + 1):
        for i in range(r + 1):
            if i in halted or i in diverging:
                continue
            if not guard_holds(i):
                diverging.add(i)
                steps += r
                continue
            cost = cost_of(i)
            steps += min(cost, r)
            if cost <= r:
                halted.add(i)
                value = prog.value.evaluate(i)
                if value not in seen:
                    seen.add(value)
                    emitted.append(value)
                    if len(emitted) == k:
                        return DovetailTrace(
                            program=prog.name,
                            rounds=r,
                            emitted=tuple(emitted),
                            halted_inputs=frozenset(halted),
                            steps_charged=steps,
                            truncated=False,
                        )
    return DovetailTrace(
        program=prog.name,
        rounds=round_cap,
        emitted=tuple(emitted),
        halted_inputs=frozenset(halted),
        steps_charged=steps,
        truncated=True,
    )


@dataclass(frozen=True)
class Scheduler:
    """Reordering policy over a native enumeration.

    The buffer is kept filled to ``window`` elements in arrival order;
    each step one buffered element is emitted: the oldest (native), the
    smallest (min_first), the largest (max_first), or the one at
    ``choices[t]`` (explicit).  window=1 always reproduces native order.
    """

    kind: str
    window: int = 1
    choices: tuple[int, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "choices", tuple(self.choices))
        if self.kind not in SCHEDULER_KINDS:
            raise ValueError(f"unknown scheduler kind {self.kind!r}")
        if self.window < 1:
            raise ValueError(f"window must be >= 1, got {self.window}")
        if self.choices and self.kind != "explicit":
            raise ValueError(f"choices are only valid for the explicit kind, not {self.kind!r}")
        if any(c < 0 for c in self.choices):
            raise ValueError("choices must be naturals")


NativeSource = Union[DovetailTrace, ListingPrefix, Sequence[int]]


def _native_elements(source: NativeSource) -> tuple[int, ...]:
    if isinstance(source, DovetailTrace):
        return source.emitted
    if isinstance(source, ListingPrefix):
        return source.elements
    return tuple(source)


def schedule(source: NativeSource, sched: Scheduler, k: int) -> ListingPrefix:
    """Emit the first k elements of the rescheduled enumeration."""
    native = _native_elements(source)
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if k > len(native):
        raise InsufficientPrefixError(
            f"native prefix has {len(native)} elements, cannot supply {k} outputs"
        )
    buffer: list[int] = []
    consumed = 0
    out: list[int] = []
    for t in range(1, k + 1):
        while len(buffer) < sched.window and consumed < len(native):
            buffer.append(native[consumed])
            consumed += 1
        if sched.kind == "native":
            idx = 0
        elif sched.kind == "min_first":
            idx = buffer.index(min(buffer))
        elif sched.kind == "max_first":
            idx = buffer.index(max(buffer))
        else:
            if t - 1 >= len(sched.choices):
                raise ChoiceError(t, "no choice supplied")
            idx = sched.choices[t - 1]
            if idx >= len(buffer):
                raise ChoiceError(t, f"choice {idx} out of range for buffer of size {len(buffer)}")
        out.append(buffer.pop(idx))
    return ListingPrefix(tuple(out))
