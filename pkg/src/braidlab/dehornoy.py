"""Handle reduction and the Dehornoy ordering of braid words.

A word is *i-positive* when the lowest generator index occurring in it is i
and σ_i appears with positive exponents only; the positive cone of the
Dehornoy ordering consists of the braids admitting an i-positive
representative for some i.  A *handle* is a subword σ_i^e v σ_i^{-e} (e =
+/-1) whose interior v uses only generator indices > i.  Handle reduction
removes handles while preserving the braid; a handle-free word is either
empty or i-positive/i-negative in its lowest occurring index, which is how
signs are decided here.

A σ_i-handle may be reduced once its interior contains no σ_{i+1}-handle.
The handle whose closing letter comes first in the word always satisfies
this (any interior handle would close even earlier), so repeatedly reducing
the leftmost handle is both deterministic and always permitted.

Reduction of σ_i^e v σ_i^{-e}: drop the two flanking letters and replace
each σ_{i+1}^d letter of v by σ_{i+1}^{-e} σ_i^d σ_{i+1}^e, leaving indices
>= i+2 untouched, then freely reduce.  Termination is guaranteed for three
strands (and holds in general, but with impractical bounds), so a step
budget guards every reduction; exceeding it raises
:class:`BudgetExceededError` rather than looping.
"""

from __future__ import annotations

import dataclasses
import os

from . import _words
from .braid import BraidWord, half_twist
from .burau import braid_equal

__all__ = [
    "POSITIVE",
    "NEGATIVE",
    "TRIVIAL",
    "LESS",
    "EQUAL",
    "GREATER",
    "BUDGET_ENV_VAR",
    "BudgetExceededError",
    "CofinalCapError",
    "Handle",
    "OrderVerdict",
    "TraceStep",
    "handle_reduce",
    "handle_reduce_trace",
    "dehornoy_sign",
    "braid_compare",
    "cofinal_bound",
    "commutes",
]

POSITIVE = "positive"
NEGATIVE = "negative"
TRIVIAL = "trivial"

LESS = "less"
EQUAL = "equal"
GREATER = "greater"

BUDGET_ENV_VAR = "BRAIDLAB_BUDGET"
_STEPS_PER_LETTER = 1_000_000


class BudgetExceededError(RuntimeError):
    """Handle reduction ran out of its step budget.

    Signals a strategy bug or an unsupported input (reduction on more than
    three strands is best-effort only).
    """

    def __init__(self, word: BraidWord, steps: int):
        super().__init__(
            f"handle reduction exceeded {steps} steps on a word of length {word.length}"
        )
        self.word = word
        self.steps = steps


class CofinalCapError(RuntimeError):
    """The cofinal-power search hit its cap; raise the cap to continue."""

    def __init__(self, word: BraidWord, cap: int):
        super().__init__(f"no k <= {cap} with the given word below Δ^(2k)")
        self.word = word
        self.cap = cap


@dataclasses.dataclass(frozen=True)
class Handle:
    """A handle located in the single-letter expansion of a word.

    ``start`` and ``end`` are 0-based positions of the flanking letters, so
    the letters ``start .. end`` inclusive spell σ_index^sign v
    σ_index^{-sign}.
    """

    start: int
    end: int
    index: int
    sign: int

    def to_json_dict(self) -> dict:
        return dataclasses.asdict(self)


@dataclasses.dataclass(frozen=True)
class OrderVerdict:
    """Sign of a braid in the Dehornoy ordering.

    ``kind`` is trivial exactly when the reduced representative is empty;
    otherwise ``main_index`` is the lowest generator index of the handle-free
    representative and ``kind`` is the common sign of its exponents there.
    """

    kind: str
    main_index: int | None = None

    @property
    def is_positive(self) -> bool:
        return self.kind == POSITIVE

    @property
    def is_negative(self) -> bool:
        return self.kind == NEGATIVE

    @property
    def is_trivial(self) -> bool:
        return self.kind == TRIVIAL

    def negated(self) -> "OrderVerdict":
        if self.kind == TRIVIAL:
            return self
        return OrderVerdict(NEGATIVE if self.kind == POSITIVE else POSITIVE, self.main_index)

    def __str__(self) -> str:
        if self.kind == TRIVIAL:
            return TRIVIAL
        return f"{self.kind}({self.main_index})"


@dataclasses.dataclass(frozen=True)
class TraceStep:
    step: int
    handle: Handle
    word: BraidWord


def _resolve_budget(length: int, budget: int | None) -> int:
    if budget is not None:
        return budget
    env = os.environ.get(BUDGET_ENV_VAR)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise ValueError(f"{BUDGET_ENV_VAR} must be an integer, got {env!r}") from None
    return _STEPS_PER_LETTER * max(1, length)


def _leftmost_handle(runs: list[tuple[int, int]]) -> tuple[int, int] | None:
    """Positions (p, q) of the handle with the earliest closing run, if any.

    A handle closes at run q when the nearest earlier run with index <= the
    q-run's index has equal index and opposite sign.
    """
    for q in range(1, len(runs)):
        index = runs[q][0]
        for p in range(q - 1, -1, -1):
            p_index = runs[p][0]
            if p_index > index:
                continue
            if p_index == index and (runs[p][1] > 0) != (runs[q][1] > 0):
                return p, q
            break
    return None


def _expanded_span(runs: list[tuple[int, int]], p: int, q: int) -> tuple[int, int]:
    prefix = 0
    for k in range(p):
        prefix += abs(runs[k][1])
    start = prefix + abs(runs[p][1]) - 1
    end = start + 1
    for k in range(p + 1, q):
        end += abs(runs[k][1])
    return start, end


def _apply_handle(runs: list[tuple[int, int]], p: int, q: int) -> list[tuple[int, int]]:
    index = runs[p][0]
    e = 1 if runs[p][1] > 0 else -1
    out: list[tuple[int, int]] = list(runs[:p])
    out.append((index, runs[p][1] - e))
    for j, d in runs[p + 1 : q]:
        if j == index + 1:
            out.extend(((j, -e), (index, d), (j, e)))
        else:
            out.append((j, d))
    out.append((index, runs[q][1] + e))
    out.extend(runs[q + 1 :])
    return list(_words.normalize(out))


def _reduce(word: BraidWord, budget: int | None, trace: list[TraceStep] | None) -> BraidWord:
    runs = list(word.letters)
    limit = _resolve_budget(word.length, budget)
    steps = 0
    while True:
        found = _leftmost_handle(runs)
        if found is None:
            return BraidWord(word.strands, tuple(runs))
        if steps >= limit:
            raise BudgetExceededError(word, steps)
        p, q = found
        if trace is not None:
            start, end = _expanded_span(runs, p, q)
            sign = 1 if runs[p][1] > 0 else -1
            handle = Handle(start, end, runs[p][0], sign)
        runs = _apply_handle(runs, p, q)
        steps += 1
        if trace is not None:
            trace.append(TraceStep(steps, handle, BraidWord(word.strands, tuple(runs))))


def handle_reduce(word: BraidWord, budget: int | None = None) -> BraidWord:
    """Fully handle-free word representing the same braid.

    The default budget is 10^6 steps per input letter; the environment
    variable ``BRAIDLAB_BUDGET`` (an absolute step count) overrides it, and
    an explicit ``budget`` argument overrides both.
    """
    return _reduce(word, budget, None)


def handle_reduce_trace(
    word: BraidWord, budget: int | None = None
) -> tuple[BraidWord, list[TraceStep]]:
    """Like :func:`handle_reduce` but also returns one record per step."""
    trace: list[TraceStep] = []
    reduced = _reduce(word, budget, trace)
    return reduced, trace


def dehornoy_sign(word: BraidWord, budget: int | None = None) -> OrderVerdict:
    """Dehornoy sign of a braid word.

    Guaranteed for three strands; words on more strands are reduced
    best-effort under the same budget.
    """
    reduced = handle_reduce(word, budget)
    if reduced.is_identity():
        return OrderVerdict(TRIVIAL)
    main = min(index for index, _ in reduced.letters)
    signs = {e > 0 for i, e in reduced.letters if i == main}
    if len(signs) != 1:  # impossible on a handle-free word
        raise AssertionError(f"handle-free word is not σ-definite: {reduced}")
    return OrderVerdict(POSITIVE if signs.pop() else NEGATIVE, main)


def braid_compare(u: BraidWord, v: BraidWord, budget: int | None = None) -> str:
    """Compare two braids in the Dehornoy ordering: u < v iff u^{-1} v is
    Dehornoy-positive."""
    if u.strands != v.strands:
        raise ValueError(f"strand count mismatch: {u.strands} != {v.strands}")
    verdict = dehornoy_sign(u.inverse() * v, budget)
    if verdict.is_trivial:
        return EQUAL
    return LESS if verdict.is_positive else GREATER


def cofinal_bound(word: BraidWord, cap: int = 64, budget: int | None = None) -> int:
    """Least k >= 1 with ``word`` below Δ^(2k) in the Dehornoy ordering.

    Searches k = 1, 2, ... up to ``cap``; raises :class:`CofinalCapError`
    beyond it (Δ^2 is cofinal, so a bound always exists for three strands).
    """
    if word.strands != 3:
        raise ValueError("cofinal bounds are specific to 3 strands")
    for k in range(1, cap + 1):
        if braid_compare(word, half_twist(2 * k), budget) == LESS:
            return k
    raise CofinalCapError(word, cap)


def commutes(u: BraidWord, v: BraidWord) -> bool:
    """Whether two three-strand braids commute, decided by the Burau oracle."""
    return braid_equal(u * v, v * u)
