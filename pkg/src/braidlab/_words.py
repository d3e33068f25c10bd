"""Run-length machinery shared by braid words and free-group words.

A word over a signed alphabet is stored as a sequence of runs
``(index, exponent)`` with every exponent nonzero and no two adjacent runs
sharing an index.  Free reduction is exactly run normalization: merge
adjacent runs with equal index, drop runs whose exponent becomes zero, and
cascade.
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator

Run = tuple[int, int]

_INT_RE = re.compile(r"[1-9][0-9]*\Z")
_SINT_RE = re.compile(r"-?[1-9][0-9]*\Z")


class WordParseError(ValueError):
    """Malformed word text; ``offset`` is the byte offset of the bad token."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


def normalize(pairs: Iterable[Run]) -> tuple[Run, ...]:
    """Freely reduce a run sequence, cascading merges through cancellations."""
    out: list[list[int]] = []
    for index, exponent in pairs:
        if exponent == 0:
            continue
        if out and out[-1][0] == index:
            out[-1][1] += exponent
            if out[-1][1] == 0:
                out.pop()
        else:
            out.append([index, exponent])
    return tuple((i, e) for i, e in out)


def invert(pairs: Iterable[Run]) -> tuple[Run, ...]:
    return tuple((i, -e) for i, e in reversed(list(pairs)))


def concat(left: Iterable[Run], right: Iterable[Run]) -> tuple[Run, ...]:
    return normalize(list(left) + list(right))


def power(pairs: Iterable[Run], k: int) -> tuple[Run, ...]:
    base = list(pairs)
    if k < 0:
        base = list(invert(base))
        k = -k
    return normalize(base * k)


def expand(pairs: Iterable[Run]) -> Iterator[Run]:
    """Yield single letters ``(index, +1/-1)``, one per unit of exponent."""
    for index, exponent in pairs:
        step = 1 if exponent > 0 else -1
        for _ in range(abs(exponent)):
            yield index, step


def letter_length(pairs: Iterable[Run]) -> int:
    return sum(abs(e) for _, e in pairs)


def split_terms(text: str) -> Iterator[tuple[str, int]]:
    """Split on whitespace, yielding ``(term, byte_offset)`` pairs."""
    for match in re.finditer(r"\S+", text):
        yield match.group(), match.start()


def parse_exponent(term: str, offset: int) -> tuple[str, int]:
    """Split a trailing ``^SINT`` off a term; returns (head, exponent)."""
    if "^" not in term:
        return term, 1
    head, _, tail = term.partition("^")
    if not _SINT_RE.match(tail):
        raise WordParseError(f"malformed exponent {tail!r}", offset)
    return head, int(tail)


def parse_positive_int(text: str, offset: int, what: str) -> int:
    if not _INT_RE.match(text):
        raise WordParseError(f"malformed {what} {text!r}", offset)
    return int(text)
