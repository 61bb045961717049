"""Integer partitions, the Bulgarian Solitaire move and its partial inverses.

Indices in every public function are 1-based, so ``reverse_move(p, 1)``
plays the largest part.  Partitions are stored as weakly decreasing tuples of
positive integers; :class:`Partition` is a thin ``tuple`` subclass so that
they hash, compare and unpack like ordinary tuples.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Partition",
    "DiffLabeling",
    "Invalid",
    "INVALID",
    "PlayingSequence",
    "bs_forward",
    "staircase",
    "reverse_move",
    "legal_moves",
    "apply_sequence",
    "diff_labeling",
    "diff_inverse",
    "partitions_of",
    "partition_count",
    "parse_partition",
    "parse_diff_labeling",
]


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    >>> Partition([2, 5, 2])
    Partition((5, 2, 2))
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        parts = sorted((int(x) for x in parts), reverse=True)
        if parts and parts[-1] <= 0:
            raise ValueError(f"partition parts must be positive, got {parts}")
        return tuple.__new__(cls, parts)

    @classmethod
    def _trusted(cls, parts: Iterable[int]) -> "Partition":
        # caller guarantees the parts are already sorted and positive
        return tuple.__new__(cls, parts)

    @property
    def n(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self)) + ")"


@dataclass(frozen=True)
class Invalid:
    """Result of an illegal reverse move (written as a bold zero in the literature).

    ``step`` is the 1-based position in a playing sequence that failed, when known.
    """

    step: int | None = None

    def __bool__(self) -> bool:
        return False


INVALID = Invalid()


@dataclass(frozen=True)
class PlayingSequence:
    """Part indices (1-based) to be played one after another by reverse moves."""

    indices: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "indices", tuple(int(i) for i in self.indices))
        if any(i < 1 for i in self.indices):
            raise ValueError("playing sequence indices are 1-based")

    def __len__(self) -> int:
        return len(self.indices)

    def __iter__(self) -> Iterator[int]:
        return iter(self.indices)


@dataclass(frozen=True)
class DiffLabeling:
    """A partition minus the staircase ``(m-1, ..., 1, 0)``, with playable parts marked.

    ``entries`` may contain zero and negative values.  ``brackets[j]`` is true
    when part ``j+1`` can be played by a reverse move.
    """

    entries: tuple[int, ...]
    brackets: tuple[bool, ...]
    base_m: int

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(int(x) for x in self.entries))
        object.__setattr__(self, "brackets", tuple(bool(b) for b in self.brackets))
        if len(self.entries) != len(self.brackets):
            raise ValueError("entries and brackets must have the same length")

    @property
    def bracketed(self) -> tuple[int, ...]:
        """1-based indices of the bracketed entries."""
        return tuple(j + 1 for j, b in enumerate(self.brackets) if b)

    def __str__(self) -> str:
        return ",".join(f"<{e}>" if b else str(e) for e, b in zip(self.entries, self.brackets))


def bs_forward(p: Sequence[int]) -> Partition:
    """One Bulgarian Solitaire move: take a card from every pile to form a new pile."""
    if not p:
        return Partition._trusted(())
    rest = [x - 1 for x in p if x > 1]
    new = len(p)
    # insert the new pile keeping weak decrease; rest is already sorted
    i = 0
    while i < len(rest) and rest[i] >= new:
        i += 1
    rest.insert(i, new)
    return Partition._trusted(rest)


def staircase(m: int) -> tuple[int, ...]:
    """The staircase vector ``(m-1, m-2, ..., 1, 0)`` of length ``m``."""
    if m < 0:
        raise ValueError("staircase order must be nonnegative")
    return tuple(range(m - 1, -1, -1))


def _reverse_raw(p: tuple[int, ...], j: int) -> tuple[int, ...] | None:
    # j is 0-based here; returns None when illegal
    L = len(p)
    pj = p[j]
    if pj < L - 1:
        return None
    out = [x + 1 for i, x in enumerate(p) if i != j]
    out.extend([1] * (pj - (L - 1)))
    return tuple(out)


def reverse_move(p: Sequence[int], j: int) -> Partition | Invalid:
    """Remove part ``j`` and reinsert it as the leftmost column of the Young diagram.

    Legal iff ``p[j] >= len(p) - 1``; otherwise returns :data:`INVALID`.
    """
    p = tuple(p)
    if not 1 <= j <= len(p):
        raise IndexError(f"part index {j} out of range for a partition with {len(p)} parts")
    out = _reverse_raw(p, j - 1)
    if out is None:
        return INVALID
    return Partition._trusted(out)


def legal_moves(p: Sequence[int]) -> frozenset[int]:
    """1-based indices ``j`` with ``p[j] >= len(p) - 1``."""
    bound = len(p) - 1
    return frozenset(j + 1 for j, x in enumerate(p) if x >= bound)


def apply_sequence(p: Sequence[int], sigma: PlayingSequence | Sequence[int]) -> Partition | Invalid:
    """Play the reverse moves of ``sigma`` in order; stops at the first illegal step."""
    cur = Partition(p)
    for step, j in enumerate(sigma, start=1):
        if not 1 <= j <= len(cur):
            return Invalid(step)
        nxt = reverse_move(cur, j)
        if not nxt:
            return Invalid(step)
        cur = nxt
    return cur


def diff_labeling(p: Sequence[int], m: int) -> DiffLabeling:
    """``p`` padded with zeros to length ``m`` minus the staircase of order ``m``."""
    p = tuple(p)
    if m < len(p):
        raise ValueError(f"staircase order {m} is shorter than the partition ({len(p)} parts)")
    legal = legal_moves(p)
    padded = p + (0,) * (m - len(p))
    entries = tuple(x - s for x, s in zip(padded, staircase(m)))
    brackets = tuple((j + 1) in legal and j < len(p) for j in range(m))
    return DiffLabeling(entries, brackets, m)


def diff_inverse(d: DiffLabeling) -> Partition:
    """Add the staircase back and drop trailing zeros."""
    parts = [e + s for e, s in zip(d.entries, staircase(d.base_m))]
    if len(d.entries) != d.base_m:
        raise ValueError("labeling length must equal its staircase order")
    if any(x < 0 for x in parts) or any(a < b for a, b in zip(parts, parts[1:])):
        raise ValueError(f"{d} does not come from a partition")
    while parts and parts[-1] == 0:
        parts.pop()
    return Partition._trusted(parts)


def partitions_of(n: int) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        yield Partition._trusted(())
        return

    def rec(remaining: int, cap: int, prefix: list[int]):
        if remaining == 0:
            yield Partition._trusted(prefix)
            return
        for x in range(min(remaining, cap), 0, -1):
            prefix.append(x)
            yield from rec(remaining - x, x, prefix)
            prefix.pop()

    yield from rec(n, n, [])


@lru_cache(maxsize=None)
def partition_count(n: int) -> int:
    """p(n) via Euler's pentagonal number recurrence."""
    if n < 0:
        return 0
    if n == 0:
        return 1
    total = 0
    k = 1
    while True:
        g1 = k * (3 * k - 1) // 2
        if g1 > n:
            break
        sign = 1 if k % 2 else -1
        total += sign * partition_count(n - g1)
        g2 = k * (3 * k + 1) // 2
        if g2 <= n:
            total += sign * partition_count(n - g2)
        k += 1
    return total


_PART_RE = re.compile(r"^\(?\s*(\d+(?:\s*,\s*\d+)*)?\s*,?\s*\)?$")


def parse_partition(text: str) -> Partition:
    """Parse ``"(4,2,2)"``; whitespace and the parentheses are optional."""
    text = text.strip()
    m = _PART_RE.match(text)
    if not m:
        raise ValueError(f"cannot parse partition from {text!r}")
    body = m.group(1)
    if body is None:
        return Partition._trusted(())
    parts = [int(x) for x in body.split(",")]
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise ValueError(f"partition {text!r} is not weakly decreasing")
    return Partition(parts)


def parse_diff_labeling(text: str, base_m: int | None = None) -> DiffLabeling:
    """Parse ``"<1>,<0>,1,0"``; angle brackets mark playable entries."""
    entries, brackets = [], []
    for tok in text.split(","):
        tok = tok.strip()
        if tok.startswith("<") and tok.endswith(">"):
            brackets.append(True)
            tok = tok[1:-1]
        else:
            brackets.append(False)
        entries.append(int(tok))
    return DiffLabeling(tuple(entries), tuple(brackets), len(entries) if base_m is None else base_m)
