"""Binary necklaces and the recurrent cycles they index.

A necklace is a cyclic word over ``{B, W}``; bits use ``B = 1``, ``W = 0``.
The stored word is the lexicographically smallest rotation.  For display the
largest rotation is used instead (``BWW`` rather than ``WWB``) because that is
how these necklaces are usually named.

The partitions of ``n`` split into orbits under the Bulgarian Solitaire move,
one orbit per necklace of length ``m`` with ``r`` black beads, where
``C(m, 2) <= n < C(m+1, 2)`` and ``r = n - C(m, 2)``.  The recurrent cycle of
that orbit consists of the partitions whose difference labeling (against the
staircase of order ``m``) is a 0/1 rotation of the necklace word.
"""
from __future__ import annotations

import itertools
import json
import re
from dataclasses import dataclass
from math import comb, isqrt
from typing import Sequence

from .partitions import (
    DiffLabeling,
    Partition,
    diff_inverse,
    diff_labeling,
    reverse_move,
)

__all__ = [
    "Necklace",
    "RecurrentCycle",
    "canonicalize",
    "is_primitive",
    "power",
    "primitive_root",
    "color_swap",
    "necklace_params_for_n",
    "necklace_for_partition",
    "enumerate_necklaces",
    "primitive_necklaces",
    "recurrent_cycle",
    "recurrent_partitions",
    "parse_necklace",
]


def _min_rotation(word: tuple[int, ...]) -> tuple[int, ...]:
    return min(word[i:] + word[:i] for i in range(len(word)))


@dataclass(frozen=True, order=True)
class Necklace:
    """Rotation class of a binary word, stored in canonical (minimal) rotation."""

    word: tuple[int, ...]

    def __post_init__(self):
        word = tuple(int(x) for x in self.word)
        if not word:
            raise ValueError("a necklace needs at least one bead")
        if any(x not in (0, 1) for x in word):
            raise ValueError(f"necklace beads must be 0 or 1, got {word}")
        object.__setattr__(self, "word", _min_rotation(word))

    @property
    def p(self) -> int:
        return len(self.word)

    @property
    def b(self) -> int:
        return sum(self.word)

    @property
    def letters(self) -> str:
        """Canonical word in letters, e.g. ``WWB``."""
        return "".join("B" if x else "W" for x in self.word)

    @property
    def label(self) -> str:
        """Largest rotation in letters, e.g. ``BWW``."""
        w = self.word
        top = max(w[i:] + w[:i] for i in range(len(w)))
        return "".join("B" if x else "W" for x in top)

    def rotations(self) -> list[tuple[int, ...]]:
        w = self.word
        return [w[i:] + w[:i] for i in range(len(w))]

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def to_dict(self) -> dict:
        return {"word": self.label, "canonical": self.letters, "p": self.p, "b": self.b}

    def __str__(self) -> str:
        return self.label


def canonicalize(word: Sequence[int] | str) -> Necklace:
    """Necklace of ``word`` (bits or ``B``/``W`` letters)."""
    if isinstance(word, str):
        return parse_necklace(word)
    return Necklace(tuple(word))


def is_primitive(N: Necklace) -> bool:
    """True unless the word is a proper power of a shorter word."""
    w, p = N.word, N.p
    return not any(p % d == 0 and w[d:] + w[:d] == w for d in range(1, p))


def primitive_root(N: Necklace) -> tuple[Necklace, int]:
    """``(P, k)`` with ``N = P^k`` and ``P`` primitive."""
    w, p = N.word, N.p
    for d in range(1, p + 1):
        if p % d == 0 and w[d:] + w[:d] == w:
            return Necklace(w[:d]), p // d
    raise AssertionError("unreachable")


def power(P: Necklace, k: int) -> Necklace:
    """The necklace ``P^k``."""
    if k < 1:
        raise ValueError("k must be positive")
    return Necklace(P.word * k)


def color_swap(N: Necklace) -> Necklace:
    """Exchange black and white beads."""
    return Necklace(tuple(1 - x for x in N.word))


def necklace_params_for_n(n: int) -> tuple[int, int]:
    """``(m, r)`` with ``C(m, 2) <= n < C(m+1, 2)`` and ``r = n - C(m, 2)``."""
    if n < 1:
        raise ValueError("n must be positive")
    m = (1 + isqrt(1 + 8 * n)) // 2
    while comb(m, 2) > n:
        m -= 1
    while comb(m + 1, 2) <= n:
        m += 1
    return m, n - comb(m, 2)


def enumerate_necklaces(m: int, r: int) -> list[Necklace]:
    """All necklaces of length ``m`` with exactly ``r`` black beads, sorted."""
    if not 0 <= r <= m:
        raise ValueError(f"need 0 <= r <= m, got m={m}, r={r}")
    seen = set()
    for ones in itertools.combinations(range(m), r):
        w = [0] * m
        for i in ones:
            w[i] = 1
        seen.add(_min_rotation(tuple(w)))
    return [Necklace(w) for w in sorted(seen)]


def primitive_necklaces(p: int) -> list[Necklace]:
    """All primitive necklaces of length ``p``, sorted by canonical word."""
    out = []
    for r in range(p + 1):
        out.extend(N for N in enumerate_necklaces(p, r) if is_primitive(N))
    return sorted(out)


@dataclass(frozen=True)
class RecurrentCycle:
    """The recurrent cycle of the orbit of ``necklace``, as bracketed labelings.

    ``roots[t]`` is followed by ``roots[t+1]`` under the reverse move of part 1,
    and the last root wraps around to the first.
    """

    necklace: Necklace
    roots: tuple[DiffLabeling, ...]

    @property
    def order(self) -> int:
        return len(self.roots)

    @property
    def partitions(self) -> list[Partition]:
        return [diff_inverse(r) for r in self.roots]


def recurrent_cycle(N: Necklace) -> RecurrentCycle:
    m = N.p
    start = diff_inverse(DiffLabeling(N.word, (False,) * m, m))
    lab = diff_labeling(start, m)
    roots = [lab]
    if not start:
        return RecurrentCycle(N, (lab,))  # n = 0: the empty partition alone
    cur = start
    while True:
        nxt = reverse_move(cur, 1)
        if not nxt:
            raise AssertionError(f"part 1 of recurrent partition {cur} is not playable")
        lab = diff_labeling(nxt, m)
        if set(lab.entries) - {0, 1} or canonicalize(lab.entries) != N:
            raise AssertionError(f"{nxt} left the recurrent cycle of {N}")
        if nxt == start:
            break
        roots.append(lab)
        cur = nxt
        if len(roots) > m:
            raise AssertionError("recurrent cycle longer than the necklace")
    return RecurrentCycle(N, tuple(roots))


def recurrent_partitions(N: Necklace) -> list[Partition]:
    """Partitions on the recurrent cycle of ``N``'s orbit, in cycle order."""
    return recurrent_cycle(N).partitions


def necklace_for_partition(p: Sequence[int]) -> Necklace | None:
    """The necklace whose recurrent cycle contains ``p``, or None if ``p`` is transient."""
    n = sum(p)
    m, _ = necklace_params_for_n(n)
    if len(p) > m:
        return None
    lab = diff_labeling(p, m)
    if set(lab.entries) - {0, 1}:
        return None
    return Necklace(lab.entries)


_NECKLACE_RE = re.compile(r"^\(?([BWbw01]+)\)?(?:\^(\d+))?$")


def parse_necklace(text: str) -> Necklace:
    """Parse ``BWW``, ``100``, ``W^4`` or ``(BW)^2``."""
    t = text.strip().replace(" ", "")
    m = _NECKLACE_RE.match(t)
    if not m:
        raise ValueError(f"cannot parse necklace from {text!r}")
    body, exp = m.group(1), m.group(2)
    bits = tuple(1 if c in "Bb1" else 0 for c in body)
    if exp is not None and int(exp) < 1:
        raise ValueError("necklace exponent must be positive")
    return Necklace(bits * (int(exp) if exp else 1))
