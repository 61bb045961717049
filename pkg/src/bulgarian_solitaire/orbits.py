"""Finite orbits of Bulgarian Solitaire and their level statistics.

An orbit is grown backwards from its recurrent cycle: the children of a
partition are its legal reverse moves that are not themselves on the cycle.
Off the cycle every partition has exactly one image under the forward move,
so this visits each member once and the BFS depth is its level.
"""
from __future__ import annotations

import csv
import io
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .errors import ResourceLimitError
from .necklaces import (
    Necklace,
    color_swap,
    enumerate_necklaces,
    is_primitive,
    necklace_for_partition,
    necklace_params_for_n,
    power,
    recurrent_partitions,
)
from .partitions import Partition, _reverse_raw, bs_forward, partitions_of

__all__ = [
    "Orbit",
    "LevelPolynomial",
    "build_orbit",
    "level_gf",
    "decompose",
    "forward_oracle",
    "orbit_size_sequence",
    "chebyshev_T_at_2",
    "conjecture_ratios",
    "ConjectureReport",
    "orbit_n",
]

DEFAULT_MAX_NODES = 50_000_000


@dataclass
class Orbit:
    necklace: Necklace
    n: int
    cycle: list[Partition]
    levels: dict[Partition, int]
    histogram: list[int]
    partial: bool = False

    @property
    def size(self) -> int:
        return len(self.levels)

    @property
    def cycle_length(self) -> int:
        return len(self.cycle)

    def to_dict(self, members: bool = False) -> dict:
        out = {
            "necklace": self.necklace.label,
            "n": self.n,
            "size": self.size,
            "cycle_length": self.cycle_length,
            "histogram": list(self.histogram),
        }
        if self.partial:
            out["partial"] = True
        if members:
            out["members"] = [[str(p), lev] for p, lev in self.rows()]
        return out

    def rows(self) -> list[tuple[Partition, int]]:
        """(partition, level) pairs sorted by level, then partition descending."""
        return sorted(self.levels.items(), key=lambda kv: (kv[1], [-x for x in kv[0]]))

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["necklace", "partition", "level"])
        for p, lev in self.rows():
            w.writerow([self.necklace.label, str(p), lev])
        return buf.getvalue()


@dataclass(frozen=True)
class LevelPolynomial:
    coefficients: tuple[int, ...] = field(default=())

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        terms = []
        for d, c in enumerate(self.coefficients):
            if c == 0:
                continue
            mono = "" if d == 0 else ("x" if d == 1 else f"x^{d}")
            if d == 0:
                terms.append(str(c))
            else:
                terms.append(mono if c == 1 else f"{c}{mono}")
        return " + ".join(terms) if terms else "0"


def orbit_n(N: Necklace) -> int:
    """The number of cards whose orbit is indexed by ``N``."""
    return comb(N.p, 2) + N.b


def build_orbit(
    N: Necklace, max_level: int | None = None, max_nodes: int = DEFAULT_MAX_NODES
) -> Orbit:
    """Reverse breadth-first search from the recurrent cycle of ``N``.

    With ``max_level`` the search stops after that level and the orbit is
    marked partial (unless nothing lies beyond it anyway).
    """
    cycle = recurrent_partitions(N)
    on_cycle = set(cycle)
    levels: dict[Partition, int] = {c: 0 for c in cycle}
    histogram = [len(cycle)]
    frontier = list(cycle)
    level = 0
    partial = False
    while frontier:
        if max_level is not None and level >= max_level:
            partial = any(_children(p, on_cycle) for p in frontier)
            break
        level += 1
        nxt = []
        for p in frontier:
            for q in _children(p, on_cycle):
                if q not in levels:
                    levels[q] = level
                    nxt.append(q)
            if len(levels) > max_nodes:
                raise ResourceLimitError(
                    f"orbit of {N} exceeded {max_nodes} partitions at level {level}"
                )
        if nxt:
            histogram.append(len(nxt))
        frontier = nxt
    return Orbit(N, orbit_n(N), cycle, levels, histogram, partial)


def _children(p: tuple[int, ...], on_cycle: set) -> list[Partition]:
    out = []
    bound = len(p) - 1
    last = None
    for j, x in enumerate(p):
        if x < bound:
            break  # parts are decreasing, nothing further is playable
        if x == last:
            continue  # equal parts give equal results
        last = x
        q = Partition._trusted(_reverse_raw(p, j))
        if q not in on_cycle:
            out.append(q)
    return out


def level_gf(o: Orbit) -> LevelPolynomial:
    """The level polynomial ``sum x^level`` of a complete orbit."""
    if o.partial:
        raise ValueError(f"orbit of {o.necklace} was truncated; its level polynomial is unknown")
    return LevelPolynomial(tuple(o.histogram))


def decompose(n: int, max_nodes: int = DEFAULT_MAX_NODES) -> list[Orbit]:
    """All orbits of the partitions of ``n``, one per necklace, by reverse search."""
    if n < 1:
        raise ValueError("n must be positive")
    m, r = necklace_params_for_n(n)
    return [build_orbit(N, max_nodes=max_nodes) for N in enumerate_necklaces(m, r)]


def forward_oracle(n: int) -> list[Orbit]:
    """Orbits of ``n`` found by iterating the forward move from every partition.

    Independent of the reverse search: cycles are detected with a visited set,
    levels are forward distances to the cycle, and the necklace is read off
    the cycle's difference labelings.
    """
    if n < 1:
        raise ValueError("n must be positive")
    level: dict[Partition, int] = {}
    owner: dict[Partition, int] = {}  # partition -> orbit id
    cycles: list[list[Partition]] = []
    for start in partitions_of(n):
        if start in level:
            continue
        path = []
        pos: dict[Partition, int] = {}
        cur = start
        while cur not in level and cur not in pos:
            pos[cur] = len(path)
            path.append(cur)
            cur = bs_forward(cur)
        if cur in pos:
            # new cycle closes inside this path
            cyc = path[pos[cur]:]
            oid = len(cycles)
            cycles.append(cyc)
            for c in cyc:
                level[c] = 0
                owner[c] = oid
            tail = path[: pos[cur]]
            base, oid_tail = 0, oid
        else:
            tail = path
            base, oid_tail = level[cur], owner[cur]
        for i, q in enumerate(reversed(tail), start=1):
            level[q] = base + i
            owner[q] = oid_tail
    orbits = []
    for oid, cyc in enumerate(cycles):
        N = necklace_for_partition(cyc[0])
        if N is None or any(necklace_for_partition(c) != N for c in cyc):
            raise AssertionError(f"cycle through {cyc[0]} has no consistent necklace")
        members = {q: lev for q, lev in level.items() if owner[q] == oid}
        depth = max(members.values())
        hist = [0] * (depth + 1)
        for lev in members.values():
            hist[lev] += 1
        # order the cycle like the reverse search does: starting from the
        # canonical word's partition and following reverse moves of part 1
        first = recurrent_partitions(N)[0]
        k = cyc.index(first)
        ordered = [cyc[(k - i) % len(cyc)] for i in range(len(cyc))]
        orbits.append(Orbit(N, n, ordered, members, hist))
    orbits.sort(key=lambda o: o.necklace)
    return orbits


def orbit_size_sequence(P: Necklace, k_max: int, max_nodes: int = DEFAULT_MAX_NODES) -> list[int]:
    """``|O_{P^k}|`` for ``k = 1..k_max``."""
    if not is_primitive(P):
        raise ValueError(f"{P} is not primitive")
    return [build_orbit(power(P, k), max_nodes=max_nodes).size for k in range(1, k_max + 1)]


def chebyshev_T_at_2(k: int) -> int:
    """``T_k(2)``: 1, 2, 7, 26, 97, ..."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    a, b = 1, 2
    for _ in range(k):
        a, b = b, 4 * b - a
    return a


@dataclass
class ConjectureReport:
    necklace: Necklace
    partner: Necklace
    sizes: list[int]
    partner_sizes: list[int]
    ratios: list[Fraction]
    partner_ratios: list[Fraction]

    @staticmethod
    def _constant(ratios: list[Fraction]) -> int | None:
        if ratios and len(set(ratios)) == 1 and ratios[0].denominator == 1:
            return int(ratios[0])
        return None

    @property
    def c(self) -> int | None:
        """The common integer ratio, or None if the ratios are not one integer."""
        return self._constant(self.ratios)

    @property
    def partner_c(self) -> int | None:
        return self._constant(self.partner_ratios)

    @property
    def swap_agrees(self) -> bool | None:
        if self.c is None or self.partner_c is None:
            return None
        return self.c == self.partner_c

    def to_dict(self) -> dict:
        return {
            "necklace": self.necklace.label,
            "partner": self.partner.label,
            "sizes": self.sizes,
            "partner_sizes": self.partner_sizes,
            "ratios": [str(r) for r in self.ratios],
            "partner_ratios": [str(r) for r in self.partner_ratios],
            "integer_ratio": self.c,
            "partner_integer_ratio": self.partner_c,
            "swap_agrees": self.swap_agrees,
        }


def conjecture_ratios(P: Necklace, k_max: int, max_nodes: int = DEFAULT_MAX_NODES) -> ConjectureReport:
    """Successive orbit-size ratios of ``P^k`` and of its color-swapped partner.

    This is an evidence report; nothing here asserts that the ratios are constant.
    """
    if not is_primitive(P) or P.p < 3:
        raise ValueError("need a primitive necklace of length at least 3")
    if k_max < 2:
        raise ValueError("k_max must be at least 2")
    Q = color_swap(P)
    sizes = orbit_size_sequence(P, k_max, max_nodes)
    qsizes = sizes if Q == P else orbit_size_sequence(Q, k_max, max_nodes)

    def ratios(s):
        return [Fraction(s[i], s[i - 1]) for i in range(1, len(s))]

    return ConjectureReport(P, Q, sizes, qsizes, ratios(sizes), ratios(qsizes))
