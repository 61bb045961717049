"""Quasi-infinite forests of reverse moves and their exact level counts.

A forest node stands for the common prefix of the difference labelings
reached by the same playing sequence in the orbits of ``P^k`` for every large
``k``.  Its stored ``entries`` are a finite prefix, kept as short as
possible; past the end the vector continues periodically with the necklace
word, so the last ``|P|`` stored entries always form one rotation of ``P``
(the node's *tail*).

Bracket marks follow from one threshold.  After part ``i`` with label value
``a`` is played, the new partition has exactly ``a + m - i`` parts, so a
position ``s`` is playable iff ``entry[s] - s >= a - i - 1``.  The node keeps
that right-hand side as ``cut``.  Above the played index every entry passes,
which is why rule 3 brackets all of them; below it at most three entries can
pass.

Two ways to count levels are provided.  :func:`iter_forest` expands nodes one
by one through :func:`expand_node` and is used for inspection and structural
checks.  The default path of :func:`truncated_levels` works on the same states
shifted so that the threshold is zero (the values ``entry[s] - s - cut``).
There a move only depends on the multiset of values, and values too negative
to become playable within the remaining depth can be dropped.  Identical
truncated states are then counted once.
"""
from __future__ import annotations

import sys
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Sequence

from .errors import ResourceLimitError
from .necklaces import Necklace, is_primitive, recurrent_cycle

__all__ = [
    "ForestNode",
    "ForestLevels",
    "forest_roots",
    "expand_node",
    "forest_play",
    "iter_forest",
    "truncated_levels",
    "pruned_series",
    "to_dot",
]

DEFAULT_MAX_NODES = 50_000_000


@dataclass(frozen=True)
class ForestNode:
    """One vertex of the forest.

    ``tail_root`` is the (1-based) root whose first ``|P|`` entries equal the
    last ``|P|`` stored entries, ``tree`` the root of the tree containing the
    node.  ``rule`` records whether the move producing it played a tail entry
    (1) or an entry above the tail (2); it is None on roots.
    """

    entries: tuple[int, ...]
    brackets: tuple[bool, ...]
    tail_root: int
    depth: int = 0
    edge_label: str | None = None
    cut: int = field(default=-2, compare=False)
    tree: int = field(default=1, compare=False)
    rule: int | None = field(default=None, compare=False)

    @property
    def key(self) -> tuple:
        return self.entries, self.brackets

    @property
    def bracketed(self) -> tuple[int, ...]:
        return tuple(j + 1 for j, b in enumerate(self.brackets) if b)

    def __str__(self) -> str:
        return ",".join(f"<{e}>" if b else str(e) for e, b in zip(self.entries, self.brackets))


@dataclass(frozen=True)
class ForestLevels:
    """``per_tree[t][d]`` nodes at depth ``d`` in tree ``t+1``, for ``d <= depth``."""

    per_tree: tuple[tuple[int, ...], ...]
    depth: int

    @property
    def total(self) -> list[int]:
        return [sum(col) for col in zip(*self.per_tree)]


@dataclass(frozen=True)
class _Shape:
    word: tuple[int, ...]  # period of the infinite tail
    roots: tuple[ForestNode, ...]
    heads: tuple[tuple[int, ...], ...]  # first |P| entries of each root

    @property
    def p(self) -> int:
        return len(self.word)


def _cut_for(period: Sequence[int]) -> int:
    # the recurrent partition of (period)^k has km parts if it ends in 1, else km - 1
    return -1 if period[-1] == 1 else -2


def _brackets(entries: Sequence[int], cut: int) -> tuple[bool, ...]:
    return tuple(e - s >= cut for s, e in enumerate(entries, start=1))


@lru_cache(maxsize=None)
def _shape(P: Necklace) -> _Shape:
    if P.word == (0,):
        word = (0,)
        root_entries = [(0, 0)]
    elif P.word == (0, 1):
        word = (0, 1)
        root_entries = [(0, 1), (1, 0, 1)]
    elif P.p >= 3 and is_primitive(P):
        word = P.word
        root_entries = [r.entries for r in recurrent_cycle(P).roots]
    else:
        raise ValueError(
            f"forest defined for W, BW and primitive necklaces of length >= 3, not {P}"
        )
    p = len(word)
    heads = tuple(tuple(ent[:p]) for ent in root_entries)
    roots = []
    for t, ent in enumerate(root_entries, start=1):
        cut = _cut_for(ent[:p])
        tail = heads.index(tuple(ent[-p:])) + 1
        roots.append(
            ForestNode(tuple(ent), _brackets(ent, cut), tail, 0, None, cut, t, None)
        )
    if p >= 3:
        cyc = recurrent_cycle(P)
        for node, r in zip(roots, cyc.roots):
            assert node.brackets == r.brackets, "threshold disagrees with root legality"
    return _Shape(word, tuple(roots), heads)


def forest_roots(P: Necklace) -> list[ForestNode]:
    """Roots of the trees of the forest of ``P``.

    ``W`` has the single root ``<0>,<0>``, ``BW`` the two roots ``<0>,<1>`` and
    ``<1>,<0>,<1>``, and a primitive necklace of length at least three the
    bracketed recurrent labelings of its own orbit.
    """
    return list(_shape(P).roots)


def _tail_root(shape: _Shape, entries: Sequence[int]) -> int:
    tail = tuple(entries[-shape.p:])
    try:
        return shape.heads.index(tail) + 1
    except ValueError:
        raise AssertionError(f"tail {tail} matches no root") from None


def _tail_offset(shape: _Shape, entries: Sequence[int]) -> int:
    # rotation offset o with tail == word[o:] + word[:o]
    w = shape.word
    tail = tuple(entries[-shape.p:])
    for o in range(shape.p):
        if w[o:] + w[:o] == tail:
            return o
    raise AssertionError(f"tail {tail} is not a rotation of {w}")


class _Vector:
    """Stored entries followed by the periodic continuation of their tail."""

    __slots__ = ("entries", "word", "o")

    def __init__(self, entries: Sequence[int], shape: _Shape):
        self.entries = entries
        self.word = shape.word
        self.o = _tail_offset(shape, entries)

    def __getitem__(self, s: int) -> int:
        # 1-based
        L = len(self.entries)
        if s <= L:
            return self.entries[s - 1]
        return self.word[(self.o + s - L - 1) % len(self.word)]


def expand_node(node: ForestNode, P: Necklace, roots: Sequence[ForestNode] | None = None) -> list[ForestNode]:
    """Children of ``node``: one per bracketed index, merged ``i/i+1`` plays counted once.

    Rule 1 (tail play) re-seats the tail on the next root; rule 2 deletes the
    entry; rule 3 raises and brackets everything above the played index.  For
    ``W`` the trailing zeros are replenished (rule 4) by materializing bracketed
    positions past the stored prefix, which the generic code does for any
    necklace.
    """
    shape = _shape(P)
    p = shape.p
    ent = node.entries
    L = len(ent)
    vec = _Vector(ent, shape)
    children: list[ForestNode] = []
    seen = set()
    for i in node.bracketed:
        a = ent[i - 1]
        if vec[i + 1] == a + 1:
            # equal parts in the partition: R_i and R_{i+1} coincide, play i+1
            if i + 1 > L:
                raise AssertionError("bracketed entry beyond the stored prefix")
            continue
        label = str(i)
        if i >= 2 and ent[i - 2] + 1 == a:
            label = f"{i - 1}/{i}"
        cut = a - i - 1
        above = [x + 1 for x in ent[: i - 1]]
        if i > L - p:
            rule = 1
            below = [vec[s] for s in range(i + 1, i + p + 1)]
        else:
            rule = 2
            below = list(ent[i:])
        new = above + below
        # materialize positions past the prefix that became playable
        extra = _Vector(new, shape)
        s = len(new) + 1
        while extra[s] - s >= cut:
            new.append(extra[s])
            s += 1
        # drop trailing entries that merely repeat the periodic continuation
        while len(new) > p and new[-1] == new[-1 - p] and new[-1] - len(new) < cut:
            new.pop()
        new_t = tuple(new)
        br = _brackets(new_t, cut)
        child = ForestNode(
            new_t, br, _tail_root(shape, new_t), node.depth + 1, label, cut, node.tree, rule
        )
        if child.key not in seen:
            seen.add(child.key)
            children.append(child)
    return children


def forest_play(node: ForestNode, P: Necklace, sigma: Sequence[int]) -> ForestNode | None:
    """Follow the playing sequence ``sigma`` from ``node``; None if a step is illegal.

    Either index of a merged ``i/i+1`` edge selects that edge.
    """
    cur = node
    for j in sigma:
        if not (1 <= j <= len(cur.entries) and cur.brackets[j - 1]):
            return None
        nxt = None
        for child in expand_node(cur, P):
            lab = child.edge_label
            idx = [int(x) for x in lab.split("/")]
            if j in idx:
                nxt = child
                break
        if nxt is None:
            return None
        cur = nxt
    return cur


def iter_forest(
    P: Necklace, D: int, trees: Sequence[int] | None = None, max_nodes: int = DEFAULT_MAX_NODES
) -> Iterator[ForestNode]:
    """Breadth-first traversal of every tree down to depth ``D``."""
    roots = forest_roots(P)
    if trees is not None:
        roots = [roots[t - 1] for t in trees]
    queue = deque(roots)
    emitted = 0
    while queue:
        node = queue.popleft()
        emitted += 1
        if emitted > max_nodes:
            raise ResourceLimitError(f"forest of {P} exceeded {max_nodes} nodes")
        yield node
        if node.depth < D:
            queue.extend(expand_node(node, P))


# -- fast level counting ----------------------------------------------------------

class _LevelCounter:
    """Level counts below shifted states, memoized on their relevant part.

    A state is ``(vals, tail)``: ``vals`` the weakly decreasing shifted values
    ``entry[s] - s - cut`` of the stored prefix, ``tail`` a pair ``(o, c)``
    saying the ``i``-th value past the prefix is ``word[(o+i-1) % p] - i + c``,
    or None once the tail can no longer matter.  Position ``s`` is playable iff
    its value is ``>= 0``; playing value ``a`` removes it and adds ``2 - a`` to
    every other value.
    """

    def __init__(self, word: Sequence[int], max_states: int = DEFAULT_MAX_NODES):
        self.word = tuple(word)
        self.p = len(word)
        self.memo: dict = {}
        self.max_states = max_states

    def _canon(self, vals: tuple[int, ...], tail, r: int):
        lo = -2 * (r - 1)  # nothing below can reach 0 within r - 1 moves
        if tail is not None and (not vals or vals[-1] >= lo):
            o, c = tail
            grown = list(vals)
            w, p = self.word, self.p
            while True:
                v = w[o] - 1 + c
                if v < lo:
                    break
                grown.append(v)
                o = (o + 1) % p
                c -= 1
            vals, tail = tuple(grown), (o, c)
        if vals and vals[-1] < lo:
            vals = tuple(v for v in vals if v >= lo)
            tail = None
        return vals, tail

    def counts(self, vals: tuple[int, ...], tail, r: int) -> tuple[int, ...]:
        if r == 0:
            return (1,)
        vals, tail = self._canon(vals, tail, r)
        key = (vals, tail, r)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        if len(self.memo) >= self.max_states:
            raise ResourceLimitError(f"level counter exceeded {self.max_states} states")
        out = [1] + [0] * r
        last = None
        for idx, a in enumerate(vals):
            if a < 0:
                break
            if a == last:
                continue
            last = a
            shift = 2 - a
            child = tuple(v + shift for k, v in enumerate(vals) if k != idx)
            ctail = None if tail is None else (tail[0], tail[1] + shift)
            sub = self.counts(child, ctail, r - 1)
            for d, v in enumerate(sub, start=1):
                out[d] += v
        res = tuple(out)
        self.memo[key] = res
        return res

    def node_counts(self, node: ForestNode, shape: _Shape, r: int) -> tuple[int, ...]:
        ent = node.entries
        L = len(ent)
        vals = tuple(e - s - node.cut for s, e in enumerate(ent, start=1))
        tail = (_tail_offset(shape, ent), -L - node.cut)
        return self.counts(vals, tail, r)


def truncated_levels(
    P: Necklace, D: int, method: str = "memo", max_nodes: int = DEFAULT_MAX_NODES
) -> ForestLevels:
    """Exact node counts per tree and depth, for depths ``0..D``.

    ``method="bfs"`` expands every node explicitly; the default memoized
    counter gives the same numbers far faster.
    """
    if D < 0:
        raise ValueError("depth must be nonnegative")
    shape = _shape(P)
    if method == "bfs":
        per = {t: [0] * (D + 1) for t in range(1, len(shape.roots) + 1)}
        for node in iter_forest(P, D, max_nodes=max_nodes):
            per[node.tree][node.depth] += 1
        rows = tuple(tuple(per[t]) for t in sorted(per))
    elif method == "memo":
        counter = _LevelCounter(shape.word, max_states=max_nodes)
        limit = sys.getrecursionlimit()
        if limit < D + 100:
            sys.setrecursionlimit(D + 100)
        rows = tuple(counter.node_counts(root, shape, D) for root in shape.roots)
    else:
        raise ValueError(f"unknown method {method!r}")
    return ForestLevels(rows, D)


def pruned_series(
    P: Necklace, D: int, method: str = "memo", max_nodes: int = DEFAULT_MAX_NODES
) -> list[int]:
    """Level sizes of the forest with its ``[1...]`` branches removed.

    Every tree's branch through part 1 is a copy of the next tree one level
    down, so with ``g`` the total level counts the remaining sizes are
    ``g[d] - g[d-1]``.
    """
    g = truncated_levels(P, D, method=method, max_nodes=max_nodes).total
    return [g[0]] + [g[d] - g[d - 1] for d in range(1, D + 1)]


def to_dot(P: Necklace, D: int, trees: Sequence[int] | None = None) -> str:
    """Graphviz source for the forest truncated at depth ``D``."""
    lines = [f'digraph "{P}" {{', "  node [shape=box, fontname=monospace];"]
    ids: dict = {}

    def name(node):
        return ids.setdefault(id(node), f"n{len(ids)}")

    for root in (forest_roots(P) if trees is None else [forest_roots(P)[t - 1] for t in trees]):
        stack = [root]
        lines.append(f'  {name(root)} [label="{root}", style=bold];')
        while stack:
            node = stack.pop()
            if node.depth >= D:
                continue
            for child in expand_node(node, P):
                lines.append(f'  {name(child)} [label="{child}"];')
                lines.append(f'  {name(node)} -> {name(child)} [label="{child.edge_label}"];')
                stack.append(child)
    lines.append("}")
    return "\n".join(lines)
