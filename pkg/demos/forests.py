"""
Forests of reverse moves
========================

As k grows, the top of the orbit of P^k settles into a forest whose node
labels only need a short prefix.
"""
from __future__ import annotations

from bulgarian_solitaire import expand_node, forest_play, forest_roots, parse_necklace, to_dot, truncated_levels

P = parse_necklace("BWWW")

# One root per state of the recurrent cycle; angle brackets mark legal moves.
roots = forest_roots(P)
print("roots:", [str(r) for r in roots])

# Children of the second root.  Labels like "3/4" mean two equal parts were
# merged into a single move.
for c in expand_node(roots[1], P):
    print(f"  play {c.edge_label}: {c}")

# Following a playing sequence; None means the sequence is illegal.
print("root 2 after [1, 1]:", forest_play(roots[1], P, [1, 1]))

# Exact node counts per level, per tree and in total.
lv = truncated_levels(P, 8)
print("level counts:", lv.total)

# A Graphviz rendering of the first two levels.
print(to_dot(P, 2)[:300], "...")
