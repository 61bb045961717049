"""
Necklaces and recurrent cycles
==============================

Every orbit of the game on partitions of n is named by a binary necklace.
"""
from __future__ import annotations

from bulgarian_solitaire import (
    necklace_for_partition,
    necklace_params_for_n,
    parse_necklace,
    power,
    primitive_necklaces,
    recurrent_cycle,
)

# n = 8 sits between the triangular numbers 6 and 10: necklaces of length 4
# with two black beads, one per orbit.
m, r = necklace_params_for_n(8)
print(f"n = 8 -> necklaces of length {m} with {r} black beads")

# Necklaces are stored in their smallest rotation and printed in their largest.
N = parse_necklace("WBBW")
print("WBBW is stored as", N.word, "and labeled", N.label)

# The recurrent cycle is the set of states the forward game returns to.
for lab in recurrent_cycle(power(parse_necklace("BW"), 2)).roots:
    print("  recurrent labeling", lab)

# A recurrent partition names its necklace directly; transient ones give None.
print("(4,2,2) is recurrent for", necklace_for_partition((4, 2, 2)).label)
print("(5,2,1) is transient:", necklace_for_partition((5, 2, 1)) is None)

# Primitive necklaces of length 4.
print("primitive length 4:", [P.label for P in primitive_necklaces(4)])
