"""
Orbits and their levels
=======================

Orbits are built by searching backwards from the recurrent cycle.  The level of
a state is its distance to that cycle.
"""
from __future__ import annotations

from bulgarian_solitaire import build_orbit, decompose, forward_oracle, level_gf, parse_necklace

# All orbits for n = 8, each with its size and level histogram.
for o in decompose(8):
    print(f"{o.necklace.label}: size {o.size}, cycle {o.cycle_length}, levels {o.histogram}")

# The same decomposition by brute-force forward iteration.
same = {o.necklace: o.histogram for o in decompose(12)} == {
    o.necklace: o.histogram for o in forward_oracle(12)
}
print("reverse search agrees with forward iteration at n = 12:", same)

# The level polynomial counts states by level.
o = build_orbit(parse_necklace("WWWW"))
print("D(x) for the orbit of n = 6:", level_gf(o))

# Orbits can be exported for further processing.
print(build_orbit(parse_necklace("BWBW")).to_csv())
