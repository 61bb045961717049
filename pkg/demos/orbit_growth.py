"""
Growth of orbit sizes
=====================

Orbit sizes of P^k grow geometrically in k; for BW they follow Chebyshev
values.
"""
from __future__ import annotations

from bulgarian_solitaire import chebyshev_T_at_2, conjecture_ratios, orbit_size_sequence, parse_necklace

print("(BW)^k sizes:", orbit_size_sequence(parse_necklace("BW"), 6))
print("T_k(2):      ", [chebyshev_T_at_2(k) for k in range(1, 7)])
print("(BWW)^k sizes:", orbit_size_sequence(parse_necklace("BWW"), 5))
print("(BBW)^k sizes:", orbit_size_sequence(parse_necklace("BBW"), 5))

# Ratios of consecutive sizes for longer necklaces, next to the color-swapped
# necklace.  These are reported, not asserted.
for w in ("BWWW", "BBWW", "BWBWW"):
    rep = conjecture_ratios(parse_necklace(w), 3)
    print(w, [str(x) for x in rep.ratios], "swap", rep.partner.label, [str(x) for x in rep.partner_ratios])
