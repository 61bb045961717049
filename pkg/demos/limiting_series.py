"""
Limiting generating functions
=============================

The level counts of the forest become a rational function, recovered by an
exact fit and compared with published closed forms.
"""
from __future__ import annotations

from bulgarian_solitaire import (
    build_orbit,
    catalog_lookup,
    corrected_form,
    gf_equal,
    limit_gf,
    parse_necklace,
    power,
    series_expand,
)

# The fitted function for BW and its first coefficients.
P = parse_necklace("BW")
H = limit_gf(P)
print(f"H_BW = ({H.num}) / ({H.den})")
print("series:", series_expand(H, 10))

# Finite orbits of (BW)^(k+1) agree with it on the lowest levels.
for k in range(2, 6):
    print(f"(BW)^{k + 1} levels:", build_orbit(power(P, k + 1)).histogram[: k + 3])

# Comparison with the closed forms in the catalog.
for w in ("BWW", "BBW", "BWWW", "BBWW"):
    Q = parse_necklace(w)
    fit = limit_gf(Q)
    print(f"{w}: matches printed form {gf_equal(fit, catalog_lookup(Q))}", end="")
    fix = corrected_form(Q)
    print("" if fix is None else f", matches corrected form {gf_equal(fit, fix)}")
