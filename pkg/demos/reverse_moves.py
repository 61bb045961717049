"""
Forward and reverse moves
=========================

A single step of Bulgarian Solitaire and the moves that undo it.
"""
from __future__ import annotations

from bulgarian_solitaire import (
    apply_sequence,
    bs_forward,
    diff_inverse,
    diff_labeling,
    legal_moves,
    parse_partition,
    reverse_move,
)

# One forward step: take a card from every pile and form a new pile from them.
lam = parse_partition("3,2,1")
print("forward step of", lam, "->", bs_forward(lam))

# A reverse move picks a part to undo.  Only parts at least l - 1 are legal,
# where l is the number of parts.
print("legal reverse moves of", lam, ":", sorted(legal_moves(lam)))
for j in sorted(legal_moves(lam)):
    back = reverse_move(lam, j)
    print(f"  R_{j}{lam} = {back}, and forward again gives {bs_forward(back)}")

# An illegal move returns a falsy sentinel instead of raising.
print("R_3 of (3,2,1):", reverse_move(lam, 3), bool(reverse_move(lam, 3)))

# Moves compose left to right.
print("R_[2,2,1] of (3,2,1):", apply_sequence(lam, [2, 2, 1]))

# The difference labeling subtracts a staircase; the brackets mark legal moves.
d = diff_labeling(parse_partition("4,2,2"), 4)
print("difference labeling of (4,2,2) against staircase 3:", d)
print("and back:", diff_inverse(d))
