"""Exact solution of small rational linear systems by fraction-free elimination."""
from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence

__all__ = ["solve_exact", "integer_rows"]


def integer_rows(A: Sequence[Sequence], b: Sequence) -> list[list[int]]:
    """Augmented matrix ``[A | b]`` with every row scaled to integer entries."""
    rows = []
    for row, rhs in zip(A, b):
        vals = [Fraction(v) for v in row] + [Fraction(rhs)]
        scale = lcm(*(v.denominator for v in vals)) if vals else 1
        rows.append([int(v * scale) for v in vals])
    return rows


def solve_exact(A: Sequence[Sequence], b: Sequence) -> list[Fraction] | None:
    """One solution of ``A x = b`` or None when the system is inconsistent.

    ``A`` may be rectangular.  Elimination is Bareiss' fraction-free scheme,
    so every intermediate entry stays an integer (a minor of the input).
    Free variables are set to zero.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    if len(b) != m:
        raise ValueError("A and b have different row counts")
    M = integer_rows(A, b)
    prev = 1
    r = 0
    pivots: list[int] = []
    for col in range(n):
        piv = next((i for i in range(r, m) if M[i][col] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        pr = M[r]
        pc = pr[col]
        for i in range(r + 1, m):
            row = M[i]
            f = row[col]
            for j in range(col + 1, n + 1):
                q, rem = divmod(pc * row[j] - f * pr[j], prev)
                assert rem == 0, "Bareiss division must be exact"
                row[j] = q
            row[col] = 0
        prev = pc
        pivots.append(col)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if M[i][n] != 0:
            return None
    x = [Fraction(0)] * n
    for i in range(r - 1, -1, -1):
        col = pivots[i]
        acc = Fraction(M[i][n])
        for j in range(col + 1, n):
            if M[i][j]:
                acc -= M[i][j] * x[j]
        x[col] = acc / M[i][col]
    return x
