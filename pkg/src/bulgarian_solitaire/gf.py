"""Integer polynomials, rational generating functions and exact rational fitting.

:class:`IntPolynomial` is an immutable coefficient tuple (index = degree).
:class:`RationalGF` is a normalized quotient of two of them with a nonzero
constant term in the denominator, so it always has a power series expansion.

The limiting level generating function of a necklace is recovered in
:func:`limit_gf` by counting forest levels exactly and fitting a rational
function to the resulting series with :func:`rational_fit`.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Sequence

from .errors import NoFit
from .linalg import solve_exact
from .necklaces import Necklace, parse_necklace

__all__ = [
    "IntPolynomial",
    "RationalGF",
    "poly_add",
    "poly_sub",
    "poly_mul",
    "parse_poly",
    "series_expand",
    "rational_fit",
    "fit_bounds",
    "default_depth",
    "limit_gf",
    "gf_equal",
    "closed_form_catalog",
    "catalog_lookup",
    "corrected_form",
]


def _strip(coeffs: Iterable) -> tuple:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class IntPolynomial:
    coefficients: tuple[int, ...] = ()

    def __post_init__(self):
        coeffs = []
        for c in self.coefficients:
            if isinstance(c, Fraction):
                if c.denominator != 1:
                    raise ValueError(f"non-integer coefficient {c}")
                c = c.numerator
            coeffs.append(int(c))
        object.__setattr__(self, "coefficients", _strip(coeffs))

    @classmethod
    def x(cls) -> "IntPolynomial":
        return cls((0, 1))

    @property
    def degree(self) -> int:
        """Degree; the zero polynomial has degree -1."""
        return len(self.coefficients) - 1

    def __getitem__(self, k: int) -> int:
        return self.coefficients[k] if 0 <= k < len(self.coefficients) else 0

    def __len__(self) -> int:
        return len(self.coefficients)

    def __iter__(self):
        return iter(self.coefficients)

    def __bool__(self) -> bool:
        return bool(self.coefficients)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def __add__(self, other):
        return poly_add(self, _as_poly(other))

    __radd__ = __add__

    def __sub__(self, other):
        return poly_sub(self, _as_poly(other))

    def __rsub__(self, other):
        return poly_sub(_as_poly(other), self)

    def __neg__(self):
        return IntPolynomial(tuple(-c for c in self.coefficients))

    def __mul__(self, other):
        return poly_mul(self, _as_poly(other))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = IntPolynomial((1,))
        for _ in range(k):
            out = out * self
        return out

    def to_json(self) -> list[int]:
        return list(self.coefficients)

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coefficients[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if k == 0:
                body = str(a)
            else:
                mono = "x" if k == 1 else f"x^{k}"
                body = mono if a == 1 else f"{a}{mono}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def _as_poly(p) -> IntPolynomial:
    if isinstance(p, IntPolynomial):
        return p
    if isinstance(p, int):
        return IntPolynomial((p,))
    return IntPolynomial(tuple(p))


def poly_add(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    n = max(len(a), len(b))
    return IntPolynomial(tuple(a[k] + b[k] for k in range(n)))


def poly_sub(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    n = max(len(a), len(b))
    return IntPolynomial(tuple(a[k] - b[k] for k in range(n)))


def poly_mul(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    if not a or not b:
        return IntPolynomial(())
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a.coefficients):
        if x:
            for j, y in enumerate(b.coefficients):
                out[i + j] += x * y
    return IntPolynomial(tuple(out))


_TERM_RE = re.compile(r"([+-]?)\s*(\d*)\s*(x(?:\^(\d+))?)?")


def parse_poly(text: str) -> IntPolynomial:
    """Parse a sum of integer monomials such as ``"3x^3 - 4x^2 - x + 2"``."""
    s = text.replace(" ", "").replace("*", "")
    if not s:
        raise ValueError("empty polynomial")
    coeffs: dict[int, int] = {}
    pos = 0
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial {text!r} at {s[pos:]!r}")
        sign, num, var, exp = m.groups()
        if not num and not var:
            raise ValueError(f"cannot parse polynomial {text!r}")
        c = int(num) if num else 1
        if sign == "-":
            c = -c
        k = 0 if not var else (int(exp) if exp else 1)
        coeffs[k] = coeffs.get(k, 0) + c
        pos = m.end()
    deg = max(coeffs)
    return IntPolynomial(tuple(coeffs.get(k, 0) for k in range(deg + 1)))


# -- polynomial arithmetic over Q, used for normalization ----------------------

def _qdivmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        f = a[-1] / lead
        q[shift] = f
        for i, c in enumerate(b):
            a[i + shift] -= f * c
        a = list(_strip(a))
    return q, a


def _qgcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a, b = list(_strip(a)), list(_strip(b))
    while b:
        _, r = _qdivmod(a, b)
        a, b = b, r
    return a


def _normalize(num: Sequence, den: Sequence) -> tuple[tuple[int, ...], tuple[int, ...]]:
    n = [Fraction(c) for c in _strip(num)]
    d = [Fraction(c) for c in _strip(den)]
    if not d:
        raise ZeroDivisionError("zero denominator")
    if not n:
        return (), (1,)
    g = _qgcd(n, d)
    if len(g) > 1:
        n, rem = _qdivmod(n, g)
        assert not rem
        d, rem = _qdivmod(d, g)
        assert not rem
    scale = lcm(*(c.denominator for c in n + d))
    ni = [int(c * scale) for c in n]
    di = [int(c * scale) for c in d]
    content = reduce(gcd, (abs(c) for c in ni + di if c))
    ni = [c // content for c in ni]
    di = [c // content for c in di]
    if di[0] < 0:
        ni = [-c for c in ni]
        di = [-c for c in di]
    return _strip(ni), _strip(di)


@dataclass(frozen=True)
class RationalGF:
    """``num / den`` reduced to lowest terms, integer content 1, ``den(0) > 0``."""

    num: IntPolynomial
    den: IntPolynomial

    def __post_init__(self):
        num = _as_poly(self.num)
        den = _as_poly(self.den)
        if den[0] == 0:
            raise ValueError("denominator must have a nonzero constant term")
        n, d = _normalize(num.coefficients, den.coefficients)
        object.__setattr__(self, "num", IntPolynomial(n))
        object.__setattr__(self, "den", IntPolynomial(d))

    def series(self, D: int) -> list:
        return series_expand(self, D)

    def to_dict(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json(), "text": str(self)}

    def __str__(self) -> str:
        return f"({self.num}) / ({self.den})"


def series_expand(r: RationalGF, D: int) -> list:
    """First ``D+1`` power series coefficients of ``r`` by exact long division."""
    den, num = r.den, r.num
    if den[0] == 0:
        raise ValueError("denominator vanishes at 0")
    d0 = den[0]
    out: list = []
    for k in range(D + 1):
        acc = Fraction(num[k])
        for i in range(1, min(k, den.degree) + 1):
            acc -= den[i] * out[k - i]
        out.append(acc / d0)
    return [int(c) if c.denominator == 1 else c for c in out]


def gf_equal(a: RationalGF, b: RationalGF) -> bool:
    """Equality of rational functions by cross multiplication."""
    return poly_mul(a.num, b.den) == poly_mul(b.num, a.den)


def rational_fit(series: Sequence, max_num_deg: int, max_den_deg: int) -> RationalGF:
    """Smallest rational function reproducing every coefficient of ``series``.

    Denominator degree is minimized first, then numerator degree.  Raises
    :class:`NoFit` if nothing within the bounds matches all coefficients.
    """
    s = [Fraction(c) for c in series]
    L = len(s)
    if L < max_num_deg + max_den_deg + 2:
        raise ValueError(
            f"need at least {max_num_deg + max_den_deg + 2} coefficients, got {L}"
        )

    def at(k):
        return s[k] if k >= 0 else Fraction(0)

    for q in range(max_den_deg + 1):
        for pn in range(max_num_deg + 1):
            rows = range(pn + 1, L)
            if q:
                A = [[at(c - i) for i in range(1, q + 1)] for c in rows]
                sol = solve_exact(A, [-at(c) for c in rows])
                if sol is None:
                    continue
            else:
                if any(at(c) for c in rows):
                    continue
                sol = []
            den = [Fraction(1)] + sol
            num = [sum(den[i] * at(k - i) for i in range(q + 1)) for k in range(pn + 1)]
            return RationalGF(*map(IntPolynomial, _normalize(num, den)))
    raise NoFit(
        f"no rational function with deg num <= {max_num_deg}, deg den <= {max_den_deg} "
        f"matches {L} coefficients",
        depth=L - 1,
    )


def fit_bounds(P: Necklace) -> tuple[int, int]:
    """Numerator and denominator degree bounds for the limit of ``P``."""
    if P.word == (0,):
        return 3, 2
    if P.word == (0, 1):
        return 3, 3
    return 2 * P.p, P.p


def default_depth(P: Necklace) -> int:
    """Truncation depth leaving at least ``max(|P|+1, 6)`` guard coefficients."""
    a, b = fit_bounds(P)
    return a + b + max(P.p + 1, 6)


def limit_gf(P: Necklace, D: int | None = None, max_nodes: int = 50_000_000) -> RationalGF:
    """Limiting level generating function of the orbits of ``P^k`` as ``k`` grows."""
    from .forest import pruned_series  # forest imports gf for its series helpers

    if D is None:
        D = default_depth(P)
    h = pruned_series(P, D, max_nodes=max_nodes)
    a, b = fit_bounds(P)
    try:
        r = rational_fit(h, a, b)
    except (NoFit, ValueError) as exc:
        raise NoFit(f"{P}: {exc}; try a larger depth than {D}", depth=D) from exc
    if series_expand(r, D) != list(h):
        raise NoFit(f"{P}: fit does not reproduce the series to depth {D}", depth=D)
    return r


# -- closed forms ---------------------------------------------------------------

def _form(factors: Sequence[str], den: str) -> RationalGF:
    num = reduce(poly_mul, (parse_poly(f) for f in factors), IntPolynomial((1,)))
    return RationalGF(num, parse_poly(den))


# Closed forms as printed: necklace -> (numerator factors, denominator).
_PRINTED = [
    ("W", ("1 - x", "1 - x"), "1 - 3x + x^2"),
    ("BW", ("x - 1", "x - 1", "3x + 2"), "x^3 - 3x^2 - x + 1"),
    ("BWW", ("1 - x", "x^3 - 3x^2 - 4x - 3"), "2x^3 + x^2 - 1"),
    ("BBW", ("1 - x", "x^3 - 3x^2 - 4x - 3"), "2x^3 + x^2 - 1"),
    ("BWWW", ("1 - x", "x^5 + 8x^4 - 3x^3 - 8x^2 - 6x - 4"), "6x^4 + 4x^3 + x^2 - 1"),
    ("BBBW", ("1 - x", "2x^5 + 8x^4 - 5x^3 - 10x^2 - 7x - 4"), "6x^4 + 4x^3 + x^2 - 1"),
    ("BBWW", ("1 - x", "x^3 + x^2 + x + 1"), "3x^4 + 2x^3 + x^2 - 1"),
    ("BWWWW", ("1 - x", "2x^6 + 16x^5 - 12x^4 - 23x^3 - 16x^2 - 8x - 5"), "12x^5 + 8x^4 + 2x^3 - 1"),
]

# The printed BBWW numerator expands to -1 at x = 0, which cannot count the
# four recurrent states.  This is the function the forest count produces.
_CORRECTED = {
    "BBWW": (("1 - x", "x^5 + 4x^4 - 3x^3 - 6x^2 - 6x - 4"), "3x^4 + 2x^3 + x^2 - 1"),
}


def closed_form_catalog() -> list[tuple[Necklace, RationalGF]]:
    """The published closed forms, normalized, in publication order."""
    return [(parse_necklace(name), _form(f, d)) for name, f, d in _PRINTED]


def catalog_lookup(P: Necklace) -> RationalGF | None:
    for N, r in closed_form_catalog():
        if N == P:
            return r
    return None


def corrected_form(P: Necklace) -> RationalGF | None:
    """Replacement for a printed form that fails the forest count, if any."""
    entry = _CORRECTED.get(P.label)
    return None if entry is None else _form(*entry)
