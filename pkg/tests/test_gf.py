from __future__ import annotations

from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from bulgarian_solitaire.errors import NoFit
from bulgarian_solitaire.gf import (
    IntPolynomial,
    RationalGF,
    catalog_lookup,
    closed_form_catalog,
    corrected_form,
    default_depth,
    fit_bounds,
    gf_equal,
    limit_gf,
    parse_poly,
    poly_add,
    poly_mul,
    poly_sub,
    rational_fit,
    series_expand,
)
from bulgarian_solitaire.necklaces import parse_necklace, primitive_necklaces

X = IntPolynomial.x()
ONE = IntPolynomial((1,))
H_BW = RationalGF((X - 1) ** 2 * (3 * X + 2), X**3 - 3 * X**2 - X + 1)
H_W = RationalGF((1 - X) ** 2, 1 - 3 * X + X**2)

polys = st.lists(st.integers(-6, 6), max_size=6).map(IntPolynomial)


def sympy_series(r: RationalGF, D: int) -> list:
    # independent expansion through a computer algebra system
    x = sympy.Symbol("x")
    num = sum(c * x**i for i, c in enumerate(r.num))
    den = sum(c * x**i for i, c in enumerate(r.den))
    s = sympy.series(num / den, x, 0, D + 1).removeO()
    return [Fraction(str(s.coeff(x, k))) for k in range(D + 1)]


class TestPolynomial:
    def test_products(self):
        assert poly_mul(1 - X, 1 - X) == IntPolynomial((1, -2, 1))
        assert poly_mul(poly_mul(X - 1, X - 1), 3 * X + 2).coefficients == (2, -1, -4, 3)
        a = IntPolynomial((1, 2))
        assert poly_add(a, IntPolynomial(())) == a
        assert poly_sub(a, a) == IntPolynomial(()) and IntPolynomial(()).degree == -1

    def test_text_forms(self):
        p = IntPolynomial((2, -1, -4, 3))
        assert str(p) == "3x^3 - 4x^2 - x + 2"
        assert p.to_json() == [2, -1, -4, 3]
        assert parse_poly("3x^3 - 4x^2 - x + 2") == p
        assert parse_poly("1 - 3x + x^2") == IntPolynomial((1, -3, 1))
        assert str(IntPolynomial(())) == "0"

    def test_trailing_zeros(self):
        assert IntPolynomial((1, 0, 0)).coefficients == (1,)

    @given(polys, polys, polys)
    def test_ring_laws(self, a, b, c):
        assert poly_mul(a, poly_add(b, c)) == poly_add(poly_mul(a, b), poly_mul(a, c))
        assert poly_mul(a, b) == poly_mul(b, a)
        assert poly_sub(poly_add(a, b), b) == a
        for x in (-2, 0, 3):
            assert poly_mul(a, b)(x) == a(x) * b(x)

    @given(polys)
    def test_parse_round_trip(self, a):
        assert parse_poly(str(a)) == a


class TestSeries:
    def test_examples(self):
        assert series_expand(H_BW, 8) == [2, 1, 3, 7, 15, 33, 71, 155, 335]
        assert series_expand(H_W, 4) == [1, 1, 3, 8, 21]
        assert series_expand(RationalGF(ONE, 1 - X), 3) == [1, 1, 1, 1]

    def test_rejects_pole_at_zero(self):
        with pytest.raises(ValueError):
            RationalGF(ONE, X)

    def test_non_integral(self):
        assert series_expand(RationalGF(ONE, 2 - X), 2) == [Fraction(1, 2), Fraction(1, 4), Fraction(1, 8)]

    @pytest.mark.parametrize("idx", range(8))
    def test_against_computer_algebra(self, idx):
        _, r = closed_form_catalog()[idx]
        assert series_expand(r, 14) == sympy_series(r, 14)


class TestNormalization:
    def test_sign_and_scale(self):
        flipped = RationalGF(-((X - 1) ** 2) * (3 * X + 2), -(X**3 - 3 * X**2 - X + 1))
        assert flipped == H_BW
        scaled = RationalGF(6 * (1 - X) ** 2, 6 * (1 - 3 * X + X**2))
        assert scaled == H_W and H_W.den[0] > 0

    def test_common_factor_removed(self):
        r = RationalGF((1 - X) * (1 + X), (1 - X) * (1 - 2 * X))
        assert r.num == 1 + X and r.den == 1 - 2 * X

    @settings(max_examples=50)
    @given(st.integers(0, 7), polys.filter(lambda p: p.degree >= 0 and p[0] != 0))
    def test_idempotent_and_equivalence(self, idx, f):
        _, r = closed_form_catalog()[idx]
        multiple = RationalGF(r.num * f, r.den * f)
        assert multiple == r
        again = RationalGF(multiple.num, multiple.den)
        assert again == multiple
        assert gf_equal(multiple, r) and gf_equal(r, multiple) and gf_equal(r, r)


class TestEquality:
    def test_examples(self):
        neg = RationalGF.__new__(RationalGF)
        object.__setattr__(neg, "num", -H_BW.num)
        object.__setattr__(neg, "den", -H_BW.den)
        assert gf_equal(H_BW, neg)
        bww = catalog_lookup(parse_necklace("BWW"))
        bbw = catalog_lookup(parse_necklace("BBW"))
        assert gf_equal(bww, bbw)
        assert not gf_equal(catalog_lookup(parse_necklace("BWWW")), catalog_lookup(parse_necklace("BBBW")))


class TestFit:
    def test_bw_round_trip(self):
        assert rational_fit(series_expand(H_BW, 12), 4, 3) == H_BW

    def test_geometric(self):
        assert rational_fit([1] * 6, 0, 1) == RationalGF(ONE, 1 - X)

    def test_bww(self):
        target = RationalGF((1 - X) * parse_poly("x^3 - 3x^2 - 4x - 3"), parse_poly("2x^3 + x^2 - 1"))
        assert rational_fit(series_expand(target, 12), 4, 3) == target

    def test_prefers_small_degrees(self):
        # 1/(1-x) also has the wasteful representation (1+x)/(1-x^2)
        assert rational_fit([1] * 10, 3, 3).den.degree == 1

    def test_too_short(self):
        with pytest.raises(ValueError):
            rational_fit([1, 2, 3], 2, 2)

    def test_no_fit(self):
        # Catalan numbers are algebraic, not rational
        cat = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786]
        with pytest.raises(NoFit):
            rational_fit(cat, 3, 3)

    @pytest.mark.parametrize("idx", range(8))
    def test_catalog_soundness(self, idx):
        _, r = closed_form_catalog()[idx]
        a, b = max(r.num.degree, 0), r.den.degree
        assert gf_equal(rational_fit(series_expand(r, a + b + 6), a, b), r)

    @settings(max_examples=40, deadline=None)
    @given(
        st.lists(st.integers(-5, 5), min_size=1, max_size=4),
        st.lists(st.integers(-3, 3), min_size=0, max_size=3),
    )
    def test_random_round_trip(self, num, den_tail):
        r = RationalGF(IntPolynomial(tuple(num)), IntPolynomial((1,) + tuple(den_tail)))
        a, b = 3, 3
        fitted = rational_fit(series_expand(r, a + b + 6), a, b)
        assert gf_equal(fitted, r)


class TestCatalog:
    def test_lookups(self):
        bwww = catalog_lookup(parse_necklace("BWWW"))
        assert gf_equal(bwww, RationalGF((1 - X) * parse_poly("x^5 + 8x^4 - 3x^3 - 8x^2 - 6x - 4"),
                                         parse_poly("6x^4 + 4x^3 + x^2 - 1")))
        assert gf_equal(catalog_lookup(parse_necklace("W")), H_W)
        assert catalog_lookup(parse_necklace("BWBWW")) is None
        assert len(closed_form_catalog()) == 8

    def test_printed_bbww_is_not_a_level_series(self):
        # its constant term is -1, but an orbit of BBWW^k has four recurrent states
        printed = catalog_lookup(parse_necklace("BBWW"))
        assert series_expand(printed, 0) == [-1]
        assert series_expand(corrected_form(parse_necklace("BBWW")), 0) == [4]
        assert corrected_form(parse_necklace("BWW")) is None


class TestLimit:
    def test_w_and_bw(self):
        assert gf_equal(limit_gf(parse_necklace("W")), H_W)
        assert gf_equal(limit_gf(parse_necklace("BW")), H_BW)

    def test_bounds(self):
        assert fit_bounds(parse_necklace("W")) == (3, 2)
        assert fit_bounds(parse_necklace("BW")) == (3, 3)
        assert fit_bounds(parse_necklace("BWWW")) == (8, 4)
        for P in primitive_necklaces(4):
            a, b = fit_bounds(P)
            assert default_depth(P) + 1 >= a + b + 2 + P.p

    def test_no_fit_reports_depth(self):
        with pytest.raises(NoFit) as info:
            limit_gf(parse_necklace("BWW"), D=8)
        assert info.value.depth == 8

    def test_bbww_matches_corrected_form(self):
        P = parse_necklace("BBWW")
        assert gf_equal(limit_gf(P), corrected_form(P))

    def test_rejects_non_forest_necklaces(self):
        with pytest.raises(ValueError):
            limit_gf(parse_necklace("BWBW"))
