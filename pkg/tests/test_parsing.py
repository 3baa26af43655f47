"""Parsing and printing round trips for elements, series, and polynomials."""

import random
from fractions import Fraction

import pytest

from finetrop.fields import QQ, QQi, gauss
from finetrop.hyperfields import make_dir
from finetrop.parsing import (
    ParseError,
    hyperfield_by_name,
    parse_elem,
    parse_fpoly,
    parse_gauss,
    parse_poly,
    parse_rational,
    parse_series,
)
from finetrop.series import SeriesDomain, fmt_series

KEYS = ["K", "S", "W", "P", "Phi", "Q", "Qi", "GF5", "GF5/{1,4}",
        "GF7/{1,2,4}", "T", "TR", "TC", "T^2", "Qx|Q", "Qix|Q"]


def test_scalar_literals():
    assert parse_rational("-7/3") == Fraction(-7, 3)
    assert parse_gauss("2-3/4i") == gauss(2, Fraction(-3, 4))
    assert parse_gauss("i") == gauss(0, 1)
    assert parse_gauss("-i") == gauss(0, -1)
    with pytest.raises(ParseError):
        parse_rational("1/")


def test_elem_round_trips_sampled():
    rng = random.Random(0)
    for key in KEYS:
        H = hyperfield_by_name(key)
        for _ in range(200):
            a = H.random_element(rng)
            text = H.fmt(a)
            back = parse_elem(key, text)
            assert H.equal(back, a), (key, text)


def test_unicode_aliases():
    assert parse_poly("T", "X \u229e (1, 2)").coeffs == \
        parse_poly("T", "X + (1, 2)").coeffs
    assert parse_rational("\u22123/2") == Fraction(-3, 2)


def test_dir_literals():
    assert parse_elem("P", "dir(3, -4)") == make_dir(3, -4)
    assert parse_elem("P", "-1") == make_dir(-1, 0)
    with pytest.raises(ParseError):
        parse_elem("P", "dir(0, 0)")


def test_extension_zero():
    assert parse_elem("T", "inf") is None
    assert parse_elem("T", "0") is None


def test_series_round_trip():
    a = parse_series("-9/4 + (-6/7+1/6i)*t + O(t^2)", field=QQi)
    assert fmt_series(a) == "-9/4 + (-6/7+1/6i)*t + O(t^2)"
    b = parse_series("t^(1/2) + 2*t^3", field=QQ)
    assert b.prec is None
    assert dict(b.terms) == {Fraction(1, 2): Fraction(1),
                             Fraction(3): Fraction(2)}


def test_poly_round_trips():
    rng = random.Random(1)
    from finetrop.solve import random_hpoly

    for key in ("S", "Qi", "T", "TR", "Qx|Q", "P"):
        H = hyperfield_by_name(key)
        for _ in range(60):
            p = random_hpoly(H, rng, deg=rng.randint(1, 5))
            back = parse_poly(key, repr(p))
            assert back.coeffs.keys() == p.coeffs.keys()
            for d in p.coeffs:
                assert H.equal(back.coeffs[d], p.coeffs[d]), (key, repr(p))


def test_fpoly_parse():
    dom = SeriesDomain(QQ)
    q = parse_fpoly(dom, "t*X + (1 + t^2)*Y + 1")
    assert fmt_series(q.coeffs[(1, 0)]) == "t"
    assert fmt_series(q.coeffs[(0, 1)]) == "1 + t^2"
    assert fmt_series(q.coeffs[(0, 0)]) == "1"


def test_hyperfield_by_name_errors():
    with pytest.raises(ValueError):
        hyperfield_by_name("GF6")
    with pytest.raises(ValueError):
        hyperfield_by_name("Zorp")


def test_repeated_monomial_rejected():
    with pytest.raises(ParseError):
        parse_poly("S", "X + X")


def test_multivariate_guess():
    p = parse_poly("S", "X1 + X2 + X3")
    assert p.nvars == 3
    q = parse_poly("S", "Z^2 + 1")
    assert q.nvars == 3
