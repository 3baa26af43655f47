"""Truncated series arithmetic and the valuation homomorphisms."""

import random
from fractions import Fraction

import pytest

from finetrop.fields import QQ, QQi, gauss
from finetrop.hyperfields import hom_check
from finetrop.series import (
    PrecisionError,
    SeriesDomain,
    fmt_series,
    hom_fval,
    hom_phval,
    hom_sval,
    hom_val,
    s_const,
    series,
    series_add,
    series_div,
    series_inv,
    series_mul,
    series_truncate,
    sign_sum_condition_witness,
)


def test_series_basics():
    a = series(QQ, [(0, Fraction(1)), (1, Fraction(2))], prec=5)
    b = series(QQ, [(Fraction(1, 2), Fraction(3))], prec=4)
    s = series_add(a, b)
    assert s.prec == 4
    assert dict(s.terms)[Fraction(1, 2)] == 3
    p = series_mul(a, b)
    assert dict(p.terms)[Fraction(1, 2)] == 3
    assert dict(p.terms)[Fraction(3, 2)] == 6


def test_inversion_geometric():
    # 1/(1 - t) = 1 + t + t^2 + ... up to the requested precision.
    a = series(QQ, [(0, Fraction(1)), (1, Fraction(-1))])
    inv = series_inv(a, prec=5)
    got = dict(inv.terms)
    assert all(got[Fraction(k)] == 1 for k in range(5))
    assert series_mul(a, inv).terms[0] == (Fraction(0), Fraction(1))


def test_inversion_shifts_precision():
    # Leading exponent g and data to O(t^p) can only be inverted to O(t^(p-2g)).
    a = series(QQ, [(1, Fraction(2)), (2, Fraction(1))], prec=4)
    inv = series_inv(a)
    assert inv.prec == 2
    assert inv.leading() == (Fraction(1, 2), Fraction(-1))


def test_division():
    num = series(QQ, [(0, Fraction(1))])
    den = series(QQ, [(0, Fraction(1)), (1, Fraction(1))])
    q = series_div(num, den, prec=3)
    assert dict(q.terms) == {
        Fraction(0): Fraction(1),
        Fraction(1): Fraction(-1),
        Fraction(2): Fraction(1),
    }


def test_indeterminate_leading_raises():
    a = series(QQ, [(3, Fraction(1))], prec=2)
    assert a.is_indeterminate()
    with pytest.raises(PrecisionError):
        a.leading()


def test_truncate_and_fmt():
    a = series(QQ, [(0, Fraction(2)), (1, Fraction(2)), (2, Fraction(1))])
    assert fmt_series(series_truncate(a, 3)) == "2 + 2*t + t^2 + O(t^3)"
    assert fmt_series(s_const(QQ, Fraction(0))) == "0"


def test_valuation_homs():
    rng = random.Random(7)
    for hom in (hom_val(), hom_sval(), hom_fval(), hom_phval(),
                hom_val(QQi), hom_fval(QQi)):
        assert hom_check(hom, rng, samples=300) == []


def test_fval_records_leading_data():
    f = hom_fval()
    a = series(QQ, [(Fraction(1, 2), Fraction(-3)), (1, Fraction(5))])
    img = f(a)
    assert img.coef == Fraction(-3)
    assert img.level.coords == (Fraction(1, 2),)
    assert f(s_const(QQ, Fraction(0))) is None


def test_phval_uses_gauss_direction():
    from finetrop.hyperfields import make_dir

    f = hom_phval()
    a = series(QQi, [(0, gauss(3, 4))])
    assert f(a).coef == make_dir(3, 4)


def test_sign_sum_condition():
    from finetrop.hyperfields import S, W

    assert sign_sum_condition_witness(S) is None
    w = sign_sum_condition_witness(W)
    assert w is not None and len(w) == 3


def test_domain_random_unit_is_invertible():
    dom = SeriesDomain(QQ)
    rng = random.Random(0)
    for _ in range(20):
        u = dom.random_unit(rng)
        assert not u.is_zero()
        assert not QQ.is_zero(u.leading()[0])
