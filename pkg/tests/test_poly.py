"""Set-valued polynomial evaluation, push-forwards, and projective roots."""

from fractions import Fraction

import pytest

from finetrop.hyperfields import P, S, hom_sign, make_dir
from finetrop.poly import (
    affinize,
    eval_poly,
    fpoly_eval,
    homogenize,
    hpoly,
    hpoly1,
    is_root,
    prevariety_member,
    product_of_linear_factors,
    proj_is_root,
    proj_point,
    pushforward,
)
from finetrop.series import SeriesDomain, fmt_series, s_const, series
from finetrop.fields import QQ
from finetrop.hyperfields import field_hyperfield


def test_eval_over_sign():
    p = hpoly1(S, {2: 1, 1: -1, 0: 1})
    sv = eval_poly(p, (1,))
    # 1 - 1 + 1 over S: the cancelling pair spreads to everything.
    assert set(S.set_elements(sv)) == {-1, 0, 1}
    assert is_root(p, (1,))
    assert not is_root(p, (-1,))


def test_root_over_phase():
    p = hpoly1(P, {2: P.one(), 1: P.one(), 0: P.one()})
    assert is_root(p, (make_dir(-1, 1),))
    assert not is_root(p, (make_dir(1, 1),))


def test_pushforward_sign():
    F = field_hyperfield(QQ)
    p = hpoly1(F, {2: Fraction(3), 1: Fraction(-1, 2), 0: Fraction(0)})
    sp = pushforward(hom_sign(), p)
    assert sp.coeffs == {(2,): 1, (1,): -1}


def test_prevariety_member():
    p = hpoly1(S, {1: 1, 0: -1})
    q = hpoly1(S, {1: 1, 0: 1})
    assert prevariety_member([p], (1,))
    assert not prevariety_member([p, q], (1,))


def test_homogenize_affinize():
    p = hpoly(S, 2, {(2, 0): 1, (0, 1): -1, (0, 0): 1})
    h = homogenize(p)
    assert h.nvars == 3
    assert h.coeffs == {(0, 2, 0): 1, (1, 0, 1): -1, (2, 0, 0): 1}
    lau = hpoly(S, 1, {(-1,): 1, (1,): 1})
    assert affinize(lau).coeffs == {(0,): 1, (2,): 1}
    with pytest.raises(ValueError):
        homogenize(lau)


def test_projective_roots():
    # x^2 - yz over S vanishes at [1 : 1 : 1] scaled arbitrarily.
    p = hpoly(S, 3, {(2, 0, 0): 1, (0, 1, 1): -1})
    pt = proj_point(S, (-1, -1, -1))
    assert proj_is_root(p, pt)
    assert not proj_is_root(p, proj_point(S, (1, 1, -1)))
    with pytest.raises(ValueError):
        proj_point(S, (0, 0, 0))


def test_fpoly_product_of_linear_factors():
    dom = SeriesDomain(QQ)
    r1 = s_const(QQ, Fraction(2))
    r2 = series(QQ, [(1, Fraction(1))])
    p = product_of_linear_factors(dom, [r1, r2])
    # (X - 2)(X - t) = X^2 - (2 + t) X + 2t.
    assert fmt_series(p.coeffs[(2,)]) == "1"
    assert fmt_series(p.coeffs[(0,)]) == "2*t"
    for r in (r1, r2):
        assert fpoly_eval(p, (r,)).is_zero()


def test_repr_parenthesizes_compound_coeffs():
    from finetrop.fields import QQi, gauss
    from finetrop.parsing import parse_poly

    p = hpoly1(field_hyperfield(QQi), {1: gauss(1, 2), 0: gauss(Fraction(-1))})
    text = repr(p)
    assert "(" in text
    assert parse_poly("Qi", text).coeffs == p.coeffs
