"""Univariate root solving over extensions: Newton cells, multiplicities,
and the randomized harnesses at small scale."""

import random
from fractions import Fraction

import pytest

from finetrop.extension import trop, trop_signed
from finetrop.fields import QQ, QQi, gauss
from finetrop.hyperfields import S, field_hyperfield, hom_sign, quotient_build
from finetrop.parsing import parse_poly
from finetrop.poly import hpoly1, is_root
from finetrop.series import hom_fval, hom_sval, hom_val
from finetrop.solve import (
    ArcRootDescription,
    BaseSolveError,
    base_roots,
    kapranov_harness,
    mult_bound_check,
    multiplicity,
    newton_cells,
    rac_check_instance,
    roots_univariate,
    tropical_mult_oracle,
)

T = trop()
TR = trop_signed()


def test_newton_cells():
    p = parse_poly("Qx|Q", "X^2 + (-1, 0)*X + (1, 1)")
    cells = newton_cells(p)
    got = {(c.level.coords[0], c.J) for c in cells}
    assert got == {(Fraction(0), (1, 2)), (Fraction(1), (0, 1))}


def test_roots_with_base_data():
    p = parse_poly("Qx|Q", "X^2 + (-1, 0)*X + (1, 1)")
    recs = roots_univariate(p)
    got = {(r.root.coef, r.root.level.coords[0], r.multiplicity) for r in recs}
    assert got == {(Fraction(1), Fraction(0), 1), (Fraction(1), Fraction(1), 1)}


def test_double_root_over_trop():
    p = parse_poly("T", "X^2 + (1, 3)")
    recs = roots_univariate(p)
    assert len(recs) == 1
    r = recs[0]
    assert r.root.level.coords[0] == Fraction(3, 2)
    assert r.multiplicity == 2
    assert tropical_mult_oracle(p, r.root.level) == 2


def test_zero_root():
    p = parse_poly("T", "X^2 + (1, 0)*X")
    recs = roots_univariate(p)
    by_key = {("0" if r.root is None else "unit"): r.multiplicity for r in recs}
    assert by_key == {"0": 1, "unit": 1}


def test_sign_multiplicity():
    p = hpoly1(S, {2: 1, 1: -1, 0: 1})
    assert is_root(p, (1,))
    assert multiplicity(p, 1) == 2


def test_base_roots_variants():
    # Rational roots, exhaustively over the rational-root theorem.
    assert set(base_roots(field_hyperfield(QQ), {2: Fraction(1), 0: Fraction(-4)})) \
        == {Fraction(-2), Fraction(2)}
    # Gaussian roots via the quadratic formula.
    got = set(base_roots(field_hyperfield(QQi), {2: gauss(1), 0: gauss(1)}))
    assert got == {gauss(0, 1), gauss(0, -1)}
    with pytest.raises(BaseSolveError):
        base_roots(field_hyperfield(QQi),
                   {3: gauss(1), 1: gauss(3), 0: gauss(1, 1)})


def test_phase_roots_are_arcs():
    from finetrop.hyperfields import P, make_dir

    desc = base_roots(P, {2: P.one(), 1: P.one(), 0: P.one()})
    assert isinstance(desc, ArcRootDescription)
    assert desc.contains(make_dir(-1, 1))
    assert not desc.contains(make_dir(1, 0))


def test_rac_sign_counterexample():
    p = hpoly1(field_hyperfield(QQ),
               {2: Fraction(1), 1: Fraction(-1), 0: Fraction(1)})
    res = rac_check_instance(hom_sign(), p, 1)
    assert res.status == "counterexample"
    assert "discriminant -3" in res.detail


def test_rac_lift():
    # X^2 - 4 has the rational root 2 in the fiber of +1.
    p = hpoly1(field_hyperfield(QQ), {2: Fraction(1), 0: Fraction(-4)})
    res = rac_check_instance(hom_sign(), p, 1)
    assert res.status == "lift"
    assert res.witness in (Fraction(2), Fraction(-2))


def test_mult_bound_small():
    rng = random.Random(0)
    stringent_quotients = (quotient_build(5, [1, 2, 3, 4]),
                           quotient_build(5, [1]))
    for H in (T, TR) + stringent_quotients:
        assert mult_bound_check(H, rng, trials=25, deg=5) == []


def test_mult_bound_fails_for_nonstringent_quotient():
    # Non-stringent hyperfields can exceed the bound: over GF(5)/{1,4} the
    # polynomial X^4 + X^3 + X^2 + 1 has two roots of multiplicity 4 each
    # (confirmed by exhaustive branch enumeration).
    H = quotient_build(5, [1, 4])
    assert not H.is_stringent()
    p = hpoly1(H, {4: 1, 3: 1, 2: 1, 0: 1})
    assert multiplicity(p, 1) == 4
    assert multiplicity(p, 2) == 4


def test_mult_matches_tropical_oracle():
    rng = random.Random(1)
    from finetrop.solve import random_hpoly

    for _ in range(25):
        p = random_hpoly(T, rng, deg=rng.randint(2, 6))
        for r in roots_univariate(p):
            if r.root is not None:
                assert r.multiplicity == tropical_mult_oracle(p, r.root.level)


def test_kapranov_small():
    rng = random.Random(2)
    for hom in (hom_val(), hom_sval(), hom_fval()):
        assert kapranov_harness(hom, rng, trials=20) == []
