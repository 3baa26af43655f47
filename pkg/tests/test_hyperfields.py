"""Axioms and arithmetic of the base hyperfields, including the exact
phase arc algebra."""

import random

import pytest

from finetrop.fields import QQ, gauss
from finetrop.hyperfields import (
    K,
    P,
    PHI,
    S,
    W,
    check_axioms,
    dir_of_gauss,
    field_hyperfield,
    hom_check,
    hom_phase,
    hom_sign,
    hom_sign_weak,
    hom_trivial,
    make_dir,
    quotient_build,
)


def els(H, sv):
    return set(H.set_elements(sv))


# ---------------------------------------------------------------------------
# Krasner, sign, weak sign


def test_krasner_addition():
    assert els(K, K.add(1, 1)) == {0, 1}
    assert els(K, K.add(1, 0)) == {1}
    assert K.neg(1) == 1


def test_sign_addition():
    assert els(S, S.add(1, -1)) == {-1, 0, 1}
    assert els(S, S.add(1, 1)) == {1}
    assert els(S, S.add(-1, 0)) == {-1}


def test_weak_sign_is_not_stringent():
    assert els(W, W.add(1, 1)) == {1, -1}
    assert els(W, W.add(1, -1)) == {-1, 0, 1}
    assert not W.is_stringent()
    a, b = W.stringency_witness()
    assert not W.equal(b, W.neg(a))
    assert S.is_stringent() and K.is_stringent()


def test_exhaustive_axioms_small():
    for H in (K, S, W):
        assert check_axioms(H) == []


# ---------------------------------------------------------------------------
# Quotient hyperfields


def test_quotient_gf5():
    H = quotient_build(5, [1, 4])
    assert sorted(H.elements()) == [0, 1, 2]
    assert check_axioms(H) == []
    # -1 lies in the subgroup, so 1 is self-negating, yet 1 + 2 is still
    # multivalued: the quotient is not stringent.
    assert H.neg(1) == 1
    assert els(H, H.add(1, 2)) == {1, 2}
    assert not H.is_stringent()


def test_quotient_by_full_unit_group_is_krasner_like():
    H = quotient_build(5, [1, 2, 3, 4])
    assert sorted(H.elements()) == [0, 1]
    assert H.is_stringent()
    assert els(H, H.add(1, 1)) == {0, 1}


def test_quotient_gf7():
    H = quotient_build(7, [1, 2, 4])
    assert sorted(H.elements()) == [0, 1, 3]
    assert check_axioms(H) == []
    # 1 + 1 covers two cosets, but 1 is not its own inverse: non-stringent.
    assert els(H, H.add(1, 1)) == {1, 3}
    assert H.neg(1) == 3
    assert not H.is_stringent()


def test_quotient_bad_subgroup():
    with pytest.raises(ValueError):
        quotient_build(7, [1, 2])


# ---------------------------------------------------------------------------
# Phase hyperfields


def test_phase_point_sums():
    d = make_dir(1, 0)
    assert els(P, P.add(d, d)) == {d}
    anti = P.add(d, make_dir(-1, 0))
    assert P.set_contains_zero(anti)
    assert els(P, P.set_without_zero(anti)) == {d, make_dir(-1, 0)}
    # Tropical phase: antipodal sum is the whole circle.
    full = PHI.add(d, make_dir(-1, 0))
    assert PHI.set_contains(full, make_dir(-3, 7))
    assert PHI.set_contains_zero(full)


def test_phase_short_arc():
    a, b = make_dir(1, 0), make_dir(0, 1)
    sv = P.add(a, b)
    assert sv.contains_dir(make_dir(1, 1))
    assert not sv.contains_dir(make_dir(-1, -1))
    assert not sv.contains_dir(a)  # open arc over P
    closed = PHI.add(a, b)
    assert closed.contains_dir(a)  # closed arc over Phi


def test_phase_axioms_sampled():
    for H in (P, PHI):
        assert check_axioms(H, random.Random(0), samples=1000) == []


# ---------------------------------------------------------------------------
# Homomorphisms


def test_hom_checks():
    rng = random.Random(3)
    for hom in (hom_trivial(QQ), hom_sign(), hom_phase()):
        assert hom_check(hom, rng, samples=300) == []


def test_weak_sign_map_is_still_a_homomorphism():
    # The failure of W is condition (2.2), not the homomorphism law.
    assert hom_check(hom_sign_weak(), random.Random(1), samples=300) == []


def test_phase_of_gauss():
    assert dir_of_gauss(gauss(3, 4)) == make_dir(3, 4)
    assert dir_of_gauss(gauss(-2, 0)) == make_dir(-1, 0)


def test_field_hyperfield_sums_are_singletons():
    H = field_hyperfield(QQ)
    assert els(H, H.add(QQ.one(), QQ.one())) == {QQ.from_int(2)}
    assert check_axioms(H, random.Random(5), samples=500) == []
