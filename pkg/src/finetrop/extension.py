"""Tropical extensions H x| Gamma with Gamma = Q^k ordered lexicographically.

Elements are either zero or a pair (coefficient, level) with the coefficient
a unit of the base hyperfield.  Lower level dominates in sums; at equal
levels the base hyperfield decides, and a base-zero in the sum produces the
up-set of all strictly larger levels together with zero.

Nested extensions flatten: extending H x| Q^m by Q^k gives H x| Q^(k+m)
with the outer levels first in the lexicographic tuple.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Optional

from .hyperfields import Hyperfield, K, S, PHI
from .ordgroup import GroupElem, gelem, gzero, group_add, group_neg


@dataclass(frozen=True)
class ExtElem:
    """Nonzero element (coefficient, level) of a tropical extension."""

    coef: Any
    level: GroupElem

    def __repr__(self):
        return f"({self.coef}@{','.join(str(c) for c in self.level.coords)})"


@dataclass(frozen=True)
class ExtSV:
    """Set value over a tropical extension.

    Holds coefficients at a single level, an optional tail of every unit at
    every strictly larger level, and an optional zero.  level None means
    there is no levelled part (the empty set or just zero).
    """

    level: Optional[GroupElem]
    base_sv: Any
    tail: bool
    zero: bool


class TropicalExtension(Hyperfield):
    """The hyperfield H x| Q^k for a base hyperfield H."""

    def __init__(self, base: Hyperfield, rank: int = 1):
        if rank < 1:
            raise ValueError("extension rank must be >= 1")
        if isinstance(base, TropicalExtension):
            # Flatten, outer levels first.
            self.rank = rank + base.rank
            self.base = base.base
        else:
            self.rank = rank
            self.base = base
        self.name = f"{self.base.name}x|Q" + (f"^{self.rank}" if self.rank > 1 else "")

    # --- element helpers --------------------------------------------------

    def elem(self, coef, *level) -> ExtElem:
        if self.base.is_zero(coef):
            raise ValueError("coefficient must be a base unit")
        if len(level) == 1 and isinstance(level[0], GroupElem):
            g = level[0]
        else:
            g = gelem(*level)
        if g.rank != self.rank:
            raise ValueError(f"level rank {g.rank}, expected {self.rank}")
        return ExtElem(coef, g)

    def zero(self):
        return None

    def one(self):
        return ExtElem(self.base.one(), gzero(self.rank))

    def is_zero(self, a) -> bool:
        return a is None

    def neg(self, a):
        return ExtElem(self.base.neg(a.coef), a.level)

    def mul(self, a, b):
        return ExtElem(self.base.mul(a.coef, b.coef), group_add(a.level, b.level))

    def inv(self, a):
        return ExtElem(self.base.inv(a.coef), group_neg(a.level))

    # --- set values -------------------------------------------------------

    def _mk(self, level, base_sv, tail, zero) -> ExtSV:
        if level is not None and self.base.set_is_empty(base_sv) and not tail:
            return ExtSV(None, self.base.empty_set(), False, zero)
        if level is None:
            base_sv = self.base.empty_set()
        return ExtSV(level, base_sv, tail, zero)

    def singleton(self, a):
        if a is None:
            return ExtSV(None, self.base.empty_set(), False, True)
        return ExtSV(a.level, self.base.singleton(a.coef), False, False)

    def empty_set(self):
        return ExtSV(None, self.base.empty_set(), False, False)

    def set_is_empty(self, S) -> bool:
        return S.level is None and not S.zero

    def add(self, a, b):
        return self.add_set_elem(self.singleton(a), b)

    def add_set_elem(self, S: ExtSV, y) -> ExtSV:
        if y is None:
            return S
        if S.level is None:
            if S.zero:
                return self.singleton(y)
            return S
        g, h = S.level, y.level
        if h < g:
            # The new element dominates everything in S.
            return self.singleton(y)
        if g < h:
            if S.tail:
                # The tail already covers y's level and beyond.
                return S
            return S
        C = self.base.add_set_elem(S.base_sv, y.coef)
        tail = self.base.set_contains_zero(C)
        base_part = self.base.set_without_zero(C)
        if S.tail or S.zero:
            base_part = self.base.union_sets(base_part, self.base.singleton(y.coef))
        return self._mk(g, base_part, tail, tail)

    def union_sets(self, S: ExtSV, T: ExtSV) -> ExtSV:
        if self.set_is_empty(S):
            return T if not S.zero else self._mk(T.level, T.base_sv, T.tail, True)
        if self.set_is_empty(T):
            return S if not T.zero else self._mk(S.level, S.base_sv, S.tail, True)
        if S.level is None or T.level is None:
            lev = S if S.level is not None else T
            return self._mk(lev.level, lev.base_sv, lev.tail, S.zero or T.zero)
        if S.level != T.level:
            raise ValueError("union of extension sets at different levels")
        return self._mk(
            S.level,
            self.base.union_sets(S.base_sv, T.base_sv),
            S.tail or T.tail,
            S.zero or T.zero,
        )

    def set_contains(self, S: ExtSV, a) -> bool:
        if a is None:
            return S.zero
        if S.level is None:
            return False
        if a.level == S.level and self.base.set_contains(S.base_sv, a.coef):
            return True
        return S.tail and S.level < a.level

    def set_contains_zero(self, S: ExtSV) -> bool:
        return S.zero

    def scale_set(self, S: ExtSV, c) -> ExtSV:
        if c is None:
            if self.set_is_empty(S):
                return self.empty_set()
            return ExtSV(None, self.base.empty_set(), False, True)
        if S.level is None:
            return S
        return self._mk(
            group_add(S.level, c.level),
            self.base.scale_set(S.base_sv, c.coef),
            S.tail,
            S.zero,
        )

    def set_elements(self, S: ExtSV) -> list:
        if S.tail:
            raise ValueError("extension set with a tail is infinite")
        out: list = []
        if S.level is not None:
            out.extend(
                ExtElem(c, S.level) for c in self.base.set_elements(S.base_sv)
            )
        if S.zero:
            out.append(None)
        return out

    # --- misc -------------------------------------------------------------

    def random_element(self, rng):
        if rng.random() < 0.1:
            return None
        base_units = self.base.units()
        if base_units is not None:
            c = rng.choice(base_units)
        else:
            while True:
                c = self.base.random_element(rng)
                if not self.base.is_zero(c):
                    break
        g = gelem(*[Fraction(rng.randint(-6, 6), rng.randint(1, 3))
                    for _ in range(self.rank)])
        return ExtElem(c, g)

    def is_stringent(self):
        return self.base.is_stringent()

    def stringency_witness(self):
        w = self.base.stringency_witness()
        if w is None:
            return None
        a, b = w
        return (self.elem(a, *[0] * self.rank), self.elem(b, *[0] * self.rank))

    def fmt(self, a):
        if a is None:
            return "0"
        lev = ",".join(str(c) for c in a.level.coords)
        return f"({self.base.fmt(a.coef)}, {lev})"


def trop(rank: int = 1) -> TropicalExtension:
    """The tropical hyperfield of rank k, K x| Q^k."""
    return TropicalExtension(K, rank)


def trop_signed() -> TropicalExtension:
    """The signed tropical hyperfield, S x| Q."""
    return TropicalExtension(S, 1)


def trop_complex() -> TropicalExtension:
    """The tropical complex model used here, Phi x| Q."""
    return TropicalExtension(PHI, 1)
