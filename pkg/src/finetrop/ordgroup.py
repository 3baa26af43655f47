"""Ordered abelian value groups: Q and lexicographically ordered Q^k.

All coordinates are exact rationals kept in canonical form by Fraction,
so structural equality coincides with group equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

LT, EQ, GT = -1, 0, 1

RationalLike = Union[int, str, Fraction]

MAX_DEFAULT_RANK = 3


def _frac(x: RationalLike) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class GroupElem:
    """Element of Q^k with the lexicographic order (k = 1 is plain Q)."""

    coords: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coords) < 1:
            raise ValueError("group element needs rank >= 1")

    @property
    def rank(self) -> int:
        return len(self.coords)

    def __repr__(self):
        return "G(" + ", ".join(str(c) for c in self.coords) + ")"

    # Comparisons delegate to the lexicographic tuple order on Fractions.
    def __lt__(self, other: "GroupElem") -> bool:
        _check_rank(self, other)
        return self.coords < other.coords

    def __le__(self, other: "GroupElem") -> bool:
        _check_rank(self, other)
        return self.coords <= other.coords


def gelem(*coords: RationalLike) -> GroupElem:
    return GroupElem(tuple(_frac(c) for c in coords))


def gzero(rank: int = 1) -> GroupElem:
    return GroupElem((Fraction(0),) * rank)


def _check_rank(a: GroupElem, b: GroupElem) -> None:
    if a.rank != b.rank:
        raise ValueError(f"rank mismatch: {a.rank} vs {b.rank}")


def group_add(a: GroupElem, b: GroupElem) -> GroupElem:
    _check_rank(a, b)
    return GroupElem(tuple(x + y for x, y in zip(a.coords, b.coords)))


def group_neg(a: GroupElem) -> GroupElem:
    return GroupElem(tuple(-x for x in a.coords))


def group_sub(a: GroupElem, b: GroupElem) -> GroupElem:
    return group_add(a, group_neg(b))


def lex_compare(a: GroupElem, b: GroupElem) -> int:
    """Total order on Q^k: returns LT, EQ or GT."""
    _check_rank(a, b)
    if a.coords < b.coords:
        return LT
    if a.coords > b.coords:
        return GT
    return EQ


def scalar_mul(n: int, a: GroupElem) -> GroupElem:
    return GroupElem(tuple(n * x for x in a.coords))


def group_div(a: GroupElem, n: int) -> GroupElem:
    """Exact division by a nonzero integer (Q^k is divisible)."""
    if n == 0:
        raise ZeroDivisionError("cannot divide group element by 0")
    return GroupElem(tuple(x / n for x in a.coords))


def to_json(a: GroupElem) -> list[str]:
    return [str(c) for c in a.coords]


def from_json(data: Iterable[str]) -> GroupElem:
    coords = tuple(Fraction(c) for c in data)
    return GroupElem(coords)
