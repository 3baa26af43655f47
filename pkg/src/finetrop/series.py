"""Truncated Puiseux/Hahn series with exact rational exponents.

A series is a finite list of (exponent, coefficient) terms plus a precision
order: exponents at or above it are unknown.  Precision None means the
series is exact.  Empty terms with finite precision is an indeterminate
O(t^p) with no known terms.

Also defines the enriched valuations val, sval, fval and phval into
tropical extensions, and checks of the homomorphism laws.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Optional

from .extension import TropicalExtension, trop, trop_complex, trop_signed
from .fields import BaseField, QQ, QQi
from .hyperfields import (
    FieldHyperfield,
    Hom,
    dir_of_gauss,
)
from .ordgroup import gelem


class PrecisionError(ValueError):
    """Raised when a computation needs more known terms than available."""


@dataclass(frozen=True)
class SeriesTrunc:
    """Finitely supported series with a precision order.

    terms: ((exp, coeff), ...) with strictly increasing Fraction exponents
    and nonzero coefficients.  prec None marks an exact series.
    """

    field: BaseField
    terms: tuple[tuple[Fraction, Any], ...]
    prec: Optional[Fraction] = None

    def is_zero(self) -> bool:
        return not self.terms and self.prec is None

    def is_indeterminate(self) -> bool:
        return not self.terms and self.prec is not None

    def leading(self) -> tuple[Any, Fraction]:
        """(coefficient, exponent) of the minimal term."""
        if self.is_zero():
            raise ValueError("zero series has no leading term")
        if self.is_indeterminate():
            raise PrecisionError("insufficient precision: no known terms")
        g, c = self.terms[0]
        return c, g

    def __repr__(self):
        return fmt_series(self)


def series(field: BaseField, terms, prec=None) -> SeriesTrunc:
    """Build a series from {exp: coeff} or [(exp, coeff)] data."""
    if isinstance(terms, dict):
        items = list(terms.items())
    else:
        items = list(terms)
    p = None if prec is None else Fraction(prec)
    acc: dict[Fraction, Any] = {}
    for e, c in items:
        e = Fraction(e)
        if e in acc:
            c = field.add(acc[e], c)
        acc[e] = c
    out = []
    for e in sorted(acc):
        c = acc[e]
        if field.is_zero(c):
            continue
        if p is not None and e >= p:
            continue
        out.append((e, c))
    return SeriesTrunc(field, tuple(out), p)


def s_zero(field: BaseField) -> SeriesTrunc:
    return SeriesTrunc(field, ())


def s_const(field: BaseField, c) -> SeriesTrunc:
    if field.is_zero(c):
        return s_zero(field)
    return SeriesTrunc(field, ((Fraction(0), c),))


def s_monomial(field: BaseField, c, exp) -> SeriesTrunc:
    if field.is_zero(c):
        return s_zero(field)
    return SeriesTrunc(field, ((Fraction(exp), c),))


def _min_prec(a: Optional[Fraction], b: Optional[Fraction]) -> Optional[Fraction]:
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def series_add(a: SeriesTrunc, b: SeriesTrunc) -> SeriesTrunc:
    if a.field is not b.field and a.field != b.field:
        raise ValueError("base fields differ")
    p = _min_prec(a.prec, b.prec)
    return series(a.field, list(a.terms) + list(b.terms), p)


def series_neg(a: SeriesTrunc) -> SeriesTrunc:
    return SeriesTrunc(a.field, tuple((e, a.field.neg(c)) for e, c in a.terms), a.prec)


def series_sub(a: SeriesTrunc, b: SeriesTrunc) -> SeriesTrunc:
    return series_add(a, series_neg(b))


def series_mul(a: SeriesTrunc, b: SeriesTrunc) -> SeriesTrunc:
    F = a.field
    if a.is_zero() or b.is_zero():
        # Exact zero annihilates even unknown tails.
        return s_zero(F)
    p: Optional[Fraction] = None
    if b.prec is not None:
        if a.is_indeterminate():
            p = _min_prec(p, a.prec + b.prec)
        else:
            p = _min_prec(p, a.terms[0][0] + b.prec)
    if a.prec is not None:
        if b.is_indeterminate():
            p = _min_prec(p, a.prec + b.prec)
        else:
            p = _min_prec(p, b.terms[0][0] + a.prec)
    out = []
    for e1, c1 in a.terms:
        for e2, c2 in b.terms:
            out.append((e1 + e2, F.mul(c1, c2)))
    return series(F, out, p)


def series_scale(a: SeriesTrunc, c, exp=0) -> SeriesTrunc:
    return series_mul(a, s_monomial(a.field, c, exp))


def series_truncate(a: SeriesTrunc, prec) -> SeriesTrunc:
    return series(a.field, list(a.terms), _min_prec(a.prec, Fraction(prec)))


def series_inv(a: SeriesTrunc, prec=None) -> SeriesTrunc:
    """Inverse by geometric expansion up to the soundly known precision.

    For a = c t^g (1 + u) with known terms up to O(t^p), the inverse is
    known up to O(t^(p - 2g)); an explicit prec overrides only downward.
    """
    F = a.field
    if a.is_zero():
        raise ZeroDivisionError("cannot invert the zero series")
    if a.is_indeterminate():
        raise PrecisionError("insufficient precision: leading term unknown")
    c, g = a.leading()
    target: Optional[Fraction] = None
    if a.prec is not None:
        target = a.prec - 2 * g
    if prec is not None:
        target = _min_prec(target, Fraction(prec))
    # u has strictly positive leading exponent.
    u = series_scale(series_sub(a, s_monomial(F, c, g)), F.inv(c), -g)
    if u.is_zero():
        out = s_monomial(F, F.inv(c), -g)
        return out if target is None else series_truncate(out, target)
    if target is None:
        raise PrecisionError("inverse of a multi-term exact series needs a precision")
    rel = target + g  # required relative precision of (1+u)^{-1}
    acc = s_const(F, F.one())
    term = s_const(F, F.one())
    nu = series_neg(u)
    ulead = u.terms[0][0]
    k = 1
    while k * ulead < rel:
        # Truncating each iterate keeps term counts bounded; dropped
        # exponents are >= rel and cannot feed back below it.
        term = series_truncate(series_mul(term, nu), rel)
        acc = series_add(acc, term)
        k += 1
    acc = series_truncate(acc, rel)
    return series_scale(acc, F.inv(c), -g)


def series_div(a: SeriesTrunc, b: SeriesTrunc, prec=None) -> SeriesTrunc:
    out = series_mul(a, series_inv(b, prec))
    if prec is not None:
        out = series_truncate(out, prec)
    return out


def fmt_coeff(field: BaseField, c) -> str:
    s = field.fmt(c)
    return f"({s})" if ("+" in s[1:] or "-" in s[1:]) else s


def fmt_series(a: SeriesTrunc) -> str:
    if a.is_zero():
        return "0"
    parts = []
    for e, c in a.terms:
        cs = fmt_coeff(a.field, c)
        if e == 0:
            parts.append(cs)
        else:
            es = f"t^({e})" if (e.denominator != 1 or e < 0) else (
                "t" if e == 1 else f"t^{e}")
            parts.append(es if cs == "1" else f"{cs}*{es}")
    if a.prec is not None:
        ps = f"({a.prec})" if (a.prec.denominator != 1 or a.prec < 0) else str(a.prec)
        parts.append(f"O(t^{ps})")
    return " + ".join(parts)


# ---------------------------------------------------------------------------
# Series domains (for sampling in homomorphism checks)


class SeriesDomain:
    """The exact-series ring over a base field, with random sampling."""

    def __init__(self, field: BaseField, max_terms: int = 3, denom: int = 4):
        self.field = field
        self.max_terms = max_terms
        self.denom = denom
        self.name = f"{field.name}((t))"

    def zero(self):
        return s_zero(self.field)

    def one(self):
        return s_const(self.field, self.field.one())

    def is_zero(self, a: SeriesTrunc) -> bool:
        return a.is_zero()

    def add(self, a, b):
        return series_add(a, b)

    def mul(self, a, b):
        return series_mul(a, b)

    def neg(self, a):
        return series_neg(a)

    def random(self, rng) -> SeriesTrunc:
        n = rng.randint(0, self.max_terms)
        terms = []
        for _ in range(n):
            e = Fraction(rng.randint(-4, 8), rng.randint(1, self.denom))
            while True:
                c = self.field.random(rng)
                if not self.field.is_zero(c):
                    break
            terms.append((e, c))
        return series(self.field, terms)

    def random_unit(self, rng) -> SeriesTrunc:
        while True:
            s = self.random(rng)
            if not s.is_zero():
                return s


# ---------------------------------------------------------------------------
# Enriched valuations


def _lead(a: SeriesTrunc):
    if a.is_indeterminate():
        raise PrecisionError("insufficient precision to take a valuation")
    return a.leading()


def hom_val(field: BaseField = QQ) -> Hom:
    """Valuation: a nonzero series maps to its leading exponent in K x| Q."""
    T = trop()

    def f(a: SeriesTrunc):
        if a.is_zero():
            return None
        _, g = _lead(a)
        return T.elem(1, gelem(g))

    return Hom(f"val:{field.name}((t))->T", SeriesDomain(field), T, f)


def hom_sval() -> Hom:
    """Signed valuation over rational series: (sign of lead, lead exponent)."""
    TR = trop_signed()

    def f(a: SeriesTrunc):
        if a.is_zero():
            return None
        c, g = _lead(a)
        return TR.elem(1 if c > 0 else -1, gelem(g))

    return Hom("sval:Q((t))->TR", SeriesDomain(QQ), TR, f)


def hom_fval(field: BaseField = QQ) -> Hom:
    """Fine valuation: (leading coefficient, leading exponent)."""
    target = TropicalExtension(FieldHyperfield(field), 1)

    def f(a: SeriesTrunc):
        if a.is_zero():
            return None
        c, g = _lead(a)
        return target.elem(c, gelem(g))

    return Hom(f"fval:{field.name}((t))->{field.name}x|Q", SeriesDomain(field),
               target, f)


def hom_phval() -> Hom:
    """Phased valuation over Gaussian-rational series into Phi x| Q."""
    TC = trop_complex()

    def f(a: SeriesTrunc):
        if a.is_zero():
            return None
        c, g = _lead(a)
        return TC.elem(dir_of_gauss(c), gelem(g))

    return Hom("phval:Qi((t))->TC", SeriesDomain(QQi), TC, f)


def hom_by_name(name: str) -> Hom:
    table = {
        "val": hom_val,
        "sval": hom_sval,
        "fval": hom_fval,
        "phval": hom_phval,
    }
    if name not in table:
        raise ValueError(f"unknown homomorphism {name!r}")
    return table[name]()


# ---------------------------------------------------------------------------
# The surjectivity-of-sums condition for sign maps out of Q

def sign_sum_condition_witness(target) -> Optional[tuple]:
    """Check, for the sign map Q -> target in {S, W}, that every gamma in
    alpha + beta is realised as sgn(a + b) with sgn a = alpha, sgn b = beta.

    Rationals of fixed signs have knowable sums: same sign forces that
    sign, opposite signs realise all three.  Returns a witness triple
    (alpha, beta, gamma) that cannot be realised, or None.
    """
    def reachable(alpha: int, beta: int) -> set[int]:
        if alpha == 0:
            return {beta}
        if beta == 0:
            return {alpha}
        if alpha == beta:
            return {alpha}
        return {-1, 0, 1}

    for alpha in (-1, 0, 1):
        for beta in (-1, 0, 1):
            hsum = target.add(alpha, beta)
            for gamma in target.set_elements(hsum):
                if gamma not in reachable(alpha, beta):
                    return (alpha, beta, gamma)
    return None
