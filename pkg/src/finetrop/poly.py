"""Polynomials over hyperfields (set-valued evaluation) and over exact
coefficient domains (fields and series), plus push-forwards between them.

Hyperfield polynomials are plain data: no polynomial ring structure is
provided, since the polynomials over a hyperfield do not form one.  The
only product of hyperfield polynomials lives in the solve module.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterable, Mapping, Sequence

from .hyperfields import Hom, Hyperfield


Expt = tuple[int, ...]


@dataclass(frozen=True)
class HPoly:
    """Polynomial (or Laurent polynomial) over a hyperfield."""

    hyperfield: Hyperfield
    nvars: int
    coeffs: Any  # Mapping[Expt, elem], zero coefficients omitted

    def __post_init__(self):
        object.__setattr__(self, "coeffs", dict(self.coeffs))

    @property
    def support(self) -> list[Expt]:
        return sorted(self.coeffs)

    def is_laurent(self) -> bool:
        return any(e < 0 for d in self.coeffs for e in d)

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        if not self.coeffs:
            return 0
        return max(sum(d) for d in self.coeffs)

    def __repr__(self):
        H = self.hyperfield
        if not self.coeffs:
            return "0"
        names = _var_names(self.nvars)
        parts = []
        for d in sorted(self.coeffs, reverse=True):
            mono = "*".join(
                f"{names[i]}" if e == 1 else f"{names[i]}^{e}"
                for i, e in enumerate(d) if e != 0
            )
            c = H.fmt(self.coeffs[d])
            if c[0] != "(" and ("+" in c[1:] or "-" in c[1:]):
                # A signed compound coefficient needs parentheses to keep
                # the printed sum unambiguous.
                c = f"({c})"
            parts.append(c if not mono else (mono if c == "1" else f"{c}*{mono}"))
        return " + ".join(parts)


def _var_names(n: int) -> list[str]:
    if n <= 3:
        return ["X", "Y", "Z"][:n]
    return [f"X{i+1}" for i in range(n)]


def hpoly(H: Hyperfield, nvars: int, coeffs: Mapping[Expt, Any]) -> HPoly:
    clean = {tuple(d): c for d, c in coeffs.items() if not H.is_zero(c)}
    return HPoly(H, nvars, clean)


def hpoly1(H: Hyperfield, coeffs_by_degree: Mapping[int, Any]) -> HPoly:
    return hpoly(H, 1, {(i,): c for i, c in coeffs_by_degree.items()})


def eval_poly(p: HPoly, point: Sequence):
    """Set-valued evaluation: the hypersum of the monomial values.

    The fold runs over the support in lexicographic order so results are
    reproducible; hyperaddition is associative so the order is immaterial.
    """
    H = p.hyperfield
    terms = []
    for d in p.support:
        c = p.coeffs[d]
        val = c
        dead = False
        for a, e in zip(point, d):
            if e == 0:
                continue
            if H.is_zero(a):
                if e < 0:
                    raise ZeroDivisionError("0^k undefined for negative k")
                dead = True
                break
            val = H.mul(val, H.power(a, e))
        if not dead:
            terms.append(val)
    return H.nary_sum(terms)


def is_root(p: HPoly, point: Sequence) -> bool:
    return p.hyperfield.set_contains_zero(eval_poly(p, point))


def prevariety_member(polys: Iterable[HPoly], point: Sequence) -> bool:
    return all(is_root(p, point) for p in polys)


def pushforward(f: Hom, p) -> HPoly:
    """Coefficientwise image of a polynomial along a homomorphism.

    Accepts either an FPoly over f's source domain or an HPoly over a
    source hyperfield.
    """
    coeffs = {d: f(c) for d, c in p.coeffs.items()}
    return hpoly(f.target, p.nvars, coeffs)


def homogenize(p: HPoly) -> HPoly:
    """Pad each monomial with a new first variable up to total degree."""
    if p.is_laurent():
        raise ValueError("homogenize a polynomial, not a Laurent polynomial")
    alpha = p.degree()
    coeffs = {}
    for d, c in p.coeffs.items():
        coeffs[(alpha - sum(d),) + tuple(d)] = c
    return hpoly(p.hyperfield, p.nvars + 1, coeffs)


def affinize(p: HPoly) -> HPoly:
    """Clear negative exponents by the minimal monomial shift."""
    if not p.coeffs:
        return p
    shifts = tuple(
        -min(min(d[i] for d in p.coeffs), 0) for i in range(p.nvars)
    )
    coeffs = {
        tuple(e + s for e, s in zip(d, shifts)): c for d, c in p.coeffs.items()
    }
    return hpoly(p.hyperfield, p.nvars, coeffs)


# ---------------------------------------------------------------------------
# Projective points


@dataclass(frozen=True)
class ProjPoint:
    """Point of P^n(H), stored with first nonzero coordinate scaled to one."""

    hyperfield: Hyperfield
    coords: tuple


def proj_point(H: Hyperfield, coords: Sequence) -> ProjPoint:
    coords = tuple(coords)
    pivot = None
    for c in coords:
        if not H.is_zero(c):
            pivot = c
            break
    if pivot is None:
        raise ValueError("projective point needs a nonzero coordinate")
    lam = H.inv(pivot)
    scaled = tuple(H.zero() if H.is_zero(c) else H.mul(lam, c) for c in coords)
    return ProjPoint(H, scaled)


def proj_is_root(p: HPoly, pt: ProjPoint) -> bool:
    degs = {sum(d) for d in p.coeffs}
    if len(degs) > 1:
        raise ValueError("projective root test needs a homogeneous polynomial")
    return is_root(p, pt.coords)


# ---------------------------------------------------------------------------
# Polynomials over exact coefficient domains (fields, series)


@dataclass(frozen=True)
class FPoly:
    """Plain polynomial over a field or series domain, used as oracle data."""

    domain: Any
    nvars: int
    coeffs: Any  # Mapping[Expt, coeff]

    def __post_init__(self):
        object.__setattr__(
            self,
            "coeffs",
            {tuple(d): c for d, c in dict(self.coeffs).items()
             if not self.domain.is_zero(c)},
        )

    @property
    def support(self) -> list[Expt]:
        return sorted(self.coeffs)

    def degree(self) -> int:
        if not self.coeffs:
            return 0
        return max(sum(d) for d in self.coeffs)


def fpoly(domain, nvars: int, coeffs: Mapping[Expt, Any]) -> FPoly:
    return FPoly(domain, nvars, coeffs)


def fpoly_add(a: FPoly, b: FPoly) -> FPoly:
    D = a.domain
    out = dict(a.coeffs)
    for d, c in b.coeffs.items():
        out[d] = D.add(out.get(d, D.zero()), c)
    return FPoly(D, a.nvars, out)


def fpoly_mul(a: FPoly, b: FPoly) -> FPoly:
    D = a.domain
    out: dict[Expt, Any] = {}
    for d1, c1 in a.coeffs.items():
        for d2, c2 in b.coeffs.items():
            d = tuple(x + y for x, y in zip(d1, d2))
            prod = D.mul(c1, c2)
            out[d] = D.add(out.get(d, D.zero()), prod)
    return FPoly(D, a.nvars, out)


def fpoly_eval(p: FPoly, point: Sequence):
    D = p.domain
    total = D.zero()
    for d, c in p.coeffs.items():
        val = c
        for a, e in zip(point, d):
            for _ in range(e):
                val = D.mul(val, a)
        total = D.add(total, val)
    return total


def linear_factor(domain, root) -> FPoly:
    """The univariate factor X - root."""
    return FPoly(domain, 1, {(1,): domain.one(), (0,): domain.neg(root)})


def product_of_linear_factors(domain, roots: Sequence) -> FPoly:
    p = FPoly(domain, 1, {(0,): domain.one()})
    for r in roots:
        p = fpoly_mul(p, linear_factor(domain, r))
    return p
