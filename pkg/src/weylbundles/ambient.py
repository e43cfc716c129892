"""The graded ambient algebra over K[z+, z-] and its degree-zero part.

Generators z+, z-, x+, x- satisfy

    z+ z- = z- z+,
    x+ x- = pt(z+ z-),      x- x+ = pt(q z+ z-),
    x+ z(pm) = 1/q(pm) z(pm) x+,   x- z(pm) = q(pm) z(pm) x-,

where pt is p with its root at zero factored out (p = z^k pt, k >= 1) and
q = q_plus * q_minus.  The algebra is graded by deg z(pm) = (pm)1 and
deg x(pm) = (pm)k.

Elements are normal forms on the basis x-^m f(z+,z-) (key m > 0),
x+^{-m} f(z+,z-) (key m < 0) and f(z+,z-) (key m = 0); x- plays the same
role x plays in :mod:`weylbundles.gwa` (it scales the base-ring generators
forward), which is why it gets the positive keys.

The degree-zero part is the generalized Weyl algebra B(p; q, 0) via

    x = x- z+^k,    y = z-^k x+,    z = z+ z-.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .gwa import AlgebraMismatch, GwaAlgebra, GwaElem
from .poly import PairPoly, UniPoly, factor_zero_root, frac, tail_decompose


@dataclass(frozen=True)
class AmbientAlgebra:
    p: UniPoly
    q_plus: Fraction
    q_minus: Fraction
    q: Fraction = field(init=False)
    k: int = field(init=False)
    p_reduced: UniPoly = field(init=False)
    p_tail: UniPoly = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "q_plus", frac(self.q_plus))
        object.__setattr__(self, "q_minus", frac(self.q_minus))
        if self.q_plus == 0 or self.q_minus == 0:
            raise ValueError("q_plus and q_minus must be nonzero")
        k, reduced = factor_zero_root(self.p)
        if k < 1:
            raise ValueError("p must have 0 as a root")
        object.__setattr__(self, "q", self.q_plus * self.q_minus)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "p_reduced", reduced)
        object.__setattr__(self, "p_tail", tail_decompose(reduced))

    # pt(z+ z-) and pt(q z+ z-), the values of x+ x- and x- x+
    def _yx_poly(self) -> PairPoly:
        return PairPoly.diagonal(self.p_reduced)

    def _xy_poly(self) -> PairPoly:
        return PairPoly.diagonal(self.p_reduced.compose_linear(self.q, 0))

    def scale_pow(self, j: int, f: PairPoly) -> PairPoly:
        """The j-th power of the grading automorphism z(pm) -> q(pm) z(pm)."""
        return f.twist(self.q_plus**j, self.q_minus**j)

    def degree_of_key(self, m: int, a: int, b: int) -> int:
        return -m * self.k + a - b

    def gwa(self) -> GwaAlgebra:
        """The degree-zero part as a standalone algebra, B(p; q, 0)."""
        return GwaAlgebra(self.p, self.q, frac(0))

    # -- element constructors ------------------------------------------
    def elem(self, terms: Mapping[int, PairPoly]) -> "AmbientElem":
        return AmbientElem(self, terms)

    def zero(self) -> "AmbientElem":
        return AmbientElem(self, {})

    def one(self) -> "AmbientElem":
        return AmbientElem(self, {0: PairPoly.one()})

    def x_plus(self) -> "AmbientElem":
        return AmbientElem(self, {-1: PairPoly.one()})

    def x_minus(self) -> "AmbientElem":
        return AmbientElem(self, {1: PairPoly.one()})

    def z_plus(self) -> "AmbientElem":
        return AmbientElem(self, {0: PairPoly.monomial(1, 0)})

    def z_minus(self) -> "AmbientElem":
        return AmbientElem(self, {0: PairPoly.monomial(0, 1)})

    def from_pair(self, f: PairPoly) -> "AmbientElem":
        return AmbientElem(self, {0: f})

    def from_z_poly(self, f: UniPoly) -> "AmbientElem":
        """A polynomial in z interpreted in the base ring via z = z+ z-."""
        return AmbientElem(self, {0: PairPoly.diagonal(f)})

    def basis_elem(self, m: int, a: int, b: int, c=1) -> "AmbientElem":
        return AmbientElem(self, {m: PairPoly.monomial(a, b, c)})


class AmbientElem:
    __slots__ = ("alg", "terms")

    def __init__(self, alg: AmbientAlgebra, terms: Mapping[int, PairPoly]):
        self.alg = alg
        self.terms = {int(m): f for m, f in terms.items() if f}

    def _check(self, other: "AmbientElem"):
        if self.alg != other.alg:
            raise AlgebraMismatch("elements live in different algebras")

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, AmbientElem):
            return self.alg == other.alg and self.terms == other.terms
        return NotImplemented

    def __add__(self, other) -> "AmbientElem":
        if not isinstance(other, AmbientElem):
            return NotImplemented
        self._check(other)
        data = dict(self.terms)
        for m, f in other.terms.items():
            g = data.get(m)
            data[m] = f if g is None else g + f
        return AmbientElem(self.alg, data)

    def __neg__(self) -> "AmbientElem":
        return AmbientElem(self.alg, {m: -f for m, f in self.terms.items()})

    def __sub__(self, other) -> "AmbientElem":
        if not isinstance(other, AmbientElem):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> "AmbientElem":
        if isinstance(other, AmbientElem):
            self._check(other)
            data: dict[int, PairPoly] = {}
            for m1, f1 in self.terms.items():
                for m2, f2 in other.terms.items():
                    m, f = _term_mul(self.alg, m1, f1, m2, f2)
                    g = data.get(m)
                    data[m] = f if g is None else g + f
            return AmbientElem(self.alg, data)
        c = frac(other)
        return AmbientElem(self.alg, {m: f * c for m, f in self.terms.items()})

    def __rmul__(self, other) -> "AmbientElem":
        return self.__mul__(other)

    def __pow__(self, n: int) -> "AmbientElem":
        if n < 0:
            raise ValueError("negative power in the algebra")
        result = self.alg.one()
        for _ in range(n):
            result = result * self
        return result

    # -- grading --------------------------------------------------------
    def monomials(self) -> dict[tuple[int, int, int], Fraction]:
        """Expansion on the basis, keyed by (m, a, b)."""
        out = {}
        for m, f in self.terms.items():
            for (a, b), c in f.coeffs.items():
                out[(m, a, b)] = c
        return out

    def degree_split(self) -> dict[int, "AmbientElem"]:
        """Partition into homogeneous components, keyed by degree."""
        buckets: dict[int, dict[int, dict[tuple[int, int], Fraction]]] = {}
        for m, f in self.terms.items():
            for (a, b), c in f.coeffs.items():
                d = self.alg.degree_of_key(m, a, b)
                buckets.setdefault(d, {}).setdefault(m, {})[(a, b)] = c
        return {
            d: AmbientElem(self.alg, {m: PairPoly(cs) for m, cs in terms.items()})
            for d, terms in buckets.items()
        }

    def degree(self) -> int | None:
        """The degree of a homogeneous element (None for zero)."""
        split = self.degree_split()
        if not split:
            return None
        if len(split) > 1:
            raise ValueError(f"element is not homogeneous: degrees {sorted(split)}")
        return next(iter(split))

    def is_homogeneous(self, d: int | None = None) -> bool:
        split = self.degree_split()
        if len(split) > 1:
            return False
        return d is None or not split or next(iter(split)) == d

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, reverse=True):
            body = f"({self.terms[m]})"
            if m > 0:
                head = "xm" if m == 1 else f"xm^{m}"
                parts.append(f"{head}*{body}")
            elif m < 0:
                head = "xp" if m == -1 else f"xp^{-m}"
                parts.append(f"{head}*{body}")
            else:
                parts.append(body)
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"AmbientElem('{self}')"


def _term_mul(alg: AmbientAlgebra, m1: int, f1: PairPoly, m2: int, f2: PairPoly
              ) -> tuple[int, PairPoly]:
    """Same rewriting scheme as the one-variable engine.

    f1 crosses the right generator block (the m-key plays the role d plays
    there), then opposite x+/x- pairs annihilate one at a time, each pass
    dropping min(|m1|, |m2|) by one.
    """
    f = alg.scale_pow(-m2, f1) * f2
    while m1 and m2 and (m1 > 0) != (m2 > 0):
        if m1 > 0:
            m1 -= 1
            m2 += 1
            g = alg._xy_poly()   # x- x+ = pt(q z+ z-)
        else:
            m1 += 1
            m2 -= 1
            g = alg._yx_poly()   # x+ x- = pt(z+ z-)
        f = alg.scale_pow(-m2, g) * f
    return m1 + m2, f


def embed_degree_zero(amb: AmbientAlgebra, e: GwaElem) -> AmbientElem:
    """Image of an element of B(p; q, 0) in the degree-zero part.

    Sends x to x- z+^k, y to z-^k x+ and z to z+ z-; requires the source
    algebra to carry the same p, the product q = q_plus q_minus, and r = 0.
    """
    if e.alg.r != 0:
        raise AlgebraMismatch("degree-zero identification needs r = 0")
    if e.alg.q != amb.q or e.alg.p != amb.p:
        raise AlgebraMismatch("source algebra does not match the graded one")
    x_img = amb.elem({1: PairPoly.monomial(amb.k, 0)})
    y_img = amb.from_pair(PairPoly.monomial(0, amb.k)) * amb.x_plus()
    out = amb.zero()
    for d, f in e.terms.items():
        block = x_img**d if d >= 0 else y_img ** (-d)
        out = out + block * amb.from_z_poly(f)
    return out


def project_degree_zero(amb: AmbientAlgebra, e: AmbientElem) -> GwaElem:
    """Inverse of :func:`embed_degree_zero` on homogeneous degree-zero input.

    Each degree-zero basis monomial is a scalar multiple of the image of a
    unique basis monomial of B; the scalar is read off by embedding that
    monomial rather than from a closed formula.
    """
    gwa = amb.gwa()
    terms: dict[int, dict[int, Fraction]] = {}
    for (m, a, b), c in e.monomials().items():
        if amb.degree_of_key(m, a, b) != 0:
            raise ValueError(
                f"monomial (m={m}, zp^{a}, zm^{b}) has degree "
                f"{amb.degree_of_key(m, a, b)}, not 0"
            )
        zpow = b if m >= 0 else a
        image = embed_degree_zero(amb, gwa.monomial(m, UniPoly({zpow: 1})))
        (scale,) = image.monomials().values()
        terms.setdefault(m, {})
        terms[m][zpow] = terms[m].get(zpow, Fraction(0)) + c / scale
    return gwa.elem({m: UniPoly(cs) for m, cs in terms.items()})


def veronese_component(amb: AmbientAlgebra, n: int, e: AmbientElem) -> AmbientElem:
    """The part of e in degree n*k, i.e. degree n of the k-th Veronese algebra."""
    return e.degree_split().get(n * amb.k, amb.zero())
