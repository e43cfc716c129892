"""Exact scalars, sparse polynomials and the affine line automorphism.

Everything here is immutable after construction and every operation is a
pure function, so values are safe to share across threads.  The coefficient
field is the rationals, realized as :class:`fractions.Fraction` (always in
lowest terms, positive denominator, parses and prints as ``"a/b"``).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

Scalar = Fraction


def frac(x) -> Fraction:
    """Coerce an int, Fraction or string like ``"3/4"`` to an exact rational.

    Floats are rejected: the engines are exact end to end.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


def _format_terms(pieces: Iterable[tuple[Fraction, str]]) -> str:
    """Join (coefficient, monomial) pieces as ``"a - 3*b + c"``."""
    out: list[str] = []
    for coeff, mono in pieces:
        neg = coeff < 0
        mag = -coeff if neg else coeff
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not out:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f"{' - ' if neg else ' + '}{body}")
    return "".join(out) if out else "0"


class UniPoly:
    """Sparse polynomial in one variable ``z`` with rational coefficients.

    Stored as a degree -> coefficient map with no explicit zeros.  The zero
    polynomial has ``degree() is None``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[int, object] | None = None):
        data: dict[int, Fraction] = {}
        if coeffs:
            for d, c in coeffs.items():
                c = frac(c)
                if c:
                    d = int(d)
                    if d < 0:
                        raise ValueError("polynomial exponents must be >= 0")
                    data[d] = data.get(d, Fraction(0)) + c
                    if not data[d]:
                        del data[d]
        self.coeffs = data

    # -- constructors -------------------------------------------------
    @classmethod
    def zero(cls) -> "UniPoly":
        return cls()

    @classmethod
    def one(cls) -> "UniPoly":
        return cls({0: 1})

    @classmethod
    def gen(cls) -> "UniPoly":
        return cls({1: 1})

    @classmethod
    def constant(cls, c) -> "UniPoly":
        return cls({0: frac(c)})

    @classmethod
    def from_coeff_list(cls, coeffs: Iterable[object]) -> "UniPoly":
        """Build from ascending coefficients, ``[c0, c1, ...]``."""
        return cls({d: c for d, c in enumerate(coeffs)})

    # -- structure ----------------------------------------------------
    def degree(self) -> int | None:
        return max(self.coeffs) if self.coeffs else None

    def coeff(self, d: int) -> Fraction:
        return self.coeffs.get(d, Fraction(0))

    @property
    def constant_term(self) -> Fraction:
        return self.coeffs.get(0, Fraction(0))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.coeffs.items())))

    # -- arithmetic ---------------------------------------------------
    def __add__(self, other) -> "UniPoly":
        if not isinstance(other, UniPoly):
            return NotImplemented
        data = dict(self.coeffs)
        for d, c in other.coeffs.items():
            v = data.get(d, Fraction(0)) + c
            if v:
                data[d] = v
            else:
                data.pop(d, None)
        out = UniPoly()
        out.coeffs = data
        return out

    def __neg__(self) -> "UniPoly":
        out = UniPoly()
        out.coeffs = {d: -c for d, c in self.coeffs.items()}
        return out

    def __sub__(self, other) -> "UniPoly":
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> "UniPoly":
        if isinstance(other, UniPoly):
            data: dict[int, Fraction] = {}
            for d1, c1 in self.coeffs.items():
                for d2, c2 in other.coeffs.items():
                    d = d1 + d2
                    v = data.get(d, Fraction(0)) + c1 * c2
                    if v:
                        data[d] = v
                    else:
                        del data[d]
            out = UniPoly()
            out.coeffs = data
            return out
        c = frac(other)
        out = UniPoly()
        out.coeffs = {} if not c else {d: v * c for d, v in self.coeffs.items()}
        return out

    def __rmul__(self, other) -> "UniPoly":
        return self.__mul__(other)

    def __pow__(self, n: int) -> "UniPoly":
        if n < 0:
            raise ValueError("negative polynomial power")
        result = UniPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, x) -> Fraction:
        x = frac(x)
        return sum((c * x**d for d, c in self.coeffs.items()), Fraction(0))

    def compose_linear(self, a, b) -> "UniPoly":
        """Substitute ``z -> a*z + b`` (Horner over the dense degree range)."""
        deg = self.degree()
        if deg is None:
            return UniPoly.zero()
        lin = UniPoly({1: frac(a), 0: frac(b)})
        result = UniPoly.zero()
        for d in range(deg, -1, -1):
            result = result * lin
            c = self.coeffs.get(d)
            if c:
                result = result + UniPoly.constant(c)
        return result

    def shift_down(self, k: int) -> "UniPoly":
        """Exact division by ``z^k``; requires every exponent >= k."""
        if any(d < k for d in self.coeffs):
            raise ValueError(f"not divisible by z^{k}")
        return UniPoly({d - k: c for d, c in self.coeffs.items()})

    def shift_up(self, k: int) -> "UniPoly":
        return UniPoly({d + k: c for d, c in self.coeffs.items()})

    # -- output ---------------------------------------------------------
    def __str__(self) -> str:
        pieces = []
        for d in sorted(self.coeffs):
            mono = "" if d == 0 else ("z" if d == 1 else f"z^{d}")
            pieces.append((self.coeffs[d], mono))
        return _format_terms(pieces)

    def __repr__(self) -> str:
        return f"UniPoly('{self}')"


def poly_divmod(num: UniPoly, den: UniPoly) -> tuple[UniPoly, UniPoly]:
    """Long division over the rationals; returns (quotient, remainder)."""
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    quo: dict[int, Fraction] = {}
    rem = UniPoly(dict(num.coeffs))
    dd = den.degree()
    lead = den.coeffs[dd]
    while rem and rem.degree() >= dd:
        rd = rem.degree()
        c = rem.coeffs[rd] / lead
        quo[rd - dd] = c
        rem = rem - den * UniPoly({rd - dd: c})
    return UniPoly(quo), rem


@dataclass(frozen=True)
class AffineAuto:
    """The automorphism z -> q*z + r of the polynomial ring, with its powers."""

    q: Fraction
    r: Fraction

    def __post_init__(self):
        object.__setattr__(self, "q", frac(self.q))
        object.__setattr__(self, "r", frac(self.r))
        if self.q == 0:
            raise ValueError("automorphism needs q != 0")

    def power_image(self, j: int) -> tuple[Fraction, Fraction]:
        """Coefficients (a, b) with the j-th power sending z to a*z + b."""
        a = self.q**j
        if self.q == 1:
            b = j * self.r
        else:
            b = self.r * (a - 1) / (self.q - 1)
        return a, b

    def apply(self, j: int, f: UniPoly) -> UniPoly:
        return f.compose_linear(*self.power_image(j))


def apply_auto(auto: AffineAuto, j: int, f: UniPoly) -> UniPoly:
    """f composed with the j-th power of the automorphism (j may be negative)."""
    return auto.apply(j, f)


def auto_shift_product(p: UniPoly, auto: AffineAuto, n: int) -> UniPoly:
    """Product of the first n backward shifts of p.

    Term m of the product is p composed with the (-m)-th automorphism power,
    m = 0..n-1; the empty product (n = 0) is 1.  This is the polynomial value
    of y^n x^n in the generalized Weyl algebra.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    result = UniPoly.one()
    for m in range(n):
        result = result * auto.apply(-m, p)
    return result


def factor_zero_root(p: UniPoly) -> tuple[int, UniPoly]:
    """Split off the root at zero: p = z^k * cofactor with cofactor(0) != 0."""
    if not p:
        raise ValueError("undefined factorization: zero polynomial")
    k = min(p.coeffs)
    return k, p.shift_down(k)


def tail_decompose(pt: UniPoly) -> UniPoly:
    """The tail h of pt, defined by pt(z) = pt(0) - z*h(z)."""
    return UniPoly({d - 1: -c for d, c in pt.coeffs.items() if d >= 1})


class PairPoly:
    """Sparse polynomial in the commuting pair z+, z- over the rationals.

    Keys are (a, b) exponent pairs of z+^a z-^b, both >= 0.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[tuple[int, int], object] | None = None):
        data: dict[tuple[int, int], Fraction] = {}
        if coeffs:
            for (a, b), c in coeffs.items():
                c = frac(c)
                if c:
                    a, b = int(a), int(b)
                    if a < 0 or b < 0:
                        raise ValueError("exponents must be >= 0")
                    key = (a, b)
                    data[key] = data.get(key, Fraction(0)) + c
                    if not data[key]:
                        del data[key]
        self.coeffs = data

    @classmethod
    def zero(cls) -> "PairPoly":
        return cls()

    @classmethod
    def one(cls) -> "PairPoly":
        return cls({(0, 0): 1})

    @classmethod
    def monomial(cls, a: int, b: int, c=1) -> "PairPoly":
        return cls({(a, b): c})

    @classmethod
    def diagonal(cls, f: UniPoly) -> "PairPoly":
        """Image of a one-variable polynomial under z -> z+ z-."""
        return cls({(d, d): c for d, c in f.coeffs.items()})

    def as_diagonal(self) -> UniPoly:
        """Inverse of :meth:`diagonal`; fails on off-diagonal monomials."""
        for a, b in self.coeffs:
            if a != b:
                raise ValueError(f"monomial zp^{a}*zm^{b} is not a power of zp*zm")
        return UniPoly({a: c for (a, _), c in self.coeffs.items()})

    def twist(self, u, v) -> "PairPoly":
        """Rescale generators: z+ -> u*z+, z- -> v*z-."""
        u, v = frac(u), frac(v)
        return PairPoly({(a, b): c * u**a * v**b for (a, b), c in self.coeffs.items()})

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, PairPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.coeffs.items())))

    def __add__(self, other) -> "PairPoly":
        if not isinstance(other, PairPoly):
            return NotImplemented
        data = dict(self.coeffs)
        for k, c in other.coeffs.items():
            v = data.get(k, Fraction(0)) + c
            if v:
                data[k] = v
            else:
                data.pop(k, None)
        out = PairPoly()
        out.coeffs = data
        return out

    def __neg__(self) -> "PairPoly":
        out = PairPoly()
        out.coeffs = {k: -c for k, c in self.coeffs.items()}
        return out

    def __sub__(self, other) -> "PairPoly":
        if not isinstance(other, PairPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> "PairPoly":
        if isinstance(other, PairPoly):
            data: dict[tuple[int, int], Fraction] = {}
            for (a1, b1), c1 in self.coeffs.items():
                for (a2, b2), c2 in other.coeffs.items():
                    k = (a1 + a2, b1 + b2)
                    v = data.get(k, Fraction(0)) + c1 * c2
                    if v:
                        data[k] = v
                    else:
                        del data[k]
            out = PairPoly()
            out.coeffs = data
            return out
        c = frac(other)
        out = PairPoly()
        out.coeffs = {} if not c else {k: v * c for k, v in self.coeffs.items()}
        return out

    def __rmul__(self, other) -> "PairPoly":
        return self.__mul__(other)

    def __pow__(self, n: int) -> "PairPoly":
        if n < 0:
            raise ValueError("negative polynomial power")
        result = PairPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __str__(self) -> str:
        pieces = []
        for a, b in sorted(self.coeffs, key=lambda k: (k[0] + k[1], k[0], k[1])):
            parts = []
            if a:
                parts.append("zp" if a == 1 else f"zp^{a}")
            if b:
                parts.append("zm" if b == 1 else f"zm^{b}")
            pieces.append((self.coeffs[(a, b)], "*".join(parts)))
        return _format_terms(pieces)

    def __repr__(self) -> str:
        return f"PairPoly('{self}')"
