"""Strong-connection tensors, line-bundle idempotents and their traces.

A strongly graded algebra admits tensors in degree (-1, +1) and (+1, -1)
whose multiplication evaluates to 1; iterating them produces a tensor for
every level n, the matrix of leg products is an idempotent over the
degree-zero part, and its trace is a polynomial in z whose pairing with the
cyclic trace computes an integer index.

Degrees here are counted in Veronese units: level n means ambient degree
n*k on the right legs and -n*k on the left legs.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .ambient import AmbientAlgebra, AmbientElem, project_degree_zero
from .gwa import AlgebraMismatch, GwaElem
from .poly import PairPoly, UniPoly, poly_divmod

DEFAULT_LEVEL_CAP = 5


class LevelCapExceeded(ValueError):
    """Raised when a connection level would need more than 2^cap tensor pairs."""


@dataclass(frozen=True)
class Tensor2:
    """A formal sum of left (x) right leg pairs with homogeneous legs.

    ``bidegree`` records the Veronese degrees of the (left, right) legs.
    Equality is structural on the canonical form, which expands both legs
    into basis monomials and merges equal pairs.
    """

    alg: AmbientAlgebra
    pairs: tuple[tuple[AmbientElem, AmbientElem], ...]
    bidegree: tuple[int, int]

    def __post_init__(self):
        kept = []
        dl, dr = self.bidegree
        k = self.alg.k
        for left, right in self.pairs:
            if left.is_zero() or right.is_zero():
                continue
            if not left.is_homogeneous(dl * k) or not right.is_homogeneous(dr * k):
                raise ValueError("tensor legs must be homogeneous of the recorded degrees")
            kept.append((left, right))
        object.__setattr__(self, "pairs", tuple(kept))

    def canonical(self) -> dict:
        """Monomial-level expansion keyed by (left monomial, right monomial)."""
        out: dict[tuple, Fraction] = {}
        for left, right in self.pairs:
            for ml, cl in left.monomials().items():
                for mr, cr in right.monomials().items():
                    key = (ml, mr)
                    v = out.get(key, Fraction(0)) + cl * cr
                    if v:
                        out[key] = v
                    else:
                        del out[key]
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, Tensor2):
            return self.alg == other.alg and self.canonical() == other.canonical()
        return NotImplemented

    def multiply_out(self) -> AmbientElem:
        """The image under multiplication, sum of left * right."""
        out = self.alg.zero()
        for left, right in self.pairs:
            out = out + left * right
        return out

    def __str__(self) -> str:
        if not self.pairs:
            return "0"
        return " + ".join(f"[{l}] (x) [{r}]" for l, r in self.pairs)


def lowering_connection(amb: AmbientAlgebra) -> Tensor2:
    """The level-one connection tensor with legs in degrees (-1, +1).

    With p = z^k pt, pt(z) = pt(0) - z h(z) and q = q_plus q_minus:

        (1/pt(0)^k) [ q^k h(qz)^k z-^k  (x)  z+^k
                      + x-  (x)  (sum_i z^i h(z)^i pt(0)^{k-1-i}) x+ ]

    where the geometric sum runs over i = 0..k-1 and z stands for z+ z-.
    """
    k = amb.k
    pt0 = amb.p_reduced.constant_term
    scale = pt0 ** (-k)
    h_q = amb.p_tail.compose_linear(amb.q, 0)
    left1 = amb.from_pair(
        PairPoly.diagonal(h_q**k * (amb.q**k * scale)) * PairPoly.monomial(0, k)
    )
    right1 = amb.basis_elem(0, k, 0)
    geo = UniPoly.zero()
    zh = UniPoly.gen() * amb.p_tail
    for i in range(k):
        geo = geo + zh**i * pt0 ** (k - 1 - i)
    left2 = amb.x_minus() * scale
    right2 = amb.from_z_poly(geo) * amb.x_plus()
    return Tensor2(amb, ((left1, right1), (left2, right2)), (-1, 1))


def raising_connection(amb: AmbientAlgebra) -> Tensor2:
    """The level-one connection tensor with legs in degrees (+1, -1).

        (1/pt(0)^k) [ h(z)^k z+^k  (x)  z-^k
                      + x+  (x)  Q(z) x- ]

    with Q the exact quotient (pt(0)^k - q^k z^k h(qz)^k) / pt(qz).  The
    division being exact is a consequence of pt(z) = pt(0) - z h(z); a
    nonzero remainder would indicate a bug.
    """
    k = amb.k
    pt0 = amb.p_reduced.constant_term
    scale = pt0 ** (-k)
    h_q = amb.p_tail.compose_linear(amb.q, 0)
    numerator = UniPoly.constant(pt0**k) - h_q**k * UniPoly({k: amb.q**k})
    quot, rem = poly_divmod(numerator, amb.p_reduced.compose_linear(amb.q, 0))
    if rem:
        raise RuntimeError("internal error: connection quotient is not exact")
    left1 = amb.from_pair(PairPoly.diagonal(amb.p_tail**k * scale) * PairPoly.monomial(k, 0))
    right1 = amb.basis_elem(0, 0, k)
    left2 = amb.x_plus() * scale
    right2 = amb.from_z_poly(quot) * amb.x_minus()
    return Tensor2(amb, ((left1, right1), (left2, right2)), (1, -1))


def _check_level(n: int, max_level: int):
    if abs(n) > max_level:
        raise LevelCapExceeded(
            f"level {n} needs 2^{abs(n)} tensor pairs; raise max_level "
            f"(currently {max_level}) to go beyond"
        )


def connection_power(amb: AmbientAlgebra, n: int,
                     max_level: int = DEFAULT_LEVEL_CAP) -> Tensor2:
    """The level-n tensor built by wrapping the level-one legs outside.

    Level 0 is 1 (x) 1; positive levels wrap the lowering tensor, negative
    levels the raising one.  The pair count doubles with each level.
    """
    _check_level(n, max_level)
    if n == 0:
        return Tensor2(amb, ((amb.one(), amb.one()),), (0, 0))
    step = lowering_connection(amb) if n > 0 else raising_connection(amb)
    inner = connection_power(amb, n - 1 if n > 0 else n + 1, max_level)
    pairs = tuple(
        (wl * left, right * wr)
        for wl, wr in step.pairs
        for left, right in inner.pairs
    )
    return Tensor2(amb, pairs, (-n, n))


def connection_power_alt(amb: AmbientAlgebra, n: int,
                         max_level: int = DEFAULT_LEVEL_CAP) -> Tensor2:
    """The level-n tensor built by wrapping the level-one legs inside.

    Equal to :func:`connection_power` as a canonical tensor; computing both
    and comparing is a consistency check on the recursion.
    """
    _check_level(n, max_level)
    if n == 0:
        return Tensor2(amb, ((amb.one(), amb.one()),), (0, 0))
    step = lowering_connection(amb) if n > 0 else raising_connection(amb)
    inner = connection_power_alt(amb, n - 1 if n > 0 else n + 1, max_level)
    pairs = tuple(
        (left * wl, wr * right)
        for left, right in inner.pairs
        for wl, wr in step.pairs
    )
    return Tensor2(amb, pairs, (-n, n))


def check_connection(t: Tensor2) -> bool:
    """True iff the sum of leg products is exactly 1."""
    return t.multiply_out() == t.alg.one()


@dataclass(frozen=True)
class IdemMatrix:
    """Matrix of right-leg times left-leg products over the degree-zero part."""

    n: int
    entries: tuple[tuple[GwaElem, ...], ...]

    @property
    def size(self) -> int:
        return len(self.entries)

    def matmul(self, other: "IdemMatrix") -> "IdemMatrix":
        n = self.size
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = self.entries[i][0] * other.entries[0][j]
                for l in range(1, n):
                    acc = acc + self.entries[i][l] * other.entries[l][j]
                row.append(acc)
            rows.append(tuple(row))
        return IdemMatrix(self.n, tuple(rows))

    def is_idempotent(self) -> bool:
        return self.matmul(self).entries == self.entries

    def trace(self) -> GwaElem:
        acc = self.entries[0][0]
        for i in range(1, self.size):
            acc = acc + self.entries[i][i]
        return acc

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "size": self.size,
            "entries": [[str(e) for e in row] for row in self.entries],
        }


def idempotent(amb: AmbientAlgebra, n: int,
               max_level: int = DEFAULT_LEVEL_CAP) -> IdemMatrix:
    """The idempotent presenting the level-n module over the degree-zero part.

    Entry (i, j) is the projection of right leg i times left leg j; the
    connection identity at level n makes the matrix square to itself.
    """
    t = connection_power(amb, n, max_level)
    rows = []
    for _, right_i in t.pairs:
        row = tuple(
            project_degree_zero(amb, right_i * left_j) for left_j, _ in t.pairs
        )
        rows.append(row)
    return IdemMatrix(n, tuple(rows))


def idempotent_trace(amb: AmbientAlgebra, n: int,
                     max_level: int = DEFAULT_LEVEL_CAP) -> UniPoly:
    """Trace of the level-n idempotent as a polynomial in z = z+ z-.

    Computed as the sum of right-leg times left-leg diagonal products; the
    result lies in the base ring and is diagonal in z+, z-, anything else
    indicates a bug.
    """
    t = connection_power(amb, n, max_level)
    acc = amb.zero()
    for left, right in t.pairs:
        acc = acc + right * left
    if not set(acc.terms) <= {0}:
        raise RuntimeError("internal error: idempotent trace has generator terms")
    return acc.terms.get(0, PairPoly.zero()).as_diagonal()


def idempotent_trace_recursive(amb: AmbientAlgebra, n: int) -> UniPoly:
    """The trace polynomial by pure polynomial recursion, levels n >= 1.

    With pt(0)^k =: c, h the tail of pt and q the grading parameter:

        e_1(z)    = (q^k h(qz)^k - h(z)^k) z^k / c + 1,
        e_{m+1}(z) = ((c - h(z)^k z^k) e_m(z/q)
                      - (c - q^k h(qz)^k z^k) e_m(z)) / c + e_m(z).

    Independent of the tensor machinery; serves as its oracle.
    """
    if n < 1:
        raise ValueError("recursive trace is defined for n >= 1")
    k = amb.k
    c = amb.p_reduced.constant_term**k
    h = amb.p_tail
    h_q = h.compose_linear(amb.q, 0)
    zk = UniPoly({k: 1})
    e = (h_q**k * amb.q**k - h**k) * zk * (1 / c) + UniPoly.one()
    low = UniPoly.constant(c) - h**k * zk
    high = UniPoly.constant(c) - h_q**k * zk * amb.q**k
    for _ in range(n - 1):
        e = (low * e.compose_linear(1 / amb.q, 0) - high * e) * (1 / c) + e
    return e


def module_row(amb: AmbientAlgebra, n: int, a: AmbientElem,
               max_level: int = DEFAULT_LEVEL_CAP) -> list[GwaElem]:
    """Row vector presenting a level-n homogeneous element over B.

    Component j is the sum over i of (a * left_i) * E_{ij}; right-multiplying
    the row by the idempotent leaves it fixed.
    """
    if a.alg != amb:
        raise AlgebraMismatch("element does not live in the graded algebra")
    deg = a.degree()
    if deg is None:
        deg = n * amb.k
    if deg != n * amb.k:
        raise ValueError(f"element has degree {deg}, expected {n * amb.k}")
    t = connection_power(amb, n, max_level)
    e_mat = idempotent(amb, n, max_level)
    coeffs = [project_degree_zero(amb, a * left) for left, _ in t.pairs]
    row = []
    for j in range(e_mat.size):
        acc = coeffs[0] * e_mat.entries[0][j]
        for i in range(1, e_mat.size):
            acc = acc + coeffs[i] * e_mat.entries[i][j]
        row.append(acc)
    return row


def unit_in_degree(amb: AmbientAlgebra, n: int
                   ) -> Optional[tuple[AmbientElem, AmbientElem]]:
    """A verified unit of Veronese degree n, when p has no nonzero root.

    In that case pt is a nonzero constant c, so x+ x- = x- x+ = c and
    x+^n is a unit with inverse x-^n / c^n.  Returns (unit, inverse) or
    None when pt is not constant; absence of a unit is not decided here.
    """
    if n == 0:
        return amb.one(), amb.one()
    if amb.p_reduced.degree() != 0:
        return None
    c = amb.p_reduced.constant_term
    u = amb.x_plus() ** n if n > 0 else amb.x_minus() ** (-n)
    u_inv = (amb.x_minus() ** n if n > 0 else amb.x_plus() ** (-n)) * c ** (-abs(n))
    if u * u_inv != amb.one() or u_inv * u != amb.one():
        raise RuntimeError("internal error: constructed unit failed verification")
    return u, u_inv
