"""Degree-bounded strong-grading analysis by exact linear algebra.

A grading is strong exactly when 1 is a sum of products of elements of
degree g and -g, for every g.  ``witness_search`` decides, within a size
bound, whether such a combination exists among basis monomials: it solves
the linear system "sum of chosen products = 1" over the rationals by exact
row reduction.  Absence within the bound is a semi-decision and is always
reported as such.

Views of a graded algebra can be re-graded along the quotient map to Z/kZ
or restricted to the subgroup kZ (the Veronese re-grading); witnesses for
the outer gradings of such a chain compose back into a witness for the
middle one.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .ambient import AmbientAlgebra

_ZERO = Fraction(0)


@dataclass(frozen=True)
class GradedView:
    """A graded algebra presented through enumeration and multiplication.

    ``modulus`` is None for an integer grading and k for grading classes
    mod k.  ``enumerate_basis(g, size)`` lists the basis monomials of
    degree g whose total generator exponent is at most the size bound,
    deterministically.  ``expand`` writes an element as a monomial-keyed
    coefficient dict and ``degree_of`` reads the degree of a homogeneous
    element.  ``degree_bound(size)`` bounds |degree| over monomials within
    the size bound (used to enumerate quotient classes).
    """

    modulus: Optional[int]
    one: object
    enumerate_basis: Callable[[int, int], list]
    multiply: Callable[[object, object], object]
    expand: Callable[[object], dict]
    degree_of: Callable[[object], int]
    degree_bound: Callable[[int], int]

    def unit_key(self):
        (key,) = self.expand(self.one)
        return key

    def coefficient_of_one(self, e) -> Fraction:
        return self.expand(e).get(self.unit_key(), _ZERO)

    def normalize_degree(self, g: int) -> int:
        return g if self.modulus is None else g % self.modulus

    def negate_degree(self, g: int) -> int:
        return -g if self.modulus is None else (-g) % self.modulus


@dataclass(frozen=True)
class Witness:
    """Pairs (a, b, c) of degree (g, -g) with sum of c * a * b equal to 1."""

    pairs: tuple[tuple[object, object, Fraction], ...]

    def check(self, view: GradedView) -> bool:
        """Re-verify the defining identity, independently of the solver."""
        total: dict = {}
        for a, b, c in self.pairs:
            for key, v in view.expand(view.multiply(a, b)).items():
                w = total.get(key, _ZERO) + c * v
                if w:
                    total[key] = w
                else:
                    del total[key]
        return total == view.expand(view.one)

    def to_json(self) -> list:
        return [[str(a), str(b), str(c)] for a, b, c in self.pairs]


def ambient_graded_view(amb: AmbientAlgebra) -> GradedView:
    """The integer grading of the two-variable ambient algebra."""

    def enumerate_basis(g: int, size: int) -> list:
        out = []
        for m in range(-size, size + 1):
            for a in range(0, size - abs(m) + 1):
                b = a - g - m * amb.k
                if b >= 0 and abs(m) + a + b <= size:
                    out.append(amb.basis_elem(m, a, b))
        return out

    return GradedView(
        modulus=None,
        one=amb.one(),
        enumerate_basis=enumerate_basis,
        multiply=lambda a, b: a * b,
        expand=lambda e: e.monomials(),
        degree_of=lambda e: e.degree(),
        degree_bound=lambda size: size * amb.k,
    )


def induced_quotient_view(view: GradedView, k: int) -> GradedView:
    """Re-grade an integer-graded view by degree classes mod k."""
    if view.modulus is not None:
        raise ValueError("only integer gradings can be reduced mod k")
    if k < 1:
        raise ValueError("k must be >= 1")

    def enumerate_basis(h: int, size: int) -> list:
        bound = view.degree_bound(size)
        out = []
        for g in range(-bound, bound + 1):
            if g % k == h % k:
                out.extend(view.enumerate_basis(g, size))
        return out

    return GradedView(
        modulus=k,
        one=view.one,
        enumerate_basis=enumerate_basis,
        multiply=view.multiply,
        expand=view.expand,
        degree_of=lambda e: view.degree_of(e) % k,
        degree_bound=view.degree_bound,
    )


def veronese_view(view: GradedView, k: int) -> GradedView:
    """Restrict an integer-graded view to degrees divisible by k, re-indexed."""
    if view.modulus is not None:
        raise ValueError("only integer gradings have Veronese subalgebras")
    if k < 1:
        raise ValueError("k must be >= 1")

    def degree_of(e) -> int:
        d = view.degree_of(e)
        if d % k:
            raise ValueError(f"degree {d} is not divisible by {k}")
        return d // k

    return GradedView(
        modulus=None,
        one=view.one,
        enumerate_basis=lambda n, size: view.enumerate_basis(n * k, size),
        multiply=view.multiply,
        expand=view.expand,
        degree_of=degree_of,
        degree_bound=lambda size: view.degree_bound(size) // k,
    )


def _combine_into_unit(products: list[dict], unit_key) -> Optional[dict[int, Fraction]]:
    """Exact coefficients writing the unit vector as a combination of products.

    Incremental row reduction over the rationals with sparse rows; each
    basis row remembers the combination of input vectors that produced it.
    If no product touches the unit monomial at all, the unit coordinate of
    the system reads 0 = 1 and there is nothing to solve.
    """
    if not any(unit_key in p for p in products):
        return None

    basis: dict = {}  # pivot key -> (row, combination), row normalized at pivot

    def reduce(row: dict, combo: dict):
        row = dict(row)
        combo = dict(combo)
        while row:
            pivot = max(row)
            hit = basis.get(pivot)
            if hit is None:
                return row, combo, pivot
            brow, bcombo = hit
            c = row[pivot]
            for key, v in brow.items():
                w = row.get(key, _ZERO) - c * v
                if w:
                    row[key] = w
                else:
                    row.pop(key, None)
            for key, v in bcombo.items():
                w = combo.get(key, _ZERO) - c * v
                if w:
                    combo[key] = w
                else:
                    combo.pop(key, None)
        return row, combo, None

    for idx, vec in enumerate(products):
        row, combo, pivot = reduce(vec, {idx: Fraction(1)})
        if pivot is not None:
            lead = row[pivot]
            basis[pivot] = (
                {key: v / lead for key, v in row.items()},
                {key: v / lead for key, v in combo.items()},
            )
    residual, combo, pivot = reduce({unit_key: Fraction(1)}, {})
    if pivot is not None:
        return None
    return {idx: -v for idx, v in combo.items() if v}


def witness_search(view: GradedView, g: int, size_bound: int) -> Optional[Witness]:
    """Search for a strong-grading witness in degree g within the size bound.

    Enumerates basis monomials of degree g and of the inverse degree, forms
    all pairwise products and solves for a rational combination equal to 1.
    Returns None when no combination exists among monomials of the given
    size; that is not a proof that none exists at larger sizes.
    """
    if size_bound < 1:
        raise ValueError("size bound must be >= 1")
    g = view.normalize_degree(g)
    if g == 0:
        return Witness(((view.one, view.one, Fraction(1)),))
    left = view.enumerate_basis(g, size_bound)
    right = view.enumerate_basis(view.negate_degree(g), size_bound)
    if not left or not right:
        return None
    index_pairs = [(a, b) for a in left for b in right]
    products = [view.expand(view.multiply(a, b)) for a, b in index_pairs]
    combo = _combine_into_unit(products, view.unit_key())
    if combo is None:
        return None
    pairs = tuple(
        (index_pairs[idx][0], index_pairs[idx][1], c) for idx, c in sorted(combo.items())
    )
    return Witness(pairs)


class CompositionError(ValueError):
    """A required witness for the composition is missing."""


def compose_witnesses(quotient_witnesses: dict[int, Witness],
                      veronese_witnesses: dict[int, Witness],
                      g: int, *, view: GradedView, k: int) -> Witness:
    """Assemble a degree-g witness from witnesses of the outer gradings.

    ``quotient_witnesses`` is keyed by classes mod k, ``veronese_witnesses``
    by subgroup degrees n (meaning degree k*n in ``view``).  Every pair
    (a, b) of the class witness is corrected by a subgroup witness in the
    degree that pulls a back to degree g; the corrected products still sum
    to 1 because each correction sums to 1 in the middle.
    """
    if view.modulus is not None:
        raise ValueError("composition needs the integer-graded base view")
    if g == 0:
        return Witness(((view.one, view.one, Fraction(1)),))
    class_witness = quotient_witnesses.get(g % k)
    if class_witness is None:
        raise CompositionError(f"no quotient witness for class {g % k} (mod {k})")
    trivial = Witness(((view.one, view.one, Fraction(1)),))
    pairs = []
    for a, b, c in class_witness.pairs:
        offset = view.degree_of(a) - g
        if offset % k:
            raise CompositionError(
                f"witness element of degree {view.degree_of(a)} is not in class {g % k}"
            )
        corrector = -(offset // k)
        sub = trivial if corrector == 0 else veronese_witnesses.get(corrector)
        if sub is None:
            raise CompositionError(f"no subgroup witness for degree {corrector}")
        for aa, bb, cc in sub.pairs:
            pairs.append((view.multiply(a, aa), view.multiply(bb, b), c * cc))
    return Witness(tuple(pairs))
