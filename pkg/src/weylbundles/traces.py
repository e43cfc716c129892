"""Cyclic traces on the generalized Weyl algebra and the index pairing.

For every root zeta of p (with 0 also a root and q not a root of unity,
i.e. q outside {0, 1, -1} over the rationals) there is a trace that kills
all x/y monomials and all constants and acts on powers of z through a
coefficient recursion in r.  Pairing it with the idempotent traces of
:mod:`weylbundles.connection` yields the integer -n at level n.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from random import Random
from typing import Optional

from .ambient import AmbientAlgebra
from .connection import idempotent_trace
from .gwa import AlgebraMismatch, GwaAlgebra, GwaElem, commutator_closed_form
from .poly import UniPoly, frac


def _check_q_admissible(q: Fraction):
    # a rational is a root of unity exactly when it is 1 or -1
    if q in (0, 1, -1):
        raise ValueError(f"q = {q} is zero or a root of unity")


class CyclicTrace:
    """The trace determined by (q, r) and a root zeta of p.

    ``on_poly`` is the linear functional on polynomials in z that vanishes
    on constants; ``__call__`` extends it to algebra elements by killing
    every term carrying an x or y power.  The coefficient cache is the one
    mutable piece of state in the package; confine an instance to a single
    thread or guard it.
    """

    def __init__(self, q, r, zeta):
        self.q = frac(q)
        self.r = frac(r)
        self.zeta = frac(zeta)
        _check_q_admissible(self.q)
        self._coeff_cache: dict[int, tuple[Fraction, ...]] = {}

    @classmethod
    def for_algebra(cls, alg: GwaAlgebra, zeta) -> "CyclicTrace":
        """Validating constructor: 0 and zeta must both be roots of p."""
        zeta = frac(zeta)
        if alg.p.constant_term != 0:
            raise ValueError("the defining polynomial must have 0 as a root")
        if alg.p(zeta) != 0:
            raise ValueError(f"zeta = {zeta} is not a root of the defining polynomial")
        return cls(alg.q, alg.r, zeta)

    def coeffs(self, n: int) -> tuple[Fraction, ...]:
        """Coefficient vector (c_1, ..., c_n) of the degree-n moment.

        c_n = 1 and, counting down from the top index,

            c_{n-k} = sum_{i=1..k} C(n,i) r^i q^{n-i}/(1-q^{n-i}) * c'_{n-k},

        where c' is the coefficient vector at degree n-i.  For r = 0 only
        c_n survives.
        """
        if n < 1:
            raise ValueError("moment coefficients are defined for n >= 1")
        cached = self._coeff_cache.get(n)
        if cached is not None:
            return cached
        q, r = self.q, self.r
        t: list[Optional[Fraction]] = [None] * (n + 1)
        t[n] = Fraction(1)
        for k in range(1, n):
            j = n - k
            total = Fraction(0)
            if r:
                for i in range(1, k + 1):
                    lower = self.coeffs(n - i)
                    total += comb(n, i) * r**i * q ** (n - i) / (1 - q ** (n - i)) * lower[j - 1]
            t[j] = total
        result = tuple(t[1:])
        self._coeff_cache[n] = result
        return result

    def on_poly(self, f: UniPoly) -> Fraction:
        """Value on a polynomial in z; constants contribute nothing."""
        total = Fraction(0)
        for d, c in f.coeffs.items():
            if d == 0:
                continue
            coeffs = self.coeffs(d)
            total += c * sum(
                (coeffs[i - 1] * self.zeta**i for i in range(1, d + 1)), Fraction(0)
            ) / (1 - self.q**d)
        return total

    def __call__(self, e: GwaElem) -> Fraction:
        if e.alg.q != self.q or e.alg.r != self.r:
            raise AlgebraMismatch("element algebra does not match the trace parameters")
        return self.on_poly(e.poly_part())

    def __repr__(self) -> str:
        return f"CyclicTrace(q={self.q}, r={self.r}, zeta={self.zeta})"


@dataclass
class TraceReport:
    """Outcome of the trace-property verification sweep."""

    passed: bool
    checks: list[dict] = field(default_factory=list)

    def failures(self) -> list[dict]:
        return [c for c in self.checks if not c["pass"]]


def _record(checks: list[dict], name: str, params: dict, expected, got) -> bool:
    ok = expected == got
    checks.append(
        {"check": name, "params": params, "expected": str(expected), "got": str(got), "pass": ok}
    )
    return ok


def verify_trace(trace: CyclicTrace, alg: GwaAlgebra, bound: int = 3,
                 pairs: int = 50, rng: Optional[Random] = None) -> TraceReport:
    """Check the trace property on the closed-form commutators and random pairs.

    Evaluates the trace on the commutator spanning set for all n, k, l up to
    the bound, then on a * b - b * a for random degree-bounded pairs.
    """
    from .sampling import random_gwa_elem

    rng = rng or Random(20260809)
    checks: list[dict] = []
    ok = True
    for n in range(bound + 1):
        for k in range(bound + 1):
            for l in range(bound + 1):
                got = trace(commutator_closed_form(alg, n, k, l))
                ok &= _record(
                    checks, "commutator-span-vanishes",
                    {"n": n, "k": k, "l": l}, Fraction(0), got,
                )
    for i in range(pairs):
        a = random_gwa_elem(alg, rng)
        b = random_gwa_elem(alg, rng)
        got = trace(a * b) - trace(b * a)
        ok &= _record(checks, "cyclicity", {"sample": i}, Fraction(0), got)
    return TraceReport(ok, checks)


def chern_pairing(amb: AmbientAlgebra, zeta, n: int,
                  max_level: int = 5) -> Fraction:
    """Trace of the level-n idempotent under the cyclic trace at zeta.

    zeta must be a nonzero root of p; the value is the integer index of the
    level-n module (equal to -n).
    """
    zeta = frac(zeta)
    if zeta == 0:
        raise ValueError("the pairing needs a nonzero root of p")
    if amb.p(zeta) != 0:
        raise ValueError(f"zeta = {zeta} is not a root of the defining polynomial")
    trace = CyclicTrace(amb.q, 0, zeta)
    return trace.on_poly(idempotent_trace(amb, n, max_level))
