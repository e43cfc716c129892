"""The full verification sweep behind ``verify-all`` and the acceptance tests.

Each criterion function returns a list of check records; a record is a dict
with "check", "params", "expected", "got" and "pass" keys so the CLI can
emit them as JSON lines.  Everything is exact except the floating-point
representation residuals of the last criterion.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from random import Random

from .ambient import AmbientAlgebra, embed_degree_zero, project_degree_zero
from .config import Config, preset
from .connection import (
    check_connection,
    connection_power,
    connection_power_alt,
    idempotent,
    idempotent_trace,
    idempotent_trace_recursive,
    unit_in_degree,
)
from .gwa import GwaAlgebra, GwaElem
from .grading import (
    ambient_graded_view,
    compose_witnesses,
    induced_quotient_view,
    veronese_view,
    witness_search,
)
from .poly import UniPoly, auto_shift_product
from .sampling import (
    random_gwa_elem,
    random_homogeneous_amb,
    random_unipoly,
)
from .traces import CyclicTrace, chern_pairing, verify_trace

PRESETS = ("sphere", "lens(2,1,2)", "kleinian-demo")
LEVEL_RANGE = range(-4, 5)


def _check(checks: list, name: str, params: dict, expected, got) -> None:
    checks.append({
        "check": name,
        "params": params,
        "expected": str(expected),
        "got": str(got),
        "pass": expected == got,
    })


def _record_bool(checks: list, name: str, params: dict, ok: bool, detail: str = "") -> None:
    checks.append({
        "check": name,
        "params": params,
        "expected": "true",
        "got": "true" if ok else (detail or "false"),
        "pass": ok,
    })


# -- 1 ----------------------------------------------------------------
def criterion_index_pairing() -> list[dict]:
    """Pairing of the cyclic trace with every level idempotent equals -n."""
    checks: list[dict] = []
    for name in PRESETS:
        cfg = preset(name)
        amb = cfg.ambient_algebra()
        for zeta in cfg.nonzero_zetas():
            for n in LEVEL_RANGE:
                got = chern_pairing(amb, zeta, n)
                _check(checks, "index-pairing",
                       {"preset": name, "zeta": str(zeta), "n": n},
                       Fraction(-n), got)
    return checks


# -- 2 ----------------------------------------------------------------
def criterion_strong_connection() -> list[dict]:
    """Every connection level multiplies out to 1; both recursions agree."""
    checks: list[dict] = []
    for name in PRESETS:
        amb = preset(name).ambient_algebra()
        for n in LEVEL_RANGE:
            t = connection_power(amb, n)
            _record_bool(checks, "connection-evaluates-to-one",
                         {"preset": name, "n": n}, check_connection(t))
            _record_bool(checks, "connection-recursions-agree",
                         {"preset": name, "n": n},
                         t == connection_power_alt(amb, n))
    return checks


# -- 3 ----------------------------------------------------------------
def criterion_idempotency() -> list[dict]:
    """E(n) squares to itself entry-wise; entries project to degree zero."""
    checks: list[dict] = []
    for name in PRESETS:
        amb = preset(name).ambient_algebra()
        for n in LEVEL_RANGE:
            mat = idempotent(amb, n)  # projection of every entry happens here
            _check(checks, "idempotent-size", {"preset": name, "n": n},
                   2 ** abs(n), mat.size)
            _record_bool(checks, "idempotent-squares-to-itself",
                         {"preset": name, "n": n}, mat.is_idempotent())
    return checks


# -- 4 ----------------------------------------------------------------
def criterion_trace_oracle() -> list[dict]:
    """Tensor-built idempotent traces match the polynomial recursion."""
    checks: list[dict] = []
    for name in PRESETS:
        amb = preset(name).ambient_algebra()
        for n in range(1, 5):
            direct = idempotent_trace(amb, n)
            recursive = idempotent_trace_recursive(amb, n)
            _check(checks, "idempotent-trace-oracle", {"preset": name, "n": n},
                   recursive, direct)
            _check(checks, "idempotent-trace-at-zero", {"preset": name, "n": n},
                   Fraction(1), direct(0))
    return checks


# -- 5 ----------------------------------------------------------------
def criterion_trace_axioms() -> list[dict]:
    """Shift identity, commutator vanishing and cyclicity of the trace."""
    checks: list[dict] = []
    rng = Random(51)
    p = preset("sphere").p
    for r in (Fraction(0), Fraction(1, 2)):
        alg = GwaAlgebra(p, Fraction(4), r)
        trace = CyclicTrace.for_algebra(alg, 1)
        failures = 0
        for _ in range(100):
            f = random_unipoly(rng, max_deg=8, terms=5)
            shifted = f.compose_linear(alg.q, alg.r)
            if trace.on_poly(f) - trace.on_poly(shifted) != f(trace.zeta) - f(0):
                failures += 1
        _check(checks, "shift-identity-failures", {"q": "4", "r": str(r), "samples": 100},
               0, failures)
        report = verify_trace(trace, alg, bound=3, pairs=100, rng=Random(52))
        _record_bool(checks, "trace-verification", {"q": "4", "r": str(r)},
                     report.passed, detail=f"{len(report.failures())} failures")
    return checks


# -- 6 ----------------------------------------------------------------
_WORD_LETTERS = ("x", "y", "z")


def _poly_words(f: UniPoly) -> list[tuple[tuple[str, ...], Fraction]]:
    return [(("z",) * d, c) for d, c in f.coeffs.items()]


def _free_reduce(alg: GwaAlgebra, word: tuple[str, ...]) -> GwaElem:
    """Normal form by naive leftmost single-relation rewriting.

    Rules, each a single defining relation applied to one adjacent pair:
    y x -> p(z), x y -> p(qz + r), z x -> x (z - r)/q, z y -> y (qz + r).
    Independent of the product engine.
    """
    sigma_p = alg.sigma.apply(1, alg.p)
    rules: dict[tuple[str, str], list[tuple[tuple[str, ...], Fraction]]] = {
        ("y", "x"): _poly_words(alg.p),
        ("x", "y"): _poly_words(sigma_p),
        ("z", "x"): [(("x", "z"), 1 / alg.q), (("x",), -alg.r / alg.q)],
        ("z", "y"): [(("y", "z"), alg.q), (("y",), alg.r)],
    }
    result = alg.zero()
    stack: list[tuple[tuple[str, ...], Fraction]] = [(word, Fraction(1))]
    while stack:
        w, c = stack.pop()
        for i in range(len(w) - 1):
            replacement = rules.get((w[i], w[i + 1]))
            if replacement is not None:
                for body, factor in replacement:
                    if factor:
                        stack.append((w[:i] + body + w[i + 2:], c * factor))
                break
        else:
            d = w.count("x") - w.count("y")
            result = result + alg.monomial(d, UniPoly({w.count("z"): c}))
    return result


def criterion_gwa_engine() -> list[dict]:
    """Pair products, associativity and the free-word rewriting oracle."""
    checks: list[dict] = []
    algebras = [
        ("sphere", preset("sphere").gwa_algebra()),
        ("shifted", GwaAlgebra(preset("sphere").p, Fraction(3), Fraction(1, 2))),
    ]
    for label, alg in algebras:
        for n in range(5):
            s = auto_shift_product(alg.p, alg.sigma, n)
            _check(checks, "ynxn-product", {"algebra": label, "n": n},
                   alg.from_poly(s), alg.y() ** n * alg.x() ** n)
            _check(checks, "xnyn-product", {"algebra": label, "n": n},
                   alg.from_poly(alg.sigma.apply(n, s)), alg.x() ** n * alg.y() ** n)
    rng = Random(53)
    failures = 0
    for i in range(100):
        alg = algebras[i % 2][1]
        a, b, c = (random_gwa_elem(alg, rng) for _ in range(3))
        if (a * b) * c != a * (b * c):
            failures += 1
    _check(checks, "associativity-failures", {"samples": 100}, 0, failures)
    for label, alg in algebras:
        mismatches = 0
        total = 0
        for length in range(1, 6):
            for word in itertools.product(_WORD_LETTERS, repeat=length):
                total += 1
                engine = alg.one()
                for letter in word:
                    engine = engine * {"x": alg.x(), "y": alg.y(), "z": alg.z()}[letter]
                if engine != _free_reduce(alg, word):
                    mismatches += 1
        _check(checks, "free-reduction-mismatches",
               {"algebra": label, "words": total}, 0, mismatches)
    return checks


# -- 7 ----------------------------------------------------------------
def criterion_degree_zero_part() -> list[dict]:
    """The degree-zero embedding is a homomorphism with two-sided inverse."""
    checks: list[dict] = []
    rng = Random(54)
    for name in PRESETS:
        cfg = preset(name)
        amb = cfg.ambient_algebra()
        gwa = amb.gwa()
        x, y, z = (embed_degree_zero(amb, e) for e in (gwa.x(), gwa.y(), gwa.z()))
        sigma = gwa.sigma
        for label, lhs, rhs in (
            ("yx=p", y * x, embed_degree_zero(amb, gwa.from_poly(gwa.p))),
            ("xy=p(qz+r)", x * y,
             embed_degree_zero(amb, gwa.from_poly(sigma.apply(1, gwa.p)))),
            ("xz=(qz+r)x", x * z,
             embed_degree_zero(amb, gwa.from_poly(sigma.apply(1, UniPoly.gen()))) * x),
            ("yz=inv(q)(z-r)y", y * z,
             embed_degree_zero(amb, gwa.from_poly(sigma.apply(-1, UniPoly.gen()))) * y),
        ):
            _check(checks, "embedding-respects-relation",
                   {"preset": name, "relation": label}, rhs, lhs)
        hom_failures = 0
        round_failures = 0
        for _ in range(34):
            a = random_gwa_elem(gwa, rng)
            b = random_gwa_elem(gwa, rng)
            if embed_degree_zero(amb, a * b) != embed_degree_zero(amb, a) * embed_degree_zero(amb, b):
                hom_failures += 1
            if project_degree_zero(amb, embed_degree_zero(amb, a)) != a:
                round_failures += 1
            h = random_homogeneous_amb(amb, rng, 0)
            if embed_degree_zero(amb, project_degree_zero(amb, h)) != h:
                round_failures += 1
        _check(checks, "embedding-homomorphism-failures",
               {"preset": name, "samples": 34}, 0, hom_failures)
        _check(checks, "embedding-roundtrip-failures",
               {"preset": name, "samples": 68}, 0, round_failures)
    return checks


# -- 8 ----------------------------------------------------------------
def _chain_roundtrip(checks: list, name: str, amb: AmbientAlgebra, g: int) -> None:
    base = veronese_view(ambient_graded_view(amb), amb.k)
    quotient = induced_quotient_view(base, 2)
    halved = veronese_view(base, 2)
    class_witness = witness_search(quotient, g % 2, 4)
    ok = class_witness is not None
    detail = "no class witness"
    if ok:
        correctors = sorted(
            {-(base.degree_of(a) - g) // 2 for a, _, _ in class_witness.pairs} - {0}
        )
        sub = {}
        for c in correctors:
            w = witness_search(halved, c, 8)
            if w is None:
                ok = False
                detail = f"no subgroup witness in degree {c}"
                break
            sub[c] = w
        if ok:
            composed = compose_witnesses(
                {g % 2: class_witness}, sub, g, view=base, k=2
            )
            degrees_ok = all(base.degree_of(a) == g for a, _, _ in composed.pairs)
            ok = composed.check(base) and degrees_ok
            detail = "product or degree check failed"
    _record_bool(checks, "witness-composition", {"preset": name, "g": g}, ok, detail)


def criterion_grading_lab() -> list[dict]:
    """Witness searches: found where the grading is strong, absent where not."""
    checks: list[dict] = []
    for name in PRESETS:
        amb = preset(name).ambient_algebra()
        base = ambient_graded_view(amb)
        strong = veronese_view(base, amb.k)
        for g in (1, -1):
            w = witness_search(strong, g, 4)
            _record_bool(checks, "veronese-witness-found",
                         {"preset": name, "g": g, "bound": 4},
                         w is not None and w.check(strong),
                         "no witness within bound 4")
        if amb.k == 2:
            for g in (1, -1):
                _record_bool(checks, "ambient-witness-absent",
                             {"preset": name, "g": g, "bound": 10},
                             witness_search(base, g, 10) is None,
                             "unexpected witness")
            _record_bool(checks, "quotient-witness-absent",
                         {"preset": name, "class": 1, "bound": 8},
                         witness_search(induced_quotient_view(base, amb.k), 1, 8) is None,
                         "unexpected witness")
        for g in (1, 2):
            _chain_roundtrip(checks, name, amb, g)
    return checks


# -- 9 ----------------------------------------------------------------
def criterion_degenerate_case() -> list[dict]:
    """Only powers of z as defining polynomial: free modules, no pairing."""
    checks: list[dict] = []
    cfg = Config(name="degenerate", p=UniPoly({2: 1}), q_plus=2, q_minus=2)
    amb = cfg.ambient_algebra()
    for n in range(-3, 4):
        pair = unit_in_degree(amb, n)  # self-verifies the inverse
        _record_bool(checks, "unit-in-degree", {"n": n}, pair is not None,
                     "no unit returned")
    _check(checks, "no-admissible-zeta", {"p": str(cfg.p)}, 0, len(cfg.nonzero_zetas()))
    for zeta in (1, -1, 2):
        try:
            CyclicTrace.for_algebra(cfg.gwa_algebra(), zeta)
            rejected = False
        except ValueError:
            rejected = True
        _record_bool(checks, "nonroot-zeta-rejected", {"zeta": zeta}, rejected,
                     "trace accepted a non-root")
    return checks


# -- 10 ---------------------------------------------------------------
def criterion_representations() -> list[dict]:
    """Matrix and scalar representation residuals at their tolerances."""
    from .numrep import one_dim_rep, one_dim_residuals, relation_residuals, truncated_rep

    checks: list[dict] = []
    p = preset("sphere").p
    alg = GwaAlgebra(p, Fraction(1, 4), Fraction(0))
    rep = truncated_rep(alg, 1, 16)
    report = relation_residuals(rep)
    for relation, value in report["relations"].items():
        _record_bool(checks, "truncated-rep-residual",
                     {"relation": relation, "dim": 16, "q": "1/4", "zeta": "1"},
                     value < 1e-10, f"residual {value:.3e}")
    sphere_alg = preset("sphere").gwa_algebra()
    for lam in (1, -1):
        scalar = one_dim_rep(sphere_alg, lam)
        for relation, value in one_dim_residuals(sphere_alg, scalar).items():
            _record_bool(checks, "one-dim-rep-residual",
                         {"relation": relation, "lam": lam},
                         value < 1e-12, f"residual {value:.3e}")
    return checks


CRITERIA: tuple[tuple[str, str, object], ...] = (
    ("1-index-pairing", "pairing with every level idempotent equals -n", criterion_index_pairing),
    ("2-strong-connection", "connection tensors multiply to 1, recursions agree", criterion_strong_connection),
    ("3-idempotency", "E(n)^2 = E(n) with degree-zero entries", criterion_idempotency),
    ("4-trace-oracle", "idempotent traces match the polynomial recursion", criterion_trace_oracle),
    ("5-trace-axioms", "shift identity, commutator vanishing, cyclicity", criterion_trace_axioms),
    ("6-gwa-engine", "pair products, associativity, free-word oracle", criterion_gwa_engine),
    ("7-degree-zero-part", "embedding and projection identify the degree-zero part", criterion_degree_zero_part),
    ("8-grading-lab", "witness searches and composition across the chain", criterion_grading_lab),
    ("9-degenerate-case", "units in every degree, no admissible zeta", criterion_degenerate_case),
    ("10-representations", "matrix and scalar representation residuals", criterion_representations),
)


def run_criterion(key: str) -> list[dict]:
    for name, _, func in CRITERIA:
        if name == key:
            return func()
    raise KeyError(f"unknown criterion {key!r}")


def run_all() -> tuple[bool, list[dict]]:
    """Run every criterion; returns (all-passed, per-criterion summaries)."""
    summaries = []
    all_ok = True
    for name, title, func in CRITERIA:
        checks = func()
        failed = [c for c in checks if not c["pass"]]
        ok = not failed
        all_ok &= ok
        summaries.append({
            "criterion": name,
            "title": title,
            "checks": len(checks),
            "failed": len(failed),
            "pass": ok,
            "failures": failed[:5],
        })
    return all_ok, summaries
