from fractions import Fraction
from random import Random

import pytest

from weylbundles.ambient import (
    AmbientAlgebra,
    embed_degree_zero,
    project_degree_zero,
    veronese_component,
)
from weylbundles.gwa import AlgebraMismatch, GwaAlgebra
from weylbundles.poly import UniPoly
from weylbundles.sampling import random_amb_elem, random_gwa_elem, random_homogeneous_amb


def test_construction_requires_zero_root():
    with pytest.raises(ValueError):
        AmbientAlgebra(UniPoly({0: 1, 1: -1}), 2, 2)


def test_defining_relations(sphere_amb):
    amb = sphere_amb
    xp, xm, zp, zm = amb.x_plus(), amb.x_minus(), amb.z_plus(), amb.z_minus()
    assert zp * zm == zm * zp
    assert xp * xm == amb.from_z_poly(amb.p_reduced)
    assert xm * xp == amb.from_z_poly(amb.p_reduced.compose_linear(amb.q, 0))
    assert xp * zp == zp * xp * Fraction(1, 2)
    assert xm * zm == zm * xm * 2


def test_connection_identity_for_sphere(sphere_amb):
    amb = sphere_amb
    lhs = amb.x_minus() * amb.x_plus() + amb.z_minus() * amb.z_plus() * 4
    assert lhs == amb.one()


def test_degree_split_examples(sphere_amb):
    amb = sphere_amb
    assert list((amb.z_plus() * amb.z_minus()).degree_split()) == [0]
    assert list(amb.x_minus().degree_split()) == [-1]
    e = amb.x_minus() * amb.z_plus() ** 2
    assert list(e.degree_split()) == [1]
    assert (amb.z_plus() + amb.x_plus()).degree() == 1        # k = 1
    mixed = amb.z_plus() + amb.x_minus()
    split = mixed.degree_split()
    assert sorted(split) == [-1, 1] and sum(split.values(), amb.zero()) == mixed
    with pytest.raises(ValueError):
        mixed.degree()


def test_degree_respects_products(kleinian):
    amb = kleinian.ambient_algebra()
    rng = Random(4)
    for _ in range(30):
        a = random_amb_elem(amb, rng)
        b = random_amb_elem(amb, rng)
        product_split = (a * b).degree_split()
        expected: dict = {}
        for d1, c1 in a.degree_split().items():
            for d2, c2 in b.degree_split().items():
                term = c1 * c2
                if term:
                    expected[d1 + d2] = expected.get(d1 + d2, amb.zero()) + term
        assert {d: e for d, e in expected.items() if e} == product_split


def test_associativity_random(any_preset):
    amb = any_preset.ambient_algebra()
    rng = Random(5)
    for _ in range(35):
        a, b, c = (random_amb_elem(amb, rng) for _ in range(3))
        assert (a * b) * c == a * (b * c)


def test_embed_generators(sphere_amb):
    amb = sphere_amb
    gwa = amb.gwa()
    assert embed_degree_zero(amb, gwa.z()) == amb.z_plus() * amb.z_minus()
    assert embed_degree_zero(amb, gwa.one()) == amb.one()
    assert embed_degree_zero(amb, gwa.x()) == amb.x_minus() * amb.z_plus()
    assert embed_degree_zero(amb, gwa.y()) == amb.z_minus() * amb.x_plus()


def test_embed_is_homomorphism(any_preset):
    amb = any_preset.ambient_algebra()
    gwa = amb.gwa()
    assert embed_degree_zero(amb, gwa.y() * gwa.x()) == embed_degree_zero(
        amb, gwa.y()
    ) * embed_degree_zero(amb, gwa.x())
    rng = Random(6)
    for _ in range(25):
        a = random_gwa_elem(gwa, rng)
        b = random_gwa_elem(gwa, rng)
        assert embed_degree_zero(amb, a * b) == (
            embed_degree_zero(amb, a) * embed_degree_zero(amb, b)
        )


def test_embed_rejects_wrong_source(sphere_amb):
    bad = GwaAlgebra(sphere_amb.p, sphere_amb.q, Fraction(1, 2))
    with pytest.raises(AlgebraMismatch):
        embed_degree_zero(sphere_amb, bad.x())
    other_q = GwaAlgebra(sphere_amb.p, Fraction(5), Fraction(0))
    with pytest.raises(AlgebraMismatch):
        embed_degree_zero(sphere_amb, other_q.x())


def test_project_examples(sphere_amb):
    amb = sphere_amb
    gwa = amb.gwa()
    assert project_degree_zero(amb, amb.z_plus() * amb.z_minus()) == gwa.z()
    e = amb.basis_elem(1, 2, 1)                      # xm zp^2 zm, degree 0
    assert project_degree_zero(amb, e) == gwa.x() * gwa.z()


def test_project_rejects_nonzero_degree(sphere_amb):
    with pytest.raises(ValueError):
        project_degree_zero(sphere_amb, sphere_amb.z_plus())


def test_roundtrips(any_preset):
    amb = any_preset.ambient_algebra()
    gwa = amb.gwa()
    rng = Random(7)
    for _ in range(20):
        a = random_gwa_elem(gwa, rng)
        assert project_degree_zero(amb, embed_degree_zero(amb, a)) == a
        h = random_homogeneous_amb(amb, rng, 0)
        assert embed_degree_zero(amb, project_degree_zero(amb, h)) == h


def test_veronese_component(kleinian):
    amb = kleinian.ambient_algebra()          # k = 2
    assert veronese_component(amb, 1, amb.x_plus()) == amb.x_plus()
    assert veronese_component(amb, 0, amb.z_plus()).is_zero()
    assert veronese_component(amb, 1, amb.z_plus()).is_zero()
    assert veronese_component(amb, -1, amb.z_minus() ** 2) == amb.z_minus() ** 2


def test_printing(sphere_amb):
    e = sphere_amb.basis_elem(1, 2, 1)
    assert str(e) == "xm*(zp^2*zm)"
    assert str(sphere_amb.x_plus()) == "xp*(1)"
