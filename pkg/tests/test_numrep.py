from fractions import Fraction

import numpy as np
import pytest

from weylbundles.gwa import GwaAlgebra
from weylbundles.numrep import (
    dump_matrices_csv,
    one_dim_rep,
    one_dim_residuals,
    relation_residuals,
    truncated_rep,
)
from weylbundles.poly import UniPoly

P_SPHERE = UniPoly({1: 1, 2: -1})


def test_one_dim_rep_sphere():
    alg = GwaAlgebra(P_SPHERE, 4, 0)
    rep = one_dim_rep(alg, 1)
    assert rep == {"z": 0.0, "x": 0.0, "y": 0.0}
    assert max(one_dim_residuals(alg, rep).values()) < 1e-12


def test_one_dim_rep_fixed_point():
    alg = GwaAlgebra(UniPoly({2: 1, 1: -2}), Fraction(1, 2), 1)   # p = (z - 2) z
    for lam in (1, -1):
        rep = one_dim_rep(alg, lam)
        assert rep["z"] == 2.0 and rep["x"] == 0.0
        assert max(one_dim_residuals(alg, rep).values()) < 1e-12


def test_one_dim_rep_nonzero_value():
    alg = GwaAlgebra(UniPoly({0: 4}), 3, 0)       # p constant 4, fixed point 0
    rep = one_dim_rep(alg, -1)
    assert rep["x"] == -2.0
    assert max(one_dim_residuals(alg, rep).values()) < 1e-12


def test_one_dim_rep_errors():
    with pytest.raises(ValueError):
        one_dim_rep(GwaAlgebra(P_SPHERE, 1, 0), 1)
    negative = GwaAlgebra(UniPoly({0: -1, 1: 1}), 4, 0)   # p(0) = -1
    with pytest.raises(ValueError):
        one_dim_rep(negative, 1)
    with pytest.raises(ValueError):
        one_dim_rep(GwaAlgebra(P_SPHERE, 4, 0), 2)


@pytest.fixture
def sphere_rep():
    alg = GwaAlgebra(P_SPHERE, Fraction(1, 4), 0)
    return truncated_rep(alg, 1, 16)


def test_truncated_rep_matrices(sphere_rep):
    rep = sphere_rep
    q = 0.25
    for j in range(16):
        assert rep.z[j, j] == pytest.approx(q**j, abs=1e-15)
    # lowering action: x e_k = sqrt(p(q^k)) e_{k-1}, and e_0 is killed
    assert np.all(rep.x[:, 0] == 0)
    for j in range(1, 16):
        assert rep.x[j - 1, j] == pytest.approx(np.sqrt(q**j * (1 - q**j)), abs=1e-15)
    assert np.array_equal(rep.y, rep.x.T)


def test_truncated_rep_spectrum(sphere_rep):
    expected = sorted(0.25**j for j in range(16))
    got = sorted(np.linalg.eigvalsh(sphere_rep.z))
    assert np.allclose(got, expected, atol=1e-12)


def test_truncated_rep_lowering_raising_products(sphere_rep):
    rep = sphere_rep
    yx = rep.y @ rep.x
    for j in range(15):
        assert yx[j, j] == pytest.approx(rep.p_at(0.25**j), abs=1e-10)


def test_relation_residuals_small(sphere_rep):
    report = relation_residuals(sphere_rep)
    assert report["interior_indices"] == [1, 14]
    assert all(v < 1e-10 for v in report["relations"].values())
    assert report["positivity_checked_upto"] == 16


def test_relation_residuals_flag_perturbation(sphere_rep):
    sphere_rep.x[3, 4] += 1e-3
    report = relation_residuals(sphere_rep)
    assert report["relations"]["yx"] > 1e-6


def test_tiny_truncation_has_no_interior():
    alg = GwaAlgebra(P_SPHERE, Fraction(1, 4), 0)
    report = relation_residuals(truncated_rep(alg, 1, 2))
    assert all(v is None for v in report["relations"].values())
    assert "too small" in report["note"]


def test_dump_matrices_csv(sphere_rep, tmp_path):
    paths = dump_matrices_csv(sphere_rep, str(tmp_path / "mats"))
    assert [p.rsplit("/", 1)[1] for p in paths] == ["x.csv", "y.csv", "z.csv"]
    loaded = np.loadtxt(paths[2], delimiter=",")
    assert np.allclose(loaded, sphere_rep.z)


def test_truncated_rep_preconditions():
    with pytest.raises(ValueError, match="q in"):
        truncated_rep(GwaAlgebra(P_SPHERE, 4, 0), 1, 8)
    with pytest.raises(ValueError, match="r = 0"):
        truncated_rep(GwaAlgebra(P_SPHERE, Fraction(1, 4), 1), 1, 8)
    # p(q^j * 2) < 0 for small j: the failing index is named
    with pytest.raises(ValueError, match="index 1"):
        truncated_rep(GwaAlgebra(P_SPHERE, Fraction(1, 2), 0), 2, 8)
