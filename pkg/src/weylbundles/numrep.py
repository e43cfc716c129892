"""Floating-point matrix realizations of the defining relations.

These are finite truncations of the infinite-dimensional representation
attached to a root zeta of p (for 0 < q < 1, r = 0), plus the scalar
one-dimensional representations at the fixed point of the line automorphism.
The truncation breaks the relations on the last basis vectors, so residuals
are reported over interior indices only.
"""
from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .gwa import GwaAlgebra
from .poly import frac


def one_dim_rep(alg: GwaAlgebra, lam: int = 1) -> dict[str, float]:
    """Scalar representation at the fixed point z = r/(1-q); lam is +1 or -1.

    The radicand p(r/(1-q)) is checked exactly and must be >= 0.
    """
    if lam not in (1, -1):
        raise ValueError("lam must be +1 or -1")
    if alg.q == 1:
        raise ValueError("one-dimensional representation needs q != 1")
    z0 = alg.r / (1 - alg.q)
    radicand = alg.p(z0)
    if radicand < 0:
        raise ValueError(f"p({z0}) = {radicand} < 0: no real representation")
    x = lam * math.sqrt(float(radicand))
    return {"z": float(z0), "x": x, "y": x}


def one_dim_residuals(alg: GwaAlgebra, rep: dict[str, float]) -> dict[str, float]:
    """Absolute defect of each defining relation on a scalar representation."""
    q, r = float(alg.q), float(alg.r)
    x, y, z = rep["x"], rep["y"], rep["z"]

    def p_at(v: float) -> float:
        return sum(float(c) * v**d for d, c in alg.p.coeffs.items())

    return {
        "xy": abs(x * y - p_at(q * z + r)),
        "yx": abs(y * x - p_at(z)),
        "xz": abs(x * z - (q * z + r) * x),
        "yz": abs(y * z - (z - r) / q * y),
    }


@dataclass(eq=False)
class TruncatedRep:
    """Truncated matrices for x, y, z on the orbit q^j zeta, j = 0..dim-1."""

    dim: int
    q: Fraction
    zeta: Fraction
    p_coeffs: dict[int, Fraction]
    x: np.ndarray
    y: np.ndarray
    z: np.ndarray
    positivity_checked_upto: int

    def p_at(self, v: float) -> float:
        return sum(float(c) * v**d for d, c in self.p_coeffs.items())


def truncated_rep(alg: GwaAlgebra, zeta, dim: int) -> TruncatedRep:
    """Matrices with z diagonal on the orbit and x lowering the index.

    Requires r = 0, 0 < q < 1 and p(q^j zeta) > 0 for j = 1..dim (checked
    exactly; the j = 0 value may vanish since zeta is typically a root).
    Only finitely many positivity conditions are checked, which the report
    records.
    """
    if alg.r != 0:
        raise ValueError("truncated representation needs r = 0")
    if not (0 < alg.q < 1):
        raise ValueError(f"truncated representation needs q in (0, 1), got {alg.q}")
    if dim < 2:
        raise ValueError("dimension must be >= 2")
    zeta = frac(zeta)
    orbit = [alg.q**j * zeta for j in range(dim + 1)]
    values = [alg.p(w) for w in orbit]
    for j in range(1, dim + 1):
        if values[j] <= 0:
            raise ValueError(f"p(q^{j} zeta) = {values[j]} <= 0 at index {j}")
    x = np.zeros((dim, dim))
    for j in range(1, dim):
        x[j - 1, j] = math.sqrt(float(values[j]))
    z = np.diag([float(w) for w in orbit[:dim]])
    return TruncatedRep(
        dim=dim, q=alg.q, zeta=zeta, p_coeffs=dict(alg.p.coeffs),
        x=x, y=x.T.copy(), z=z, positivity_checked_upto=dim,
    )


def dump_matrices_csv(rep: TruncatedRep, directory: str) -> list[str]:
    """Write the x, y, z matrices as CSV files; returns the paths."""
    os.makedirs(directory, exist_ok=True)
    paths = []
    for name, mat in (("x", rep.x), ("y", rep.y), ("z", rep.z)):
        path = os.path.join(directory, f"{name}.csv")
        np.savetxt(path, mat, delimiter=",")
        paths.append(path)
    return paths


def relation_residuals(rep: TruncatedRep) -> dict:
    """Max column norms of the four relation defects over interior indices.

    Interior means basis vectors 1..dim-2; the boundary columns are excluded
    because the truncation breaks the relations there by construction.
    """
    q = float(rep.q)
    x, y, z = rep.x, rep.y, rep.z
    diag = np.diag(z)
    p_diag = np.diag([rep.p_at(v) for v in diag])
    p_shift = np.diag([rep.p_at(q * v) for v in diag])
    defects = {
        "xy": x @ y - p_shift,
        "yx": y @ x - p_diag,
        "xz": x @ z - q * z @ x,
        "yz": y @ z - (1 / q) * z @ y,
    }
    interior = range(1, rep.dim - 1)
    note = "positivity of p on the orbit beyond the truncation is not checked"
    if not interior:
        residuals = {name: None for name in defects}
        note = "truncation too small to have interior indices; " + note
    else:
        residuals = {
            name: max(float(np.linalg.norm(mat[:, j])) for j in interior)
            for name, mat in defects.items()
        }
    return {
        "relations": residuals,
        "interior_indices": [1, rep.dim - 2],
        "positivity_checked_upto": rep.positivity_checked_upto,
        "note": note,
    }
