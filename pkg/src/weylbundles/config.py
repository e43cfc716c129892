"""Run configurations and named presets.

A configuration fixes the defining polynomial p, the two grading parameters
q_plus and q_minus (q is their product), the shift r of the line
automorphism and the admissible nonzero roots of p used by the pairing.
Roots are listed explicitly; no root finding is ever performed.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction

from .ambient import AmbientAlgebra
from .gwa import GwaAlgebra
from .poly import UniPoly, frac

PRESET_NAMES = ("sphere", "lens(k,l,q)", "kleinian-demo")


@dataclass(frozen=True)
class Config:
    name: str
    p: UniPoly
    q_plus: Fraction
    q_minus: Fraction
    r: Fraction = Fraction(0)
    zetas: tuple[Fraction, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "q_plus", frac(self.q_plus))
        object.__setattr__(self, "q_minus", frac(self.q_minus))
        object.__setattr__(self, "r", frac(self.r))
        object.__setattr__(self, "zetas", tuple(frac(v) for v in self.zetas))
        if not self.p:
            raise ValueError("configuration needs p != 0")
        for zeta in self.zetas:
            if self.p(zeta) != 0:
                raise ValueError(f"zeta = {zeta} is not a root of p")

    @property
    def q(self) -> Fraction:
        return self.q_plus * self.q_minus

    def gwa_algebra(self) -> GwaAlgebra:
        return GwaAlgebra(self.p, self.q, self.r)

    def ambient_algebra(self) -> AmbientAlgebra:
        if self.r != 0:
            raise ValueError("the graded ambient algebra needs r = 0")
        return AmbientAlgebra(self.p, self.q_plus, self.q_minus)

    def nonzero_zetas(self) -> tuple[Fraction, ...]:
        return tuple(z for z in self.zetas if z != 0)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "p": {"coeffs": [str(self.p.coeff(d)) for d in range(
                (self.p.degree() or 0) + 1)]},
            "q_plus": str(self.q_plus),
            "q_minus": str(self.q_minus),
            "r": str(self.r),
            "zetas": [str(z) for z in self.zetas],
        }


def poly_from_roots(roots: list) -> UniPoly:
    """Build p from (root, multiplicity) pairs.

    Nonzero roots contribute normalized factors (1 - z/root)^mult and the
    root 0 contributes z^mult, so [[0, k], [rho, 1], ...] yields
    z^k * prod (1 - z/rho).
    """
    p = UniPoly.one()
    for root, mult in roots:
        root = frac(root)
        mult = int(mult)
        if mult < 0:
            raise ValueError("multiplicities must be >= 0")
        if root == 0:
            factor = UniPoly.gen()
        else:
            factor = UniPoly({0: 1, 1: -1 / root})
        p = p * factor**mult
    return p


def config_from_dict(data: dict, name: str = "custom") -> Config:
    p_data = data.get("p")
    if not isinstance(p_data, dict) or ("roots" in p_data) == ("coeffs" in p_data):
        raise ValueError('config "p" must carry exactly one of "roots" or "coeffs"')
    if "roots" in p_data:
        p = poly_from_roots(p_data["roots"])
    else:
        p = UniPoly.from_coeff_list([frac(c) for c in p_data["coeffs"]])
    zetas = data.get("zetas")
    if zetas is None:
        zeta = data.get("zeta")
        zetas = [zeta] if zeta is not None else []
    return Config(
        name=data.get("name", name),
        p=p,
        q_plus=frac(data["q_plus"]),
        q_minus=frac(data["q_minus"]),
        r=frac(data.get("r", "0")),
        zetas=tuple(frac(z) for z in zetas),
    )


def load_config(path: str) -> Config:
    with open(path, "r", encoding="utf-8") as fh:
        return config_from_dict(json.load(fh), name=path)


_LENS = re.compile(r"^lens\(\s*(\d+)\s*,\s*(\d+)\s*,\s*([0-9/]+)\s*\)$")


def preset(name: str) -> Config:
    """Named configurations.

    ``sphere``: p = z(1-z), q_plus = q_minus = 2, zeta = 1.
    ``lens(k,l,q)``: p = z^k prod_{i<l} (1 - z/q^{2i}), grading parameters
    q^l on both sides (so the base parameter is q^{2l}), zetas q^{2i}.
    ``kleinian-demo``: p = z^2 (1-z)(2-z), q_plus = 3, q_minus = 1,
    zetas 1 and 2.
    """
    if name == "sphere":
        return Config(
            name="sphere",
            p=poly_from_roots([["0", 1], ["1", 1]]),
            q_plus=Fraction(2),
            q_minus=Fraction(2),
            zetas=(Fraction(1),),
        )
    match = _LENS.match(name)
    if match:
        k, l, q_str = int(match.group(1)), int(match.group(2)), match.group(3)
        base = frac(q_str)
        if k < 1 or l < 1:
            raise ValueError("lens preset needs k >= 1 and l >= 1")
        if base**(2 * l) in (0, 1, -1):
            raise ValueError("lens preset needs q with q^(2l) not 0 or a root of unity")
        roots = [["0", k]] + [[str(base ** (2 * i)), 1] for i in range(l)]
        return Config(
            name=name,
            p=poly_from_roots(roots),
            q_plus=base**l,
            q_minus=base**l,
            zetas=tuple(base ** (2 * i) for i in range(l)),
        )
    if name == "kleinian-demo":
        # z^2 (1 - z)(2 - z) expanded; not of the normalized roots form
        return Config(
            name="kleinian-demo",
            p=UniPoly.from_coeff_list([0, 0, 2, -3, 1]),
            q_plus=Fraction(3),
            q_minus=Fraction(1),
            zetas=(Fraction(1), Fraction(2)),
        )
    raise ValueError(
        f"unknown preset {name!r}; available: sphere, lens(k,l,q) such as "
        f"lens(2,1,2), kleinian-demo"
    )
