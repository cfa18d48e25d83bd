"""Classical (q = 1, commutative) oracles for vector fields and differential operators.

Every first-order operator here is a derivation of a commutative polynomial
algebra, fixed by its values on the generators.  On the ambient spaces r is
the radius, r**2 = Cas, so derivations act on powers of r by the chain rule.
"""
from __future__ import annotations

from dataclasses import dataclass

from .algebra import (
    AlgebraId,
    NCPoly,
    cas_element,
    gens,
    lift_hyperboloid,
    radial_form,
    spec,
    to_hyperboloid,
)
from .scalars import QFrac

SL2 = AlgebraId.SL2
SPHERE = AlgebraId.SPHERE
MINK = AlgebraId.MINKOWSKI
GL2 = AlgebraId.GL2
HYP = AlgebraId.HYPERBOLOID

HALF = QFrac(1) / 2


@dataclass(frozen=True)
class Derivation:
    """A derivation given by its values on generators (a ClassicalField)."""

    alg: AlgebraId
    images: tuple  # NCPoly per generator, in generator order

    @classmethod
    def from_dict(cls, alg, images: dict) -> "Derivation":
        alg = AlgebraId(alg)
        z = NCPoly(alg)
        return cls(alg, tuple(images.get(g, z) for g in spec(alg).gens))

    def __call__(self, f: NCPoly) -> NCPoly:
        if f.alg == HYP and self.alg == SL2:
            return to_hyperboloid(self(lift_hyperboloid(f)))
        if f.alg != self.alg:
            raise ValueError(f"field on {self.alg} applied to {f.alg}")
        n = spec(self.alg).ngens
        out = NCPoly(self.alg)
        dcas = None
        for key, c in f.terms.items():
            for i in range(n):
                if key[i] and self.images[i]:
                    k = list(key)
                    k[i] -= 1
                    out = out + NCPoly(self.alg, {tuple(k): c * key[i]}) * self.images[i]
            if key[n]:
                if dcas is None:
                    dcas = self(cas_element(self.alg))
                # D(r^e) = e r^(e-2) D(Cas) / 2
                k = key[:n] + (key[n] - 2,)
                out = out + (NCPoly(self.alg, {k: c * key[n]}) * dcas).scale(HALF)
        return radial_form(out) if out.has_r() else out

    def __add__(self, other: "Derivation") -> "Derivation":
        return Derivation(self.alg, tuple(a + b for a, b in zip(self.images, other.images)))

    def __sub__(self, other: "Derivation") -> "Derivation":
        return Derivation(self.alg, tuple(a - b for a, b in zip(self.images, other.images)))

    def scale(self, s) -> "Derivation":
        return Derivation(self.alg, tuple(a.scale(s) for a in self.images))

    def lmul(self, p: NCPoly) -> "Derivation":
        """p * D (still a derivation in the commutative setting)."""
        return Derivation(self.alg, tuple(p * a for a in self.images))


def partials(alg) -> dict:
    alg = AlgebraId(alg)
    names = spec(alg).gens
    one = NCPoly.const(alg, 1)
    return {g: Derivation.from_dict(alg, {g: one}) for g in names}


def pois_fields() -> dict:
    """Hamiltonian fields of the sl(2)* Poisson bracket."""
    g = gens(SL2)
    b, h, c = g["b"], g["h"], g["c"]
    return {
        "H": Derivation.from_dict(SL2, {"b": b.scale(2), "c": c.scale(-2)}),
        "B": Derivation.from_dict(SL2, {"c": h, "h": b.scale(-2)}),
        "C": Derivation.from_dict(SL2, {"b": -h, "h": c.scale(2)}),
    }


def rotation_fields() -> dict:
    """X = z d_y - y d_z and its cyclic images on K[x, y, z]."""
    g = gens(SPHERE)
    x, y, z = g["x"], g["y"], g["z"]
    return {
        "X": Derivation.from_dict(SPHERE, {"y": z, "z": -y}),
        "Y": Derivation.from_dict(SPHERE, {"z": x, "x": -z}),
        "Z": Derivation.from_dict(SPHERE, {"x": y, "y": -x}),
    }


def sphere_cal_fields() -> dict:
    g = gens(SPHERE)
    R = rotation_fields()
    return {
        "calX": R["Z"].lmul(g["y"]) - R["Y"].lmul(g["z"]),
        "calY": R["X"].lmul(g["z"]) - R["Z"].lmul(g["x"]),
        "calZ": R["Y"].lmul(g["x"]) - R["X"].lmul(g["y"]),
    }


def sl2_cal_fields() -> dict:
    g = gens(SL2)
    b, h, c = g["b"], g["h"], g["c"]
    P = pois_fields()
    return {
        "calB": (P["B"].lmul(h) - P["H"].lmul(b)).scale(HALF),
        "calH": P["C"].lmul(b) - P["B"].lmul(c),
        "calC": (P["H"].lmul(c) - P["C"].lmul(h)).scale(HALF),
    }


def sl2_bras() -> dict:
    d = partials(SL2)
    return {"b": d["c"], "c": d["b"], "h": d["h"].scale(2)}


def euler(f: NCPoly) -> NCPoly:
    n = spec(f.alg).ngens
    acc = {}
    for key, c in f.terms.items():
        k = sum(key[:n]) + key[n]
        if k:
            acc[key] = c * k
    return NCPoly(f.alg, acc)


def d_r(f: NCPoly) -> NCPoly:
    return radial_form(euler(f).r_shift(-1))


def r_inv2(f: NCPoly) -> NCPoly:
    """Multiply by 1/r**2 (radial on ambient spaces, scalar on the hyperboloid)."""
    g = f.r_shift(-2)
    return radial_form(g) if f.alg != HYP else g


# ---------------------------------------------------------------------------
# Laplace operators

def laplace_flat_r3(f: NCPoly) -> NCPoly:
    d = partials(SPHERE)
    return d["x"](d["x"](f)) + d["y"](d["y"](f)) + d["z"](d["z"](f))


def laplace_sphere(f: NCPoly) -> NCPoly:
    """(X^2 + Y^2 + Z^2)/r^2 on K[x, y, z]."""
    R = rotation_fields()
    return r_inv2(sum((R[k](R[k](f)) for k in "XYZ"), NCPoly(SPHERE)))


def laplace_sphere_cal(f: NCPoly) -> NCPoly:
    """(calX^2 + calY^2 + calZ^2)/r^4."""
    C = sphere_cal_fields()
    s = sum((C[k](C[k](f)) for k in ("calX", "calY", "calZ")), NCPoly(SPHERE))
    return r_inv2(r_inv2(s))


def laplace_sl2(f: NCPoly) -> NCPoly:
    d = partials(f.alg)
    out = d["b"](d["c"](f)).scale(2) + d["h"](d["h"](f)).scale(2)
    if f.alg == GL2:
        out = out + d["l"](d["l"](f)).scale(2)
    return out


def laplace_hyperboloid(f: NCPoly) -> NCPoly:
    """(calB calC + calH^2/2 + calC calB)/r^4 on the classical hyperboloid."""
    C = sl2_cal_fields()
    s = (C["calB"](C["calC"](f)) + C["calH"](C["calH"](f)).scale(HALF)
         + C["calC"](C["calB"](f)))
    return s.r_shift(-4)


def laplace_minkowski(f: NCPoly) -> NCPoly:
    d = partials(MINK)
    return d["t"](d["t"](f)) - d["x"](d["x"](f)) - d["y"](d["y"](f)) - d["z"](d["z"](f))


# ---------------------------------------------------------------------------
# idempotents and Maxwell operators

def _outer(alg, left: list, right: list, prefactor_r: int) -> list:
    return [[(u * v).r_shift(prefactor_r) for v in right] for u in left]


def idempotent(alg) -> tuple:
    """(ebar, e) for the classical sphere or hyperboloid."""
    from .rmatrix import amat_identity, amat_sub

    alg = AlgebraId(alg)
    g = gens(alg)
    if alg == SPHERE:
        col = [g["x"], g["y"], g["z"]]
        ebar = [[radial_form(x) for x in row] for row in _outer(alg, col, col, -2)]
    elif alg == HYP:
        col = [g["c"], g["h"].scale(HALF), g["b"]]
        ebar = _outer(alg, col, [g["b"], g["h"], g["c"]], -2)
    else:
        raise ValueError(f"no classical idempotent on {alg}")
    return ebar, amat_sub(amat_identity(alg, 3), ebar)


def apply_matrix(M: list, v: list) -> list:
    out = []
    for row in M:
        s = NCPoly(v[0].alg)
        for a, x in zip(row, v):
            s = s + a * x
        out.append(radial_form(s))
    return out


def maxwell_flat_r3(v: list) -> list:
    d = partials(SPHERE)
    div = d["x"](v[0]) + d["y"](v[1]) + d["z"](v[2])
    return [laplace_flat_r3(vi) - d[g](div) for vi, g in zip(v, "xyz")]


def maxwell_sphere(v: list) -> list:
    C = sphere_cal_fields()
    names = ("calX", "calY", "calZ")
    div = sum((C[k](vi) for k, vi in zip(names, v)), NCPoly(SPHERE))
    raw = [laplace_sphere_cal(vi) - r_inv2(r_inv2(C[k](div))) for vi, k in zip(v, names)]
    return apply_matrix(idempotent(SPHERE)[1], raw)


def maxwell_sl2(v: list) -> list:
    d = partials(v[0].alg)
    row = d["c"](v[0]) + d["h"](v[1]).scale(2) + d["b"](v[2])
    if len(v) == 4:
        row = row + d["l"](v[3]).scale(2)
    names = "bhcl"[: len(v)]
    return [laplace_sl2(vi) - d[g](row) for vi, g in zip(v, names)]


def maxwell_hyperboloid(v: list) -> list:
    C = sl2_cal_fields()
    div = C["calB"](v[0]) + C["calH"](v[1]) + C["calC"](v[2])
    col = [C["calC"](div), C["calH"](div).scale(HALF), C["calB"](div)]
    raw = [laplace_hyperboloid(vi) - ci.r_shift(-4) for vi, ci in zip(v, col)]
    return apply_matrix(idempotent(HYP)[1], raw)


def maxwell_minkowski(v: list) -> list:
    d = partials(MINK)
    row = d["t"](v[0]) - d["x"](v[1]) - d["y"](v[2]) - d["z"](v[3])
    return [laplace_minkowski(vi) - d[g](row) for vi, g in zip(v, "txyz")]


def gradient(alg, rho: NCPoly) -> list:
    d = partials(alg)
    return [d[g](rho) for g in spec(alg).gens]


def sphere_gauge_column(rho: NCPoly) -> list:
    C = sphere_cal_fields()
    return [C[k](rho) for k in ("calX", "calY", "calZ")]


def hyperboloid_gauge_column(rho: NCPoly) -> list:
    C = sl2_cal_fields()
    return [C["calC"](rho), C["calH"](rho).scale(HALF), C["calB"](rho)]
