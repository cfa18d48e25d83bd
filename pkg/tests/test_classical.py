from __future__ import annotations

import pytest
import sympy

from qminkowski import classical as cl
from qminkowski.algebra import AlgebraId, NCPoly, cas_element, gens
from qminkowski.laplace import gauge_check, monomials

from conftest import r_sym, to_sympy

S, SL2, MINK, HYP, GL2 = (AlgebraId.SPHERE, AlgebraId.SL2, AlgebraId.MINKOWSKI,
                          AlgebraId.HYPERBOLOID, AlgebraId.GL2)
x, y, z, t, b, h, c, l = sympy.symbols("x y z t b h c l")
rad = sympy.sqrt(x**2 + y**2 + z**2)


def _sph(f):
    return sympy.simplify(to_sympy(f, "xyz").subs(r_sym, rad))


def _eq(a, e):
    return sympy.simplify(a - e) == 0


def test_rotation_fields_match_sympy():
    R = cl.rotation_fields()
    ops = {
        "X": lambda e: z * sympy.diff(e, y) - y * sympy.diff(e, z),
        "Y": lambda e: x * sympy.diff(e, z) - z * sympy.diff(e, x),
        "Z": lambda e: y * sympy.diff(e, x) - x * sympy.diff(e, y),
    }
    for m in monomials(S, 3):
        e = to_sympy(m, "xyz")
        for k, op in ops.items():
            assert _eq(to_sympy(R[k](m), "xyz"), op(e))


def test_sphere_laplacian_matches_sympy():
    for m in monomials(S, 3):
        e = to_sympy(m, "xyz")
        rot = lambda u, a, bb: a * sympy.diff(u, bb) - bb * sympy.diff(u, a)
        X = lambda u: rot(u, z, y)
        Y = lambda u: rot(u, x, z)
        Z = lambda u: rot(u, y, x)
        expect = (X(X(e)) + Y(Y(e)) + Z(Z(e))) / rad**2
        assert _eq(_sph(cl.laplace_sphere(m)), expect)


def test_derivation_on_radius():
    # d_x r = x / r
    d = cl.partials(S)
    r = NCPoly.const(S, 1).r_shift(1)
    assert _eq(_sph(d["x"](r)), x / rad)


def test_pois_fields_match_sympy():
    P = cl.pois_fields()
    ops = {
        "H": lambda e: 2 * b * sympy.diff(e, b) - 2 * c * sympy.diff(e, c),
        "B": lambda e: h * sympy.diff(e, c) - 2 * b * sympy.diff(e, h),
        "C": lambda e: -h * sympy.diff(e, b) + 2 * c * sympy.diff(e, h),
    }
    for m in monomials(SL2, 3):
        e = to_sympy(m, "bhc")
        for k, op in ops.items():
            assert _eq(to_sympy(P[k](m), "bhc"), op(e))


def test_flat_laplacians_match_sympy():
    for m in monomials(SL2, 4):
        e = to_sympy(m, "bhc")
        expect = 2 * sympy.diff(e, b, c) + 2 * sympy.diff(e, h, h)
        assert _eq(to_sympy(cl.laplace_sl2(m), "bhc"), expect)
    for m in monomials(MINK, 3):
        e = to_sympy(m, "txyz")
        expect = sympy.diff(e, t, t) - sympy.diff(e, x, x) - sympy.diff(e, y, y) - sympy.diff(e, z, z)
        assert _eq(to_sympy(cl.laplace_minkowski(m), "txyz"), expect)
    for m in monomials(GL2, 3):
        e = to_sympy(m, "bhcl")
        expect = 2 * sympy.diff(e, b, c) + 2 * sympy.diff(e, h, h) + 2 * sympy.diff(e, l, l)
        assert _eq(to_sympy(cl.laplace_sl2(m), "bhcl"), expect)


def test_casimir_laplacian_value():
    assert cl.laplace_sl2(cas_element(SL2)) == NCPoly.const(SL2, 6)


def test_tangency_identities():
    g = gens(SL2)
    P = cl.pois_fields()
    for m in monomials(SL2, 4):
        tang = g["c"] * P["B"](m) + (g["h"] * P["H"](m)).scale(cl.HALF) + g["b"] * P["C"](m)
        assert tang.is_zero()


def test_bra_decomposition():
    """<x = cal(x)/r^2 + (x/r) d_r on K[b, h, c]."""
    from qminkowski.algebra import radial_form

    g = gens(SL2)
    C = cl.sl2_cal_fields()
    br = cl.sl2_bras()
    for m in monomials(SL2, 3):
        for xg, k in (("b", "calB"), ("h", "calH"), ("c", "calC")):
            rhs = C[k](m).r_shift(-2) + g[xg] * cl.d_r(m).r_shift(-1)
            assert radial_form(br[xg](m) - rhs).is_zero()


def test_hyperboloid_laplacian_relation():
    P = cl.pois_fields()
    for m in monomials(HYP, 3):
        alt = (P["B"](P["C"](m)) + P["H"](P["H"](m)).scale(cl.HALF) + P["C"](P["B"](m))).r_shift(-2)
        assert cl.laplace_hyperboloid(m) == alt.scale(-cl.HALF)


@pytest.mark.parametrize("alg", [S, SL2, MINK, HYP])
def test_gauge_columns_in_kernel(alg):
    rep = gauge_check(alg, list(monomials(alg, 3)), 3)
    assert rep.passed, rep.witness


def test_flat_r3_gauge():
    for m in monomials(S, 3):
        out = cl.maxwell_flat_r3(cl.gradient(S, m))
        assert all(v.is_zero() for v in out)


def test_maxwell_sl2_is_not_trivial():
    v = [NCPoly.gen(SL2, "c") * NCPoly.gen(SL2, "c"), NCPoly(SL2), NCPoly(SL2)]
    assert any(not w.is_zero() for w in cl.maxwell_sl2(v))
