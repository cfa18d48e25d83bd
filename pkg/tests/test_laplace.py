from __future__ import annotations

import pytest

from qminkowski.action import ActionConfig, QGGen, act
from qminkowski.algebra import AlgebraId, NCPoly, cas_element, radial_form, specialize
from qminkowski.laplace import (
    NotInModule,
    apply_matrix,
    commutation_defect,
    gauge_check,
    gradient_column,
    idempotent,
    laplace,
    maxwell,
    module_membership,
    monomials,
)
from qminkowski.parser import parse_poly
from qminkowski.scalars import qpow

R3, R4, H2 = AlgebraId.R3, AlgebraId.R4, AlgebraId.H2
q = qpow(1)


def _to_r4(f):
    return NCPoly(R4, {k[:3] + (0, k[3]): c for k, c in f.terms.items()})


def test_laplacian_of_casimir():
    val = laplace(R3, cas_element(R3))
    assert val == NCPoly.const(R3, 2 * (q**4 + q**2 + 1) / q**6)
    assert specialize(val, 1) == NCPoly.const(AlgebraId.SL2, 6)


def test_laplacian_kills_degree_one():
    for m in monomials(R4, 1):
        assert laplace(R4, m).is_zero()


def test_r4_restricts_to_r3():
    for m in monomials(R3, 3):
        assert laplace(R4, _to_r4(m)) == _to_r4(laplace(R3, m))


def test_r4_l_part():
    l2 = parse_poly("l^2", R4)
    assert laplace(R4, l2) == NCPoly.const(R4, 2 * (q + 1 / q) / q**4)


@pytest.mark.parametrize("gen", [QGGen.X, QGGen.Y, QGGen.K])
def test_laplacian_is_covariant(gen):
    cfg = ActionConfig(0)
    for m in monomials(R3, 3):
        assert act(gen, laplace(R3, m), cfg) == laplace(R3, act(gen, m, cfg))


def test_h2_laplacian_eigen():
    """Degree-one elements are eigenvectors with a common eigenvalue."""
    values = set()
    for x in "bhc":
        g = NCPoly.gen(H2, x)
        bm = laplace(H2, g).by_monomial()
        assert list(bm) == [next(iter(g.by_monomial()))]
        values.add(str(next(iter(bm.values()))))
    assert len(values) == 1


def test_maxwell_shape_and_module_errors():
    with pytest.raises(ValueError):
        maxwell(R3, [NCPoly(R3)] * 4)
    with pytest.raises(ValueError):
        maxwell(R4, [NCPoly(R4)] * 3)
    with pytest.raises(NotInModule):
        maxwell(H2, [NCPoly.gen(H2, "b"), NCPoly(H2), NCPoly(H2)])


def test_module_projection():
    eb, e = idempotent(H2)
    v = [NCPoly.gen(H2, "b"), NCPoly.gen(H2, "h"), NCPoly.const(H2, 1)]
    w = apply_matrix(e, v)
    assert module_membership(H2, w)
    assert not module_membership(H2, v)
    out = maxwell(H2, w)
    assert module_membership(H2, out)


def test_gradient_of_constant_is_zero():
    for alg in (R3, R4, H2):
        assert all(x.is_zero() for x in gradient_column(alg, NCPoly.const(alg, 1)))


def test_gauge_hypothesis_outcomes():
    """The commutation hypothesis holds in low degree and fails beyond it."""
    r3 = gauge_check(R3, list(monomials(R3, 2)), 2)
    assert r3.hypothesis == {0: True, 1: True, 2: False}
    h2 = gauge_check(H2, list(monomials(H2, 2)), 2)
    assert h2.hypothesis == {0: True, 1: False, 2: False}
    r4 = gauge_check(R4, list(monomials(R4, 2)), 2)
    assert r4.hypothesis == {0: True, 1: True, 2: False}
    for rep in (r3, h2, r4):
        assert rep.passed


@pytest.mark.parametrize("alg", [R3, R4])
def test_hypothesis_defect_vanishes_at_q1(alg):
    for m in monomials(alg, 2, 2):
        for d in commutation_defect(alg, m):
            assert radial_form(specialize(d, 1)).is_zero()
