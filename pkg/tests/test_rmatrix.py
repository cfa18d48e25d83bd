from __future__ import annotations

import itertools

import sympy

from qminkowski import linalg
from qminkowski.algebra import AlgebraId, NCPoly, cas_element, commutator, gens, specialize
from qminkowski.rmatrix import (
    amat_is_zero,
    amat_mul,
    bc_operators,
    ch_relation,
    ch_residual,
    check_hecke,
    check_skew_inverse,
    check_ybe,
    classical_char_poly,
    flip,
    l_matrix,
    pairing,
    quantum_trace,
    r_q,
    skew_inverse,
    split_casimir_matrix,
)
from qminkowski.scalars import TWO_Q, QFrac, qpow

from conftest import to_sympy

R3, R4, H2 = AlgebraId.R3, AlgebraId.R4, AlgebraId.H2
q = qpow(1)


def test_braid_and_hecke():
    R = r_q()
    assert check_ybe(R)
    assert check_hecke(R)
    assert check_ybe(flip())
    assert check_hecke(flip(), 1)
    # R at q = 1 is the flip
    assert [[x.evaluate(1) for x in row] for row in R] == [[x.evaluate(1) for x in row] for row in flip()]
    # a non-braiding is rejected
    bad = linalg.to_qfrac([[1, 0, 0, 0], [0, 1, 1, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
    assert not check_hecke(bad)


def test_skew_inverse_and_bc():
    R = r_q()
    psi = skew_inverse(R)
    assert check_skew_inverse(R, psi)
    B, C = bc_operators(psi)
    assert B == linalg.to_qfrac([[qpow(-1), 0], [0, qpow(-3)]])
    assert C == linalg.to_qfrac([[qpow(-3), 0], [0, qpow(-1)]])


def test_quantum_trace_of_l():
    L = l_matrix(R4)
    assert quantum_trace(L).scale(q**2) == NCPoly.gen(R4, "l")
    for x in "bhcl":
        assert commutator(quantum_trace(amat_mul(L, L)), NCPoly.gen(R4, x)).is_zero()


def test_pairing_table():
    g = gens(R4)
    expected = {("b", "c"): qpow(-3), ("c", "b"): qpow(-1),
                ("h", "h"): qpow(-2) * TWO_Q, ("l", "l"): qpow(-2) * TWO_Q}
    for x, y in itertools.product("bhcl", repeat=2):
        assert pairing(g[x], g[y]) == expected.get((x, y), QFrac(0)), (x, y)


def test_classical_char_poly_matches_sympy():
    M, _ = split_casimir_matrix(linalg.identity(3), R3)
    Mc = [[specialize(x, 1) for x in row] for row in M]
    tr, c1, det = classical_char_poly(Mc)
    S = sympy.Matrix([[to_sympy(x, "bhc") for x in row] for row in Mc])
    lam = sympy.Symbol("lam")
    cp = sympy.expand(S.charpoly(lam).as_expr())
    # lam^3 - tr lam^2 + e2 lam - det
    assert sympy.expand(cp.coeff(lam, 2) + to_sympy(tr, "bhc")) == 0
    assert sympy.expand(cp.coeff(lam, 1) + to_sympy(c1, "bhc")) == 0
    assert sympy.expand(cp.coeff(lam, 0) + to_sympy(det, "bhc")) == 0


def test_ch_relation_over_r3_and_h2():
    _, L = split_casimir_matrix(linalg.identity(3), R3)
    c2, c1, c0 = ch_relation(L)
    assert amat_is_zero(ch_residual(L, (c2, c1, c0)))
    assert c2.is_zero() and c0.is_zero()
    assert c1 == cas_element(R3).scale(q**3 / (q**2 + 1))
    _, Lh = split_casimir_matrix(linalg.identity(3), H2)
    coeffs = ch_relation(Lh)
    assert all(c.is_scalar() for c in coeffs)
    assert coeffs[1] == NCPoly.const(H2, q**3 / (q**2 + 1)).r_shift(2)


def test_ch_with_other_basis_change():
    P = [[1, 1, 0], [0, 1, 0], [0, 0, 2]]
    _, L = split_casimir_matrix(P, R3)
    coeffs = ch_relation(L)
    assert amat_is_zero(ch_residual(L, coeffs))
