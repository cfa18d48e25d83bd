from __future__ import annotations

import random

import pytest

from qminkowski.algebra import (
    AlgebraId,
    NCPoly,
    NotDivisible,
    UnknownGenerator,
    cas_element,
    check_confluence,
    commutator,
    divide_by_central,
    gens,
    homogeneous_parts,
    lift_hyperboloid,
    normal_form,
    radial_form,
    random_poly,
    specialize,
    to_hyperboloid,
    to_text,
)
from qminkowski.parser import parse_poly
from qminkowski.scalars import TWO_Q, qpow

R3, R4, H2 = AlgebraId.R3, AlgebraId.R4, AlgebraId.H2
q = qpow(1)


@pytest.mark.parametrize(
    "text",
    [
        # defining relations of the q-Minkowski algebra
        "q^2*h*b - b*h + (q - q^-1)*b*l",
        "(q^2 + 1)*(b*c - c*b) + (q^2 - 1)*h^2 + (q - q^-1)*h*l",
        "q^2*c*h - h*c + (q - q^-1)*c*l",
        "l*b - b*l",
        "l*h - h*l",
        "l*c - c*l",
    ],
)
def test_r4_relations_vanish(text):
    assert parse_poly(text, R4).is_zero()


@pytest.mark.parametrize(
    "text",
    ["q^2*h*b - b*h", "(q^2 + 1)*(b*c - c*b) + (q^2 - 1)*h^2", "q^2*c*h - h*c"],
)
def test_r3_relations_vanish(text):
    assert parse_poly(text, R3).is_zero()


def test_r4_examples():
    assert to_text(parse_poly("q^2*h*b - b*h", R4)) == "-((q^2-1)/q)*b*l"
    assert to_text(parse_poly("c*b", R3)) == "b*c + ((q^2-1)/(q^2+1))*h^2"


def test_hyperboloid_quotient():
    # Cas_sl = r^2 on the quantum hyperboloid
    cas = NCPoly(H2, cas_element(R3).terms).reduced()
    assert cas == NCPoly.const(H2, 1).r_shift(2)
    # and classically b c + h^2/4 = r^2/2 after reduction
    assert parse_poly("b*c + h^2/4", AlgebraId.HYPERBOLOID) == parse_poly("r^2/2", AlgebraId.HYPERBOLOID)
    # b^i h^j c^k with i, k > 0 never survives
    for f in (parse_poly("b*h*c", H2), parse_poly("b^2*c^2", H2)):
        assert all(not (k[0] and k[2]) for k in f.terms)


def test_hyperboloid_lift_round_trip():
    rng = random.Random(2)
    for _ in range(30):
        f = random_poly(H2, rng, 3)
        assert to_hyperboloid(lift_hyperboloid(f)) == f


@pytest.mark.parametrize("alg", list(AlgebraId))
def test_random_associativity(alg):
    rng = random.Random(9)
    for _ in range(30):
        u, v, w = (random_poly(alg, rng, 2) for _ in range(3))
        assert (u * v) * w == u * (v * w)
        assert u * (v + w) == u * v + u * w


def test_casimir_is_central():
    cas = cas_element(R3)
    for x, g in gens(R3).items():
        assert commutator(cas, g).is_zero()


def test_divide_by_central():
    cas = cas_element(R3)
    f = parse_poly("b*h + 2*c", R3)
    assert divide_by_central(cas * f, cas) == f
    with pytest.raises(NotDivisible):
        divide_by_central(f, cas)


def test_radial_form_replaces_r2():
    f = parse_poly("r^2*b", R3)
    assert radial_form(f) == cas_element(R3) * parse_poly("b", R3)
    # a genuine negative power stays
    g = radial_form(parse_poly("r^-2*b", R3))
    assert g.has_r()


def test_homogeneous_parts_and_degree():
    f = parse_poly("b*c + h + 3", R3)
    parts = homogeneous_parts(f)
    assert [d for d, _ in parts] == [0, 1, 2]
    assert all(p.degree() == d for d, p in parts)
    assert sum((p for _, p in parts), NCPoly(R3)) == f
    with pytest.raises(ValueError):
        homogeneous_parts(parse_poly("b", H2))


def test_specialize_to_classical():
    f = parse_poly("c*b", R3)
    g = specialize(f, 1)
    assert g.alg == AlgebraId.SL2
    assert g == parse_poly("b*c", AlgebraId.SL2)
    assert specialize(NCPoly.const(R3, TWO_Q), 1) == NCPoly.const(AlgebraId.SL2, 2)


def test_normal_form_accepts_text_and_words():
    assert normal_form(R3, "c*b") == parse_poly("c*b", R3)
    with pytest.raises((UnknownGenerator, ValueError)):
        NCPoly.gen(R3, "l")


def test_algebra_mismatch():
    with pytest.raises(ValueError):
        NCPoly.gen(R3, "b") * NCPoly.gen(R4, "b")


@pytest.mark.parametrize("alg", [R3, R4, H2, AlgebraId.HYPERBOLOID])
def test_confluence_report(alg):
    rep = check_confluence(alg, 3, samples=50, seed=4)
    assert rep.passed, rep.witness
