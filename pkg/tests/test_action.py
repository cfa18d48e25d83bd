from __future__ import annotations

import random

import pytest

from qminkowski.action import ActionConfig, QGGen, act, check_module_algebra, is_invariant
from qminkowski.algebra import AlgebraId, NCPoly, cas_element, gens, random_poly
from qminkowski.parser import parse_poly
from qminkowski.scalars import TWO_Q, qpow

R3, R4, H2 = AlgebraId.R3, AlgebraId.R4, AlgebraId.H2
q = qpow(1)


def test_generator_images_theta0():
    g = gens(R4)
    cfg = ActionConfig(0)
    assert act(QGGen.X, g["h"], cfg) == g["b"].scale(-TWO_Q)
    assert act(QGGen.K, g["b"], cfg) == g["b"].scale(q**2)
    assert act(QGGen.K, g["c"], cfg) == g["c"].scale(q**-2)
    assert act(QGGen.X, g["b"], cfg).is_zero()
    assert act(QGGen.Y, g["c"], cfg).is_zero()
    for gen in QGGen:
        if gen in (QGGen.X, QGGen.Y):
            assert act(gen, g["l"], cfg).is_zero()


@pytest.mark.parametrize("theta", [0, 1, 2])
def test_x_on_h_scales_with_theta(theta):
    h = NCPoly.gen(R3, "h")
    b = NCPoly.gen(R3, "b")
    assert act(QGGen.X, h, ActionConfig(theta)) == b.scale(-(q**theta) * TWO_Q)


@pytest.mark.parametrize("theta", [0, 1])
@pytest.mark.parametrize("alg", [R3, R4, H2])
def test_module_algebra(alg, theta):
    rep = check_module_algebra(alg, ActionConfig(theta), max_degree=3)
    assert rep.passed, rep.witness


def _kpow(f, s, cfg):
    gen = QGGen.K if s >= 0 else QGGen.Kinv
    for _ in range(abs(s)):
        f = act(gen, f, cfg)
    return f


@pytest.mark.parametrize("theta", [0, 1, 2])
@pytest.mark.parametrize("alg", [R3, R4])
def test_action_respects_products(alg, theta):
    """X(uv) = X(u) K^(theta-1)(v) + K^theta(u) X(v), Y(uv) = Y(u) K^-theta(v) + K^(1-theta)(u) Y(v)."""
    rng = random.Random(1)
    cfg = ActionConfig(theta)
    for _ in range(15):
        u, v = random_poly(alg, rng, 2), random_poly(alg, rng, 2)
        x = act(QGGen.X, u, cfg) * _kpow(v, theta - 1, cfg) + _kpow(u, theta, cfg) * act(QGGen.X, v, cfg)
        y = act(QGGen.Y, u, cfg) * _kpow(v, -theta, cfg) + _kpow(u, 1 - theta, cfg) * act(QGGen.Y, v, cfg)
        assert act(QGGen.X, u * v, cfg) == x
        assert act(QGGen.Y, u * v, cfg) == y
        assert act(QGGen.K, u * v, cfg) == act(QGGen.K, u, cfg) * act(QGGen.K, v, cfg)


def test_invariants():
    assert is_invariant(cas_element(R3))
    assert is_invariant(NCPoly.gen(R4, "l") ** 2)
    assert not is_invariant(NCPoly.gen(R3, "h"))
    assert is_invariant(parse_poly("r^2", H2))
