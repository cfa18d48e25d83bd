"""Braided vector fields on the q-Minkowski algebras.

The adjoint operators B_q, H_q, C_q of span(b, h, c) are extended to the
whole of R3 through its isotypic decomposition R3 = (sum V_k) (x) K[Cas]:
on each V_k they are the unique (up to scale) U_q(sl(2))-equivariant
extension, normalized by the enveloping relations with
hbar = 2_q (q^4 - q^2 + 1).  Calligraphic fields and the derivative
operators are built on top.
"""
from __future__ import annotations

import threading
from functools import lru_cache

from . import linalg
from .action import ActionConfig, QGGen, act
from .algebra import (
    AlgebraId,
    NCPoly,
    _add_into,
    cas_power,
    gens,
    join_l,
    lift_hyperboloid,
    radial_form,
    split_l,
    to_hyperboloid,
    to_text,
)
from .scalars import HBAR, MU, NU, ONE, TWO_Q, W, ZERO, QFrac, qpow

R3 = AlgebraId.R3
GEN3 = ("b", "h", "c")
TANGENT = ("Bq", "Hq", "Cq")
CALLIGRAPHIC = ("calB", "calH", "calC")


class DegenerateBasis(ArithmeticError):
    pass


class SchurViolation(ArithmeticError):
    pass


def _q():
    return qpow(1)


# ---------------------------------------------------------------------------
# the q-Lie bracket on span(b, h, c)

def adjoint_matrix(gen: str) -> list:
    """ad(gen) in the basis (b, h, c); column j is the image of basis vector j."""
    q = _q()
    if gen == "b":
        m = [[0, -1, 0], [0, 0, q / TWO_Q], [0, 0, 0]]
    elif gen == "h":
        m = [[q**2, 0, 0], [0, q**2 - 1, 0], [0, 0, -1]]
    elif gen == "c":
        m = [[0, 0, 0], [-q / TWO_Q, 0, 0], [0, q**2, 0]]
    else:
        raise ValueError(f"no adjoint matrix for {gen!r}")
    return linalg.mscale(linalg.to_qfrac(m), W)


def linear_coords(u: NCPoly) -> list:
    """Coordinates of a linear element of R3 (or H2) in the basis (b, h, c)."""
    out = [ZERO, ZERO, ZERO]
    for key, c in u.terms.items():
        if key[3] != 0 or sum(key[:3]) != 1:
            raise ValueError(f"{to_text(u)} is not in span(b, h, c)")
        out[key[:3].index(1)] += c
    return out


def from_linear_coords(v, alg=R3) -> NCPoly:
    g = gens(alg)
    return g["b"].scale(v[0]) + g["h"].scale(v[1]) + g["c"].scale(v[2])


def q_bracket(u: NCPoly, v: NCPoly) -> NCPoly:
    cu, cv = linear_coords(u), linear_coords(v)
    acc = [ZERO, ZERO, ZERO]
    for i, g in enumerate(GEN3):
        if not cu[i]:
            continue
        img = linalg.matvec(adjoint_matrix(g), cv)
        acc = [a + cu[i] * x for a, x in zip(acc, img)]
    return from_linear_coords(acc, u.alg)


# ---------------------------------------------------------------------------
# monomial bases of R3

@lru_cache(maxsize=None)
def r3_monomials(k: int) -> tuple:
    """Normal monomials of degree k, as full keys with r-slot 0."""
    return tuple(
        (i, j, k - i - j, 0)
        for i in range(k, -1, -1)
        for j in range(k - i, -1, -1)
    )


def _coords(f: NCPoly, k: int) -> list:
    idx = {m: n for n, m in enumerate(r3_monomials(k))}
    v = [ZERO] * len(idx)
    for key, c in f.terms.items():
        v[idx[key]] = c
    return v


def _from_coords(v, k: int, alg=R3) -> NCPoly:
    return NCPoly(alg, {m: c for m, c in zip(r3_monomials(k), v) if c})


# ---------------------------------------------------------------------------
# V_k and the isotypic decomposition

@lru_cache(maxsize=None)
def build_Vk(k: int, theta: int = 0) -> tuple:
    """Basis Y^j(b^k), j = 0..2k, of the irreducible component V_k."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    cfg = ActionConfig(theta)
    v = NCPoly.gen(R3, "b") ** k
    basis = [v]
    for _ in range(2 * k):
        v = act(QGGen.Y, v, cfg)
        if v.is_zero():
            raise DegenerateBasis(f"Y-string of b^{k} terminated early")
        basis.append(v)
    if linalg.rank([_coords(e, k) for e in basis]) != 2 * k + 1:
        raise DegenerateBasis(f"V_{k} basis is not independent")
    return tuple(basis)


def _vk_coords(f: NCPoly, k: int, theta: int = 0) -> list:
    basis = build_Vk(k, theta)
    A = linalg.transpose([_coords(e, k) for e in basis])
    x = linalg.solve(A, _coords(f, k))
    if x is None:
        raise ValueError(f"{to_text(f)} is not in V_{k}")
    return x


@lru_cache(maxsize=None)
def _isotypic_basis(k: int) -> tuple:
    """[(j, i, element)] with element = Cas^j * Y^i(b^{k-2j})."""
    out = []
    for j in range(k // 2 + 1):
        cj = cas_power(R3, j)
        for i, e in enumerate(build_Vk(k - 2 * j)):
            out.append((j, i, cj * e))
    return tuple(out)


@lru_cache(maxsize=None)
def _isotypic_change(k: int) -> tuple:
    """(S, S^-1): S has the isotypic basis vectors as columns (monomial coords)."""
    basis = _isotypic_basis(k)
    S = linalg.transpose([_coords(e, k) for _, _, e in basis])
    try:
        Sinv = linalg.inverse(S)
    except linalg.SingularMatrixError as exc:
        raise DegenerateBasis(f"isotypic basis of degree {k} is singular") from exc
    return S, Sinv


def decompose(f: NCPoly) -> list:
    """[(j, v_j)] with f = sum Cas^j v_j and v_j in V_{k-2j}; f homogeneous in R3."""
    if f.alg != R3:
        raise ValueError("decompose works on homogeneous elements of r3")
    if f.is_zero():
        return []
    degs = {sum(key[:3]) for key in f.terms}
    if len(degs) != 1 or f.has_r():
        raise ValueError("decompose needs a homogeneous r-free element")
    k = degs.pop()
    _, Sinv = _isotypic_change(k)
    x = linalg.matvec(Sinv, _coords(f, k))
    parts: dict = {}
    for (j, i, _), c in zip(_isotypic_basis(k), x):
        if c:
            e = build_Vk(k - 2 * j)[i]
            parts[j] = parts.get(j, NCPoly(R3)) + e.scale(c)
    return sorted(parts.items())


def reassemble(parts) -> NCPoly:
    out = NCPoly(R3)
    for j, v in parts:
        out = out + cas_power(R3, j) * v
    return out


# ---------------------------------------------------------------------------
# equivariant extension of the adjoint operators to V_k

def _weight_action(k: int, gen: QGGen, theta: int) -> list:
    """Matrix of X or Y on the V_k basis."""
    basis = build_Vk(k, theta)
    cfg = ActionConfig(theta)
    cols = [_vk_coords(act(gen, e, cfg), k, theta) for e in basis]
    return linalg.transpose(cols)


def _gen_image(gen: QGGen, xi: int, theta: int) -> list:
    """Coordinates of g(xi) in (b, h, c) for a generator index xi."""
    f = act(gen, NCPoly.gen(R3, GEN3[xi]), ActionConfig(theta))
    return linear_coords(f) if f else [ZERO] * 3


def _k_scalar(xi: int, s: int) -> QFrac:
    return qpow(2 * s * (1 - xi))  # weights b:1, h:0, c:-1


def _vk_k(k: int, s: int) -> list:
    return [qpow(2 * s * (k - i)) for i in range(2 * k + 1)]


@lru_cache(maxsize=None)
def extend_adjoint(k: int, theta: int = 0) -> tuple:
    """(B, H, C) on V_k in the basis Y^j(b^k)."""
    n = 2 * k + 1
    if k == 0:
        z = linalg.zeros(1)
        return z, [row[:] for row in z], [row[:] for row in z]
    # unknown layout: B e_i = beta_i e_{i-1}, H e_i = eta_i e_i, C e_i = gamma_i e_{i+1}
    var: dict = {}
    for i in range(1, n):
        var[("B", i)] = len(var)
    for i in range(n):
        var[("H", i)] = len(var)
    for i in range(n - 1):
        var[("C", i)] = len(var)

    def op_image(xi: int, i: int) -> dict:
        """ad_{xi}(e_i) as {basis index: {var: coeff}} (linear in the unknowns)."""
        if xi == 0:
            return {i - 1: {var[("B", i)]: ONE}} if i >= 1 else {}
        if xi == 1:
            return {i: {var[("H", i)]: ONE}}
        return {i + 1: {var[("C", i)]: ONE}} if i < n - 1 else {}

    def lin_image(xcoords, vcoords) -> dict:
        """ad_x(v) for linear x and v in V_k, as {basis index: {var: coeff}}."""
        out: dict = {}
        for xi, a in enumerate(xcoords):
            if not a:
                continue
            for i, b in enumerate(vcoords):
                if not b:
                    continue
                for idx, lin in op_image(xi, i).items():
                    slot = out.setdefault(idx, {})
                    for v, c in lin.items():
                        _add_into(slot, v, a * b * c)
        return out

    rows: list = []
    unit = [[ONE if j == i else ZERO for j in range(n)] for i in range(n)]
    for gen in (QGGen.X, QGGen.Y):
        G = _weight_action(k, gen, theta)
        if gen == QGGen.X:
            right_s, left_s = theta - 1, theta
        else:
            right_s, left_s = -theta, 1 - theta
        kr = _vk_k(k, right_s)
        for xi in range(3):
            gxi = _gen_image(gen, xi, theta)
            kxi = [ZERO] * 3
            kxi[xi] = _k_scalar(xi, left_s)
            for i in range(n):
                # g(ad_xi e_i) - ad_{g xi}(K^s e_i) - ad_{K^t xi}(g e_i) = 0
                lhs: dict = {}
                for idx, lin in op_image(xi, i).items():
                    for out_idx in range(n):
                        gcoef = G[out_idx][idx]
                        if gcoef:
                            slot = lhs.setdefault(out_idx, {})
                            for v, c in lin.items():
                                _add_into(slot, v, gcoef * c)
                ke = [x * kr[i] for x in unit[i]]
                for part in (lin_image(gxi, ke), lin_image(kxi, [G[r][i] for r in range(n)])):
                    for idx, lin in part.items():
                        slot = lhs.setdefault(idx, {})
                        for v, c in lin.items():
                            _add_into(slot, v, -c)
                rows.extend(r for r in lhs.values() if r)
    null = linalg.nullspace_sparse(rows, len(var))
    if len(null) != 1:
        raise SchurViolation(f"intertwiner space on V_{k} has dimension {len(null)}")
    s = null[0]
    B, H, C = linalg.zeros(n), linalg.zeros(n), linalg.zeros(n)
    for (name, i), col in var.items():
        if name == "B":
            B[i - 1][i] = s[col]
        elif name == "H":
            H[i][i] = s[col]
        else:
            C[i + 1][i] = s[col]
    # scale tau fixed by q^2 H B - B H = hbar B
    q2 = qpow(2)
    comm = linalg.madd(linalg.mscale(linalg.matmul(H, B), q2), linalg.matmul(B, H), -1)
    i = 1
    tau = HBAR * B[i - 1][i] / comm[i - 1][i]
    return linalg.mscale(B, tau), linalg.mscale(H, tau), linalg.mscale(C, tau)


def representation_residuals(B, H, C) -> list:
    """Residual matrices of the three enveloping relations."""
    q2 = qpow(2)
    mm, add, sc = linalg.matmul, linalg.madd, linalg.mscale
    r1 = add(add(sc(mm(H, B), q2), mm(B, H), -1), sc(B, HBAR), -1)
    r2 = add(add(sc(mm(C, H), q2), mm(H, C), -1), sc(C, HBAR), -1)
    r3 = add(
        add(sc(add(mm(B, C), mm(C, B), -1), q2 + 1), sc(mm(H, H), q2 - 1)),
        sc(H, HBAR),
        -1,
    )
    return [r1, r2, r3]


def vk_to_linear(M: list) -> list:
    """Express a V_1 operator in the basis (b, h, c)."""
    basis = build_Vk(1)
    S = linalg.transpose([linear_coords(e) for e in basis])
    return linalg.matmul(linalg.matmul(S, M), linalg.inverse(S))


# ---------------------------------------------------------------------------
# tangent operators on whole algebras

_lock = threading.Lock()
_tangent_cache: dict = {}


def tangent_matrix(op: str, k: int) -> list:
    """Matrix of a tangent operator on the degree-k monomial basis of R3."""
    key = (op, k)
    with _lock:
        hit = _tangent_cache.get(key)
    if hit is not None:
        return hit
    which = TANGENT.index(op)
    S, Sinv = _isotypic_change(k)
    blocks = []
    for j in range(k // 2 + 1):
        blocks.append(extend_adjoint(k - 2 * j)[which])
    size = len(S)
    D = linalg.zeros(size)
    off = 0
    for blk in blocks:
        for a, row in enumerate(blk):
            for b, x in enumerate(row):
                D[off + a][off + b] = x
        off += len(blk)
    M = linalg.matmul(linalg.matmul(S, D), Sinv)
    with _lock:
        _tangent_cache.setdefault(key, M)
        return _tangent_cache[key]


def _apply_r3(op: str, f: NCPoly) -> NCPoly:
    """Act per (degree, r-exponent) class; r is a central invariant."""
    classes: dict = {}
    for key, c in f.terms.items():
        classes.setdefault((sum(key[:3]), key[3]), {})[key[:3] + (0,)] = c
    out: dict = {}
    for (k, e), t in classes.items():
        v = linalg.matvec(tangent_matrix(op, k), _coords(NCPoly(R3, t), k))
        for m, c in zip(r3_monomials(k), v):
            if c:
                _add_into(out, m[:3] + (e,), c)
    return NCPoly(R3, out)


def _on_quantum(fn, f: NCPoly) -> NCPoly:
    """Run an R3 operator on R3, H2 (through the lift) or R4 (coefficientwise in l)."""
    if f.alg == R3:
        return fn(f)
    if f.alg == AlgebraId.H2:
        return to_hyperboloid(fn(lift_hyperboloid(f)))
    if f.alg == AlgebraId.R4:
        return join_l({m: fn(g) for m, g in split_l(f).items()}, AlgebraId.R4)
    raise ValueError(f"operator is defined on r3, r4, h2, not {f.alg}")


def apply_tangent(op: str, f: NCPoly) -> NCPoly:
    if op not in TANGENT:
        raise ValueError(f"unknown tangent operator {op!r}")
    return _on_quantum(lambda g: _apply_r3(op, g), f)


def _cal_r3(op: str, f: NCPoly) -> NCPoly:
    q = _q()
    g = gens(R3)
    b, h, c = g["b"], g["h"], g["c"]
    T = {name: (lambda name=name: _apply_r3(name, f)) for name in TANGENT}
    winv = W.inverse()
    if op == "calB":
        out = (h * T["Bq"]()).scale(q**2) - b * T["Hq"]()
    elif op == "calH":
        out = (b * T["Cq"]() - c * T["Bq"]()).scale(q**2 + 1) + (h * T["Hq"]()).scale(q**2 - 1)
    elif op == "calC":
        out = (c * T["Hq"]()).scale(q**2) - h * T["Cq"]()
    else:
        raise ValueError(f"unknown calligraphic operator {op!r}")
    return out.scale(winv)


def apply_cal(op: str, f: NCPoly) -> NCPoly:
    if op not in CALLIGRAPHIC:
        raise ValueError(f"unknown calligraphic operator {op!r}")
    return _on_quantum(lambda g: _cal_r3(op, g), f)


# ---------------------------------------------------------------------------
# radial derivative, bra operators and partial derivatives

def euler(f: NCPoly) -> NCPoly:
    """E = r d/dr: multiplies each term by its degree, r counted with weight 1."""
    if f.alg == AlgebraId.H2:
        raise ValueError("the Euler operator is not defined on h2")
    n = f.spec.ngens
    acc = {}
    for key, c in f.terms.items():
        d = sum(key[:n]) + key[n]
        if d:
            acc[key] = c * d
    return NCPoly(f.alg, acc)


def d_r(f: NCPoly) -> NCPoly:
    """The radial derivative E(f)/r on r3 or r4 (on r4 l has degree 1 as well)."""
    if f.alg not in (R3, AlgebraId.R4):
        raise ValueError(f"d_r is defined on r3 and r4, not {f.alg}")
    return radial_form(euler(f).r_shift(-1))


_BRA_CAL = {"b": "calB", "h": "calH", "c": "calC"}


def _bra_r3(gen: str, f: NCPoly) -> NCPoly:
    num = _cal_r3(_BRA_CAL[gen], f).scale(MU) + (NCPoly.gen(R3, gen) * euler(f)).scale(NU)
    return radial_form(num.r_shift(-2))


def bra(gen: str, f: NCPoly) -> NCPoly:
    """The operator <gen applied to f: (mu cal(f) + nu gen E(f)) / r^2."""
    if gen not in _BRA_CAL:
        raise ValueError(f"bra is defined for b, h, c, not {gen!r}")
    return _on_quantum(lambda g: _bra_r3(gen, g), f)


_PARTIAL = {"b": ("c", 1), "h": ("h", 2), "c": ("b", 3)}


def partial(gen: str, f: NCPoly) -> NCPoly:
    """d_b = q <c, d_h = q^2/2_q <h, d_c = q^3 <b; d_l differentiates l-exponents."""
    if gen == "l":
        if f.alg != AlgebraId.R4:
            raise ValueError("d_l is defined on r4 only")
        acc = {}
        for (b, h, c, l, r), v in f.terms.items():
            if l:
                acc[(b, h, c, l - 1, r)] = v * l
        return NCPoly(f.alg, acc)
    if gen not in _PARTIAL:
        raise ValueError(f"unknown partial derivative {gen!r}")
    which, e = _PARTIAL[gen]
    s = qpow(e) / TWO_Q if gen == "h" else qpow(e)
    return bra(which, f).scale(s)


def tangency_combination(f: NCPoly) -> NCPoly:
    """q^-1 b C_q(f) + h H_q(f)/2_q + q c B_q(f); vanishes identically."""
    q = _q()
    g = gens(f.alg)
    return (
        (g["b"] * apply_tangent("Cq", f)).scale(q.inverse())
        + (g["h"] * apply_tangent("Hq", f)).scale(TWO_Q.inverse())
        + (g["c"] * apply_tangent("Bq", f)).scale(q)
    )


def tangency_matrix_residual() -> list:
    """Images of b, h, c under q^-1 b C_q + h H_q/2_q + q c B_q with the degree-1 matrices.

    Column j of each adjoint matrix is expanded as an element of span(b, h, c)
    and multiplied on the left in R3; all three results vanish.
    """
    q = _q()
    g = gens(R3)
    left = {"c": g["b"].scale(q.inverse()), "h": g["h"].scale(TWO_Q.inverse()),
            "b": g["c"].scale(q)}
    out = []
    for j in range(3):
        s = NCPoly(R3)
        for x, lx in left.items():
            col = [row[j] for row in adjoint_matrix(x)]
            s = s + lx * from_linear_coords(col)
        out.append(s)
    return out


OPERATORS = {
    "Bq": lambda f: apply_tangent("Bq", f),
    "Hq": lambda f: apply_tangent("Hq", f),
    "Cq": lambda f: apply_tangent("Cq", f),
    "calB": lambda f: apply_cal("calB", f),
    "calH": lambda f: apply_cal("calH", f),
    "calC": lambda f: apply_cal("calC", f),
    "dr": d_r,
    "db": lambda f: partial("b", f),
    "dh": lambda f: partial("h", f),
    "dc": lambda f: partial("c", f),
    "dl": lambda f: partial("l", f),
}
