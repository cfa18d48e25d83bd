"""Hecke symmetry of the q-Minkowski algebra and the invariants built from it.

Operators on V (x) V are 4x4 matrices in the basis x1x1, x1x2, x2x1, x2x2.
Entry ``M[2k+l][2i+j]`` is the coefficient M_{ij}^{kl} of x_k (x) x_l in the
image of x_i (x) x_j.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from . import linalg
from .algebra import (
    AlgebraId,
    NCPoly,
    cas_element,
    gens,
    spec,
    to_text,
)
from .scalars import ONE, TWO_Q, ZERO, QFrac, qpow

Braiding = list  # 4x4 list of QFrac


def _ix(i: int, j: int) -> int:
    return 2 * i + j


def r_q() -> Braiding:
    q = qpow(1)
    return linalg.to_qfrac([
        [q, 0, 0, 0],
        [0, q - q.inverse(), 1, 0],
        [0, 1, 0, 0],
        [0, 0, 0, q],
    ])


def flip() -> Braiding:
    return linalg.to_qfrac([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]])


def check_ybe(R: Braiding) -> bool:
    I2 = linalg.identity(2)
    R12 = linalg.kron(R, I2)
    R23 = linalg.kron(I2, R)
    lhs = linalg.matmul(linalg.matmul(R12, R23), R12)
    rhs = linalg.matmul(linalg.matmul(R23, R12), R23)
    return lhs == rhs


def check_hecke(R: Braiding, q=None) -> bool:
    q = qpow(1) if q is None else QFrac.coerce(q)
    I = linalg.identity(4)
    a = linalg.madd(linalg.mscale(I, q), R, -1)
    b = linalg.madd(linalg.mscale(I, q.inverse()), R)
    return linalg.is_zero_matrix(linalg.matmul(a, b))


def skew_inverse(R: Braiding) -> Braiding:
    """Psi with sum_{a,b} R_{ia}^{kb} Psi_{bj}^{al} = delta_i^l delta_j^k."""
    n = 2
    unknown = {}
    for b in range(n):
        for j in range(n):
            for a in range(n):
                for l in range(n):
                    unknown[(b, j, a, l)] = len(unknown)
    rows, rhs = [], []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    row = {}
                    for a in range(n):
                        for b in range(n):
                            r = R[_ix(k, b)][_ix(i, a)]
                            if r:
                                col = unknown[(b, j, a, l)]
                                row[col] = row.get(col, ZERO) + r
                    rows.append({c: v for c, v in row.items() if v})
                    rhs.append(ONE if (i == l and j == k) else ZERO)
    _, piv = linalg.sparse_rref([dict(r) for r in rows], len(unknown))
    if len(piv) < len(unknown):
        raise linalg.SingularMatrixError("braiding is not skew-invertible")
    x = linalg.solve_sparse(rows, rhs, len(unknown))
    if x is None:
        raise linalg.SingularMatrixError("braiding is not skew-invertible")
    psi = linalg.zeros(4)
    for (b, j, a, l), col in unknown.items():
        psi[_ix(a, l)][_ix(b, j)] = x[col]
    return psi


def check_skew_inverse(R: Braiding, psi: Braiding) -> bool:
    n = 2
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    s = ZERO
                    for a in range(n):
                        for b in range(n):
                            s = s + R[_ix(k, b)][_ix(i, a)] * psi[_ix(a, l)][_ix(b, j)]
                    if s != (ONE if (i == l and j == k) else ZERO):
                        return False
    return True


def bc_operators(psi: Braiding) -> tuple:
    """(B, C): B_i^j = sum_a Psi_{ai}^{aj}, C_i^j = sum_a Psi_{ia}^{ja}."""
    n = 2
    B = [[sum((psi[_ix(a, j)][_ix(a, i)] for a in range(n)), ZERO) for j in range(n)]
         for i in range(n)]
    C = [[sum((psi[_ix(j, a)][_ix(i, a)] for a in range(n)), ZERO) for j in range(n)]
         for i in range(n)]
    return B, C


# ---------------------------------------------------------------------------
# matrices over an algebra

def amat_identity(alg, n: int) -> list:
    return [[NCPoly.const(alg, 1 if i == j else 0) for j in range(n)] for i in range(n)]


def amat_mul(A: list, B: list) -> list:
    n, m, p = len(A), len(B), len(B[0])
    out = []
    for i in range(n):
        row = []
        for j in range(p):
            s = A[i][0] * B[0][j]
            for k in range(1, m):
                s = s + A[i][k] * B[k][j]
            row.append(s)
        out.append(row)
    return out


def amat_add(A: list, B: list) -> list:
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def amat_sub(A: list, B: list) -> list:
    return [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def amat_scale(A: list, s) -> list:
    """Left multiplication of every entry by a scalar or an NCPoly."""
    if isinstance(s, NCPoly):
        return [[s * a for a in row] for row in A]
    return [[a.scale(s) for a in row] for row in A]


def amat_transpose(A: list) -> list:
    return [list(col) for col in zip(*A)]


def amat_is_zero(A: list) -> bool:
    return all(a.is_zero() for row in A for a in row)


def amat_text(A: list) -> str:
    return "\n".join("[" + ", ".join(to_text(a) for a in row) + "]" for row in A)


def amat_numeric(alg, P: list) -> list:
    return [[NCPoly.const(alg, QFrac.coerce(x)) for x in row] for row in P]


# ---------------------------------------------------------------------------
# the reflection-equation generators

def ad_generators(alg=AlgebraId.R4) -> dict:
    """a = (l + q h)/2_q and d = (l - q^-1 h)/2_q; in R3 and H2, l = 0."""
    alg = AlgebraId(alg)
    g = gens(alg)
    q = qpow(1)
    inv = TWO_Q.inverse()
    l = g.get("l", NCPoly(alg))
    return {
        "a": (l + g["h"].scale(q)).scale(inv),
        "d": (l - g["h"].scale(q.inverse())).scale(inv),
    }


def l_matrix(alg=AlgebraId.R4) -> list:
    ad = ad_generators(alg)
    g = gens(alg)
    return [[ad["a"], g["b"]], [g["c"], ad["d"]]]


def quantum_trace(M: list, C: list | None = None) -> NCPoly:
    """Tr(C M) = sum_{i,j} C_i^j M_j^i."""
    if len(M) != 2 or any(len(row) != 2 for row in M):
        raise ValueError("quantum trace needs a 2x2 matrix")
    if C is None:
        C = bc_operators(skew_inverse(r_q()))[1]
    out = NCPoly(M[0][0].alg)
    for i in range(2):
        for j in range(2):
            if C[i][j]:
                out = out + M[j][i].scale(C[i][j])
    return out


def casimir(alg) -> NCPoly:
    alg = AlgebraId(alg)
    if alg == AlgebraId.R3:
        return cas_element(alg)
    if alg == AlgebraId.R4:
        l = NCPoly.gen(alg, "l")
        return cas_element(alg) + (l * l).scale(TWO_Q.inverse())
    raise ValueError(f"casimir is defined on r3 and r4, not {alg}")


# ---------------------------------------------------------------------------
# covariant pairing on span(a, b, c, d)

_AD_TABLE = {("a", "a"): -1, ("b", "c"): -3, ("c", "b"): -1, ("d", "d"): -3}


def _abcd_coords(u: NCPoly) -> dict:
    s = spec(u.alg)
    if u.alg not in (AlgebraId.R3, AlgebraId.R4):
        raise ValueError("pairing is defined on the generating space of r3/r4")
    coords = {"a": ZERO, "b": ZERO, "c": ZERO, "d": ZERO}
    q = qpow(1)
    for key, c in u.terms.items():
        if key[-1] != 0 or sum(key[:-1]) != 1:
            raise ValueError(f"pairing needs linear input, got {to_text(u)}")
        g = s.gens[key[:-1].index(1)]
        # h = a - d, l = q^-1 a + q d
        if g == "h":
            coords["a"] += c
            coords["d"] -= c
        elif g == "l":
            coords["a"] += c * q.inverse()
            coords["d"] += c * q
        else:
            coords[g] += c
    return coords


def pairing(u: NCPoly, v: NCPoly) -> QFrac:
    cu, cv = _abcd_coords(u), _abcd_coords(v)
    out = ZERO
    for (x, y), e in _AD_TABLE.items():
        out = out + cu[x] * cv[y] * qpow(e)
    return out


# ---------------------------------------------------------------------------
# split Casimir matrix and Cayley-Hamilton

def split_casimir_matrix(P, alg=AlgebraId.R3) -> tuple:
    """(M, L): M = (1/2_q) P^-1 [[q^2 h, -2_q q c, 0], ...] P over alg, L = M^t."""
    alg = AlgebraId(alg)
    Pq = linalg.to_qfrac(P)
    Pinv = linalg.inverse(Pq)
    g = gens(alg)
    b, h, c = g["b"], g["h"], g["c"]
    q = qpow(1)
    z = NCPoly(alg)
    core = [
        [h.scale(q**2), c.scale(-TWO_Q * q), z],
        [-b, h.scale(q**2 - 1), c.scale(q**2)],
        [z, b.scale(TWO_Q * q), -h],
    ]
    M = amat_mul(amat_mul(amat_numeric(alg, Pinv), core), amat_numeric(alg, Pq))
    M = amat_scale(M, TWO_Q.inverse())
    return M, amat_transpose(M)


def center_basis(alg, max_degree: int = 3) -> list:
    """A spanning set of central elements used as unknown coefficients."""
    alg = AlgebraId(alg)
    if alg in (AlgebraId.H2, AlgebraId.HYPERBOLOID):
        return [NCPoly.const(alg, 1).r_shift(e) for e in range(max_degree + 1)]
    cas = cas_element(alg)
    out, p = [], NCPoly.const(alg, 1)
    for _ in range(max_degree // 2 + 1):
        out.append(p)
        p = p * cas
    return out


def _solve_central_combination(target: list, blocks: list, zbasis: list):
    """Find central z_{n,t} with target = sum_n (sum_t x_{n,t} z_t) * blocks[n]."""
    columns = []
    for blk in blocks:
        for z in zbasis:
            columns.append(amat_scale(blk, z))
    index: dict = {}

    def coords(A):
        out = {}
        for i, row in enumerate(A):
            for j, f in enumerate(row):
                for k, c in f.terms.items():
                    key = (i, j, k)
                    if key not in index:
                        index[key] = len(index)
                    out[index[key]] = c
        return out

    col_coords = [coords(A) for A in columns]
    rhs_coords = coords(target)
    m = len(index)
    rows = [dict() for _ in range(m)]
    for col, cc in enumerate(col_coords):
        for r, v in cc.items():
            rows[r][col] = v
    rhs = [rhs_coords.get(r, ZERO) for r in range(m)]
    x = linalg.solve_sparse(rows, rhs, len(columns))
    if x is None:
        return None
    coeffs = []
    nz = len(zbasis)
    for n in range(len(blocks)):
        s = NCPoly(zbasis[0].alg)
        for t, z in enumerate(zbasis):
            s = s + z.scale(x[n * nz + t])
        coeffs.append(s)
    return coeffs


class NoCentralSolution(ArithmeticError):
    pass


def ch_relation(L: list) -> tuple:
    """(c2, c1, c0) central with L^3 = c2 L^2 + c1 L + c0 I."""
    alg = L[0][0].alg
    n = len(L)
    I = amat_identity(alg, n)
    L2 = amat_mul(L, L)
    L3 = amat_mul(L2, L)
    sol = _solve_central_combination(L3, [L2, L, I], center_basis(alg, 3))
    if sol is None:
        raise NoCentralSolution("no central Cayley-Hamilton coefficients found")
    return tuple(sol)


def ch_residual(L: list, coeffs) -> list:
    alg = L[0][0].alg
    c2, c1, c0 = coeffs
    L2 = amat_mul(L, L)
    L3 = amat_mul(L2, L)
    rhs = amat_add(amat_add(amat_scale(L2, c2), amat_scale(L, c1)),
                   amat_scale(amat_identity(alg, len(L)), c0))
    return amat_sub(L3, rhs)


def classical_char_poly(M: list) -> tuple:
    """(tr, -e2, det) so that M^3 = tr M^2 - e2 M + det I for commutative entries."""
    tr = M[0][0] + M[1][1] + M[2][2]
    e2 = NCPoly(M[0][0].alg)
    for i in range(3):
        for j in range(i + 1, 3):
            e2 = e2 + M[i][i] * M[j][j] - M[i][j] * M[j][i]
    det = (M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1])
           - M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0])
           + M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]))
    return tr, -e2, det


@dataclass
class SearchResult:
    solvable: bool
    coeffs: tuple | None = None
    notes: list = field(default_factory=list)


def idempotent_poly_search(P, target: list | None = None) -> SearchResult:
    """Look for central alpha, beta, gamma with target = alpha L^2 + beta L + gamma I over H2.

    ``target`` defaults to the hyperboloid idempotent ebar.
    """
    from .laplace import idempotent

    _, L = split_casimir_matrix(P, AlgebraId.H2)
    if target is None:
        target = idempotent(AlgebraId.H2)[0]
    I = amat_identity(AlgebraId.H2, 3)
    L2 = amat_mul(L, L)
    zb = [NCPoly.const(AlgebraId.H2, 1).r_shift(e) for e in range(-4, 5)]
    sol = _solve_central_combination(target, [L2, L, I], zb)
    if sol is None:
        return SearchResult(False, None, ["inconsistent linear system over span(r^-4..r^4)"])
    return SearchResult(True, tuple(sol), [f"{n} = {to_text(c)}" for n, c in zip("abg", sol)])
