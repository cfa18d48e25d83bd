"""Registered verification checks and machine-readable reports."""
from __future__ import annotations

import itertools
import json
import time
from dataclasses import asdict, dataclass, field

from . import classical as cl
from . import linalg
from .action import ActionConfig, QGGen, act, check_module_algebra, is_invariant
from .algebra import (
    AlgebraId,
    NCPoly,
    cas_element,
    check_confluence,
    commutator,
    gens,
    radial_form,
    specialize,
    to_text,
)
from .fields import (
    adjoint_matrix,
    apply_cal,
    apply_tangent,
    bra,
    build_Vk,
    d_r,
    extend_adjoint,
    partial,
    representation_residuals,
    tangency_combination,
    tangency_matrix_residual,
    vk_to_linear,
)
from .laplace import (
    gauge_check,
    idempotent,
    laplace,
    maxwell,
    monomials,
)
from .rmatrix import (
    amat_is_zero,
    amat_mul,
    bc_operators,
    casimir,
    ch_relation,
    ch_residual,
    check_hecke,
    check_skew_inverse,
    check_ybe,
    classical_char_poly,
    flip,
    idempotent_poly_search,
    l_matrix,
    pairing,
    quantum_trace,
    r_q,
    skew_inverse,
    split_casimir_matrix,
)
from .scalars import qpow

REPORT_VERSION = 1
STATUSES = ("pass", "fail", "hypothesis-failed", "reported")

R3, R4, H2 = AlgebraId.R3, AlgebraId.R4, AlgebraId.H2
SL2, GL2, HYP = AlgebraId.SL2, AlgebraId.GL2, AlgebraId.HYPERBOLOID


@dataclass
class CheckReport:
    check_id: str
    statement: str
    status: str
    witness: str | None = None
    max_degree: int = 0
    theta: int = 0
    elapsed: float = 0.0
    details: list = field(default_factory=list)

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"bad status {self.status!r}")
        if self.status == "fail" and not self.witness:
            self.witness = "(no witness recorded)"


@dataclass(frozen=True)
class Config:
    max_degree: int = 3
    thetas: tuple = (0,)
    seed: int = 0


# ---------------------------------------------------------------------------
# helpers

def _zero(f: NCPoly) -> bool:
    return radial_form(f).is_zero()


def _first_bad(pairs) -> str | None:
    """pairs: iterable of (label, residual NCPoly); first nonzero residual."""
    for label, res in pairs:
        if not _zero(res):
            return f"{label}: {to_text(radial_form(res))}"
    return None


def _agree_q1(quantum: NCPoly, oracle: NCPoly) -> bool:
    return radial_form(specialize(quantum, 1) - oracle).is_zero()


def _classical_image(f: NCPoly) -> NCPoly:
    return specialize(f, 1)


# ---------------------------------------------------------------------------
# algebra core

def check_rewriting(cfg: Config) -> list:
    out = []
    for alg in (R4, R3, H2):
        rep = check_confluence(alg, max(3, cfg.max_degree), samples=200, seed=cfg.seed)
        rep4 = check_confluence(alg, 4, samples=200, seed=cfg.seed + 1) if cfg.max_degree < 4 else rep
        ok = rep.passed and rep4.passed
        out.append(("rewriting", f"confluence-{alg}",
                    "critical pairs resolve and products are associative", ok,
                    rep.witness or rep4.witness, rep.details + rep4.details))
    return out


def check_dimension_counts(cfg: Config) -> list:
    from math import comb

    bad = None
    for k in range(cfg.max_degree + 1):
        n3 = sum(1 for _ in monomials(R3, k, k))
        n4 = sum(1 for _ in monomials(R4, k, k))
        if n3 != (k + 1) * (k + 2) // 2 or n4 != comb(k + 3, 3):
            bad = f"degree {k}: {n3}, {n4}"
    h2 = cas_element(R3)
    red = NCPoly(H2, h2.terms).reduced() - NCPoly.const(H2, 1).r_shift(2)
    if red:
        bad = f"Cas_sl - r^2 reduces to {to_text(red)} in h2"
    return [("rewriting", "dimensions", "PBW dimension counts; Cas_sl = r^2 on h2", bad is None, bad, [])]


# ---------------------------------------------------------------------------
# R-matrix, traces, Casimirs

def check_rmatrix(cfg: Config) -> list:
    R = r_q()
    psi = skew_inverse(R)
    B, C = bc_operators(psi)
    q = qpow(1)
    out = [
        ("rmatrix", "ybe", "R_q satisfies the braid relation", check_ybe(R), None, []),
        ("rmatrix", "hecke", "(qI - R)(q^-1 I + R) = 0", check_hecke(R), None, []),
        ("rmatrix", "skew-inverse", "sum R_ia^kb Psi_bj^al = delta_i^l delta_j^k",
         check_skew_inverse(R, psi), None, []),
        ("rmatrix", "c-operator", "C = diag(q^-3, q^-1)",
         C == [[qpow(-3), 0 * q], [0 * q, qpow(-1)]], str(C), []),
        ("rmatrix", "b-operator", "B = diag(q^-1, q^-3)",
         B == [[qpow(-1), 0 * q], [0 * q, qpow(-3)]], str(B), []),
        ("rmatrix", "flip", "the flip is a braiding and its own skew-inverse",
         check_ybe(flip()) and check_hecke(flip(), 1) and skew_inverse(flip()) == flip(), None, []),
    ]
    return out


def check_centrality(cfg: Config) -> list:
    L = l_matrix(R4)
    g = gens(R4)
    L2 = amat_mul(L, L)
    L3 = amat_mul(L2, L)
    tr1 = quantum_trace(L)
    tr2 = quantum_trace(L2)
    tr3 = quantum_trace(L3)
    elems = {"l": g["l"], "Tr_q L": tr1, "q^2 Tr_q L^2": tr2.scale(qpow(2)),
             "Tr_q L^3": tr3}
    pairs = [(f"[{n}, {x}]", commutator(e, g[x])) for n, e in elems.items() for x in "bhcl"]
    cas3 = cas_element(R3)
    pairs += [(f"[Cas_sl, {x}]", commutator(cas3, NCPoly.gen(R3, x))) for x in "bhc"]
    bad = _first_bad(pairs)
    out = [("centrality", "central-elements", "l, Tr_q L^k and Cas_sl are central", bad is None, bad, [])]
    ok = tr2.scale(qpow(2)) == casimir(R4) and tr1.scale(qpow(2)) == g["l"]
    out.append(("centrality", "casimir-gl", "q^2 Tr_q L = l and q^2 Tr_q L^2 = Cas_gl", ok,
                None if ok else to_text(tr2.scale(qpow(2)) - casimir(R4)), []))
    return out


def check_pairing(cfg: Config) -> list:
    """Table values and invariance of the pairing under the theta = 0 action."""
    g = gens(R4)
    base = [g[x] for x in "bhcl"]
    bad = None
    for th in cfg.thetas:
        c = ActionConfig(th)
        for u, v in itertools.product(base, repeat=2):
            for gen, (ls, rs) in ((QGGen.X, (th - 1, th)), (QGGen.Y, (-th, 1 - th))):
                # <g u, K^ls v> + <K^rs u, g v> = 0
                Kl = _kpow(v, ls, c)
                Kr = _kpow(u, rs, c)
                gu, gv = act(gen, u, c), act(gen, v, c)
                val = (pairing(gu, Kl) if gu else 0) + (pairing(Kr, gv) if gv else 0)
                if val:
                    bad = f"{gen.value} on ({to_text(u)}, {to_text(v)}) theta={th}: {val}"
            if pairing(act(QGGen.K, u, c), act(QGGen.K, v, c)) != pairing(u, v):
                bad = f"K on ({to_text(u)}, {to_text(v)})"
    return [("pairing", "covariance", "the pairing on span(b,h,c,l) is U_q(sl(2))-invariant",
             bad is None, bad, [])]


def _kpow(f: NCPoly, s: int, c: ActionConfig) -> NCPoly:
    gen = QGGen.K if s >= 0 else QGGen.Kinv
    for _ in range(abs(s)):
        f = act(gen, f, c)
    return f


# ---------------------------------------------------------------------------
# covariance

def check_covariance(cfg: Config) -> list:
    out = []
    for th in sorted(set(cfg.thetas) | {0, 1, 2}):
        c = ActionConfig(th)
        for alg in (R4, R3, H2):
            rep = check_module_algebra(alg, c, min(cfg.max_degree, 3))
            out.append(("covariance", f"module-algebra-{alg}-theta{th}",
                        "X, Y, K map each defining relation into the ideal; Hopf relations hold",
                        rep.passed, rep.witness, rep.details, th))
        # relations written in a, b, c, d
        from .parser import parse_poly

        rels = ["q*a*b - q^-1*b*a", "q*c*a - q^-1*a*c", "a*d - d*a",
                "q*(b*c - c*b) - (q - q^-1)*a*(d - a)", "q*(c*d - d*c) - (q - q^-1)*c*a",
                "q*(d*b - b*d) - (q - q^-1)*a*b"]
        bad = None
        for text in rels:
            # the relation itself vanishes, and so do its images (as words)
            if parse_poly(text, R4):
                bad = f"{text} is not a relation"
        ok_inv = is_invariant(cas_element(R3), c) and is_invariant(NCPoly.gen(R4, "l") ** 2, c)
        out.append(("covariance", f"abcd-relations-theta{th}",
                    "the a,b,c,d relations hold and Cas_sl, l^2 are invariant",
                    bad is None and ok_inv, bad, [], th))
    return out


def check_delta_covariance(cfg: Config) -> list:
    """X and Y commute with the R3 Laplacian (theta = 0 action)."""
    c = ActionConfig(0)
    pairs = []
    for m in monomials(R3, min(cfg.max_degree, 3)):
        for gen in (QGGen.X, QGGen.Y, QGGen.K):
            pairs.append((f"{gen.value} on {to_text(m)}",
                          act(gen, laplace(R3, m), c) - laplace(R3, act(gen, m, c))))
    bad = _first_bad(pairs)
    return [("covariance", "laplace-r3", "the R3 Laplacian commutes with X, Y, K", bad is None, bad, [])]


# ---------------------------------------------------------------------------
# braided fields

def check_tangency(cfg: Config) -> list:
    res = tangency_matrix_residual()
    ok1 = all(x.is_zero() for x in res)
    deg = max(cfg.max_degree, 4)
    bad = _first_bad((to_text(m), tangency_combination(m)) for m in monomials(R3, deg))
    return [
        ("fields", "tangency-matrices", "q^-1 b C_q + h H_q/2_q + q c B_q = 0 on span(b,h,c)",
         ok1, None if ok1 else str([to_text(x) for x in res]), []),
        ("fields", "tangency-extended", "the extended operators satisfy the same relation",
         bad is None, bad, [f"degree <= {deg}"]),
    ]


def check_representation(cfg: Config) -> list:
    bad = None
    for k in range(4):
        res = representation_residuals(*extend_adjoint(k))
        if not all(linalg.is_zero_matrix(r) for r in res):
            bad = f"enveloping relations fail on V_{k}"
    k1 = [vk_to_linear(m) == adjoint_matrix(x) for m, x in zip(extend_adjoint(1), "bhc")]
    if not all(k1):
        bad = "V_1 matrices differ from the adjoint matrices"
    # theta independence of the extension, in monomial coordinates
    for th in cfg.thetas:
        for k in (1, 2):
            mats = extend_adjoint(k, th)
            basis = build_Vk(k, th)
            for which, name in enumerate(("Bq", "Hq", "Cq")):
                for i, e in enumerate(basis):
                    img = NCPoly(R3)
                    for j, f in enumerate(basis):
                        if mats[which][j][i]:
                            img = img + f.scale(mats[which][j][i])
                    if img != apply_tangent(name, e):
                        bad = f"{name} on V_{k} depends on theta={th}"
    return [("fields", "representation", "extended B_q, H_q, C_q satisfy the enveloping relations, k <= 3",
             bad is None, bad, [])]


def check_quotient_compat(cfg: Config) -> list:
    cas = cas_element(R3)
    pairs = []
    for m in monomials(R3, min(cfg.max_degree, 3)):
        for op in ("Bq", "Hq", "Cq"):
            pairs.append((f"{op}(Cas*{to_text(m)})",
                          apply_tangent(op, cas * m) - cas * apply_tangent(op, m)))
    bad = _first_bad(pairs)
    return [("fields", "quotient", "tangent operators commute with multiplication by Cas_sl",
             bad is None, bad, [])]


def check_bra_pairing(cfg: Config) -> list:
    g = gens(R3)
    bad = None
    vals = []
    for x, y in itertools.product("bhc", repeat=2):
        v = bra(x, g[y])
        expect = pairing(g[x], g[y])
        vals.append(f"<{x},{y}> = {to_text(v)}")
        if not v.is_scalar() or v.scalar_value() != expect:
            bad = f"<{x} applied to {y} gives {to_text(v)}, expected {expect}"
    return [("fields", "bra-pairing", "bra operators reproduce the covariant pairing (mu=q^-4, nu=q^-2)",
             bad is None, bad, vals)]


# ---------------------------------------------------------------------------
# idempotents and gauge kernels

def check_idempotents(cfg: Config) -> list:
    out = []
    for alg in (H2, AlgebraId.SPHERE, HYP):
        eb, e = idempotent(alg)
        norm = (lambda A: [[radial_form(x) for x in row] for row in A]) if alg == AlgebraId.SPHERE else (lambda A: A)
        z = [[NCPoly(alg)] * 3 for _ in range(3)]
        ok = (
            norm(amat_mul(eb, eb)) == norm(eb)
            and norm(amat_mul(e, e)) == norm(e)
            and norm(amat_mul(e, eb)) == z
            and norm(amat_mul(eb, e)) == z
        )
        out.append(("idempotents", f"idempotent-{alg}", "ebar^2 = ebar, e^2 = e, e ebar = ebar e = 0",
                    ok, None if ok else "idempotent relations fail", []))
    return out


def check_gauge_classical(cfg: Config) -> list:
    out = []
    deg = cfg.max_degree
    for alg in (AlgebraId.SPHERE, SL2, AlgebraId.MINKOWSKI, HYP):
        rhos = list(monomials(alg, deg))
        rep = gauge_check(alg, rhos, deg)
        out.append(("gauge", f"gauge-{alg}", "gradient-type columns lie in Ker(Mw)",
                    rep.passed, rep.witness, rep.details[-3:]))
    # flat R^3 and the t = 0 restriction of Minkowski
    bad = None
    for rho in monomials(AlgebraId.SPHERE, deg):
        if any(not x.is_zero() for x in cl.maxwell_flat_r3(cl.gradient(AlgebraId.SPHERE, rho))):
            bad = f"flat R^3 gauge fails on {to_text(rho)}"
    bad = bad or _minkowski_restriction(deg)
    out.append(("gauge", "gauge-flat-r3", "flat R^3 gradients lie in Ker(Mw); t=0 restriction gives -Mw",
                bad is None, bad, []))
    return out


def _to_space(f: NCPoly) -> NCPoly:
    """Minkowski element free of t -> K[x, y, z]."""
    return NCPoly(AlgebraId.SPHERE, {k[1:]: c for k, c in f.terms.items()})


def _from_space(f: NCPoly) -> NCPoly:
    return NCPoly(AlgebraId.MINKOWSKI, {(0,) + k: c for k, c in f.terms.items()})


def _minkowski_restriction(deg: int) -> str | None:
    for rho in monomials(AlgebraId.SPHERE, deg):
        for slot in range(3):
            v3 = [NCPoly(AlgebraId.SPHERE)] * 3
            v3[slot] = rho
            v4 = [NCPoly(AlgebraId.MINKOWSKI)] + [_from_space(x) for x in v3]
            m4 = cl.maxwell_minkowski(v4)
            m3 = cl.maxwell_flat_r3(v3)
            if m4[0] or any(_to_space(a) + b for a, b in zip(m4[1:], m3)):
                return f"t=0 restriction mismatch on {to_text(rho)} in slot {slot}"
    return None


def check_gauge_quantum(cfg: Config) -> list:
    out = []
    deg = min(cfg.max_degree, 2)
    for alg in (R3, H2, R4):
        rhos = list(monomials(alg, deg))
        rep = gauge_check(alg, rhos, deg)
        for d, ok in rep.hypothesis.items():
            out.append(("gauge", f"gauge-hypothesis-{alg}-deg{d}",
                        "the Laplacian commutes with the gradient-type column",
                        "pass" if ok else "hypothesis-failed", None,
                        [x for x in rep.details if x.startswith(f"hypothesis fails at degree {d}")]))
        out.append(("gauge", f"gauge-conclusion-{alg}",
                    "Mw(gradient column) = 0 wherever the hypothesis verifies",
                    rep.passed, rep.witness, [x for x in rep.details if x.startswith("rho")]))
    return out


# ---------------------------------------------------------------------------
# q -> 1 limits

def _sl2_ops() -> dict:
    P = cl.pois_fields()
    C = cl.sl2_cal_fields()
    d = cl.partials(SL2)
    br = cl.sl2_bras()
    return {
        "Bq": P["B"], "Hq": P["H"], "Cq": P["C"],
        "calB": C["calB"], "calH": C["calH"], "calC": C["calC"],
        "<b": br["b"], "<h": br["h"], "<c": br["c"],
        "db": d["b"], "dh": d["h"], "dc": d["c"],
    }


def _quantum_ops() -> dict:
    return {
        "Bq": lambda f: apply_tangent("Bq", f),
        "Hq": lambda f: apply_tangent("Hq", f),
        "Cq": lambda f: apply_tangent("Cq", f),
        "calB": lambda f: apply_cal("calB", f),
        "calH": lambda f: apply_cal("calH", f),
        "calC": lambda f: apply_cal("calC", f),
        "<b": lambda f: bra("b", f),
        "<h": lambda f: bra("h", f),
        "<c": lambda f: bra("c", f),
        "db": lambda f: partial("b", f),
        "dh": lambda f: partial("h", f),
        "dc": lambda f: partial("c", f),
    }


def limit_report(max_degree: int = 3) -> list:
    """[(label, ok, witness)] comparing q = 1 values with the classical oracle."""
    out = []
    # adjoint matrices: columns are the Poisson brackets {g, basis}
    P = cl.pois_fields()
    gs = gens(SL2)
    ok = True
    for g, name in zip("bhc", ("B", "H", "C")):
        M = adjoint_matrix(g)
        for j, x in enumerate("bhc"):
            col = sum((gs[y].scale(M[i][j].specialize(1)) for i, y in enumerate("bhc")), NCPoly(SL2))
            ok &= col == P[name](gs[x])
    out.append(("adjoint matrices", ok, None))
    qops, cops = _quantum_ops(), _sl2_ops()
    for name in qops:
        bad = None
        for m in monomials(R3, max_degree):
            if not _agree_q1(qops[name](m), cops[name](_classical_image(m))):
                bad = f"{name} on {to_text(m)}"
                break
        out.append((f"{name} on r3", bad is None, bad))
    # hyperboloid: tangent and calligraphic operators
    for name in ("Bq", "Hq", "Cq", "calB", "calH", "calC"):
        bad = None
        for m in monomials(H2, max_degree):
            if specialize(qops[name](m), 1) != cops[name](_classical_image(m)):
                bad = f"{name} on h2 {to_text(m)}"
                break
        out.append((f"{name} on h2", bad is None, bad))
    # radial derivative, Laplacians
    checks = [
        ("d_r on r3", R3, d_r, cl.d_r),
        ("Laplacian on r3", R3, lambda f: laplace(R3, f), cl.laplace_sl2),
        ("Laplacian on r4", R4, lambda f: laplace(R4, f), cl.laplace_sl2),
        ("d_l on r4", R4, lambda f: partial("l", f), cl.partials(GL2)["l"]),
        ("Laplacian on h2", H2, lambda f: laplace(H2, f), cl.laplace_hyperboloid),
    ]
    for label, alg, qop, cop in checks:
        bad = None
        for m in monomials(alg, max_degree):
            if not _agree_q1(qop(m), cop(_classical_image(m))):
                bad = f"{label}: {to_text(m)}"
                break
        out.append((label, bad is None, bad))
    # Maxwell operators on unit-slot columns (r3, r4) and module columns (h2)
    for alg, n in ((R3, 3), (R4, 4)):
        bad = None
        for m in monomials(alg, max_degree):
            for slot in range(n):
                v = [NCPoly(alg)] * n
                v[slot] = m
                qv = maxwell(alg, v)
                cv = cl.maxwell_sl2([_classical_image(x) for x in v])
                if not all(_agree_q1(a, b) for a, b in zip(qv, cv)):
                    bad = f"Mw on {alg} slot {slot}, {to_text(m)}"
        out.append((f"Maxwell on {alg}", bad is None, bad))
    bad = None
    _, e = idempotent(H2)
    for m in monomials(H2, max_degree - 1):
        for slot in range(3):
            v = [NCPoly(H2)] * 3
            v[slot] = m
            v = _h2_apply(e, v)
            qv = maxwell(H2, v)
            cv = cl.maxwell_hyperboloid([_classical_image(x) for x in v])
            if any(specialize(a, 1) != b for a, b in zip(qv, cv)):
                bad = f"Mw on h2 slot {slot}, {to_text(m)}"
    out.append(("Maxwell on h2", bad is None, bad))
    eb_q, _ = idempotent(H2)
    eb_c, _ = cl.idempotent(HYP)
    ok = all(specialize(a, 1) == b for ra, rb in zip(eb_q, eb_c) for a, b in zip(ra, rb))
    out.append(("idempotent on h2", ok, None))
    d = laplace(R3, cas_element(R3))
    ok = d.is_scalar() and specialize(d, 1) == NCPoly.const(SL2, 6)
    out.append(("Laplacian of Cas_sl equals 6 at q=1", ok, to_text(d)))
    return out


def _h2_apply(M, v):
    from .laplace import apply_matrix

    return apply_matrix(M, v)


def check_limits(cfg: Config) -> list:
    out = []
    for label, ok, wit in limit_report(min(cfg.max_degree, 3)):
        out.append(("limits", "q1-" + label.replace(" ", "-"), f"q = 1 value of {label} matches the classical oracle",
                    ok, wit, []))
    return out


# ---------------------------------------------------------------------------
# Cayley-Hamilton

def check_ch(cfg: Config) -> list:
    out = []
    I3 = linalg.identity(3)
    for alg in (R3, H2):
        _, L = split_casimir_matrix(I3, alg)
        coeffs = ch_relation(L)
        ok = amat_is_zero(ch_residual(L, coeffs))
        central = all(
            commutator(c, NCPoly.gen(alg, x)).is_zero() for c in coeffs for x in "bhc"
        )
        scalar = alg != H2 or all(c.is_scalar() for c in coeffs)
        out.append(("ch", f"ch-{alg}", "L^3 = c2 L^2 + c1 L + c0 I with central coefficients",
                    ok and central and scalar, None if ok else "nonzero residual",
                    [to_text(c) for c in coeffs]))
    # classical: the ordinary characteristic polynomial
    M, _ = split_casimir_matrix(I3, R3)
    Mc = [[specialize(x, 1) for x in row] for row in M]
    Lc = [list(col) for col in zip(*Mc)]
    cp = classical_char_poly(Lc)
    _, Lq = split_casimir_matrix(I3, R3)
    qc = ch_relation(Lq)
    ok = all(radial_form(specialize(a, 1) - b).is_zero() for a, b in zip(qc, cp))
    out.append(("ch", "ch-classical", "q = 1 coefficients equal the characteristic polynomial", ok,
                None if ok else str([to_text(x) for x in cp]), []))
    res = idempotent_poly_search(I3)
    out.append(("ch", "idempotent-search", "degree-2 polynomial in L equal to ebar (P = I)",
                "reported", None, [f"solvable: {res.solvable}"] + res.notes))
    return out


# ---------------------------------------------------------------------------
# classical suite

def classical_suite(max_degree: int = 4) -> list:
    """Sphere, sl(2)* and Minkowski identities as exact operator identities."""
    out = []
    S = AlgebraId.SPHERE
    g = gens(S)
    R = cl.rotation_fields()
    C = cl.sphere_cal_fields()
    mons = list(monomials(S, max_degree))
    bad = _first_bad(
        (to_text(m), g["x"] * R["X"](m) + g["y"] * R["Y"](m) + g["z"] * R["Z"](m)) for m in mons
    )
    out.append(("tangency-sphere", "x X + y Y + z Z = 0", bad))
    bad = _first_bad(
        (to_text(m),
         sum((C[k](C[k](m)) for k in C), NCPoly(S)) - sum((R[k](R[k](m)) for k in R), NCPoly(S)).r_shift(2))
        for m in mons
    )
    out.append(("sphere-laplacian-forms", "calX^2 + calY^2 + calZ^2 = r^2 (X^2 + Y^2 + Z^2)", bad))
    bad = None
    for m in mons:
        for k, x in (("calX", "x"), ("calY", "y"), ("calZ", "z")):
            lhs = cl.laplace_sphere(C[k](m)) - C[k](cl.laplace_sphere(m))
            if not _zero(lhs + (g[x] * cl.laplace_sphere(m)).scale(2)):
                bad = f"{k} on {to_text(m)}"
    out.append(("sphere-commutator", "Delta calX - calX Delta = -2 x Delta and cyclic", bad))
    bad = _first_bad(
        (to_text(m), cl.laplace_sphere_cal(m) - cl.laplace_sphere(m)) for m in mons
    )
    out.append(("sphere-laplacian-lemma", "(calX^2+calY^2+calZ^2)/r^4 = (X^2+Y^2+Z^2)/r^2", bad))
    # sl(2)*: tangency, bra operators through calligraphic fields
    gs = gens(SL2)
    P = cl.pois_fields()
    ms = list(monomials(SL2, max_degree))
    bad = _first_bad(
        (to_text(m), gs["c"] * P["B"](m) + (gs["h"] * P["H"](m)).scale(cl.HALF) + gs["b"] * P["C"](m))
        for m in ms
    )
    out.append(("tangency-sl2", "c B + h H/2 + b C = 0", bad))
    CC = cl.sl2_cal_fields()
    br = cl.sl2_bras()
    bad = None
    for m in ms:
        for x, k in (("b", "calB"), ("h", "calH"), ("c", "calC")):
            rhs = CC[k](m).r_shift(-2) + gs[x] * cl.d_r(m).r_shift(-1)
            if not _zero(br[x](m) - rhs):
                bad = f"<{x} on {to_text(m)}"
    out.append(("sl2-bra-decomposition", "<x = cal(x)/r^2 + (x/r) d_r for x in b, h, c", bad))
    bad = _first_bad(
        (to_text(m), cl.laplace_sl2(m) - (br["b"](br["c"](m)) + br["h"](br["h"](m)).scale(cl.HALF)
                                          + br["c"](br["b"](m))))
        for m in ms
    )
    out.append(("sl2-laplacian", "Delta = <b<c + <h<h/2 + <c<b", bad))
    # hyperboloid Laplacian in Poisson form
    bad = None
    for m in monomials(HYP, max_degree):
        alt = (P["B"](P["C"](m)) + P["H"](P["H"](m)).scale(cl.HALF) + P["C"](P["B"](m))).r_shift(-2)
        if cl.laplace_hyperboloid(m) != alt.scale(-cl.HALF):
            bad = f"on {to_text(m)}"
    out.append(("hyperboloid-laplacian-forms", "(calB calC + calH^2/2 + calC calB)/r^4 = -(BC + H^2/2 + CB)/(2 r^2)", bad))
    return out


def check_classical(cfg: Config) -> list:
    deg = max(cfg.max_degree, 4)
    out = [("classical", f"classical-{name}", stmt, bad is None, bad, [f"degree <= {deg}"])
           for name, stmt, bad in classical_suite(deg)]
    return out


# ---------------------------------------------------------------------------
# registry and runner

QUANTUM_CHECKS: list = [
    check_rewriting, check_dimension_counts, check_rmatrix, check_centrality, check_pairing,
    check_covariance, check_delta_covariance, check_tangency, check_representation,
    check_quotient_compat, check_bra_pairing, check_idempotents, check_gauge_quantum,
    check_limits, check_ch,
]
CLASSICAL_CHECKS: list = [check_classical, check_gauge_classical]
SUITES = {"quantum": QUANTUM_CHECKS, "classical": CLASSICAL_CHECKS,
          "all": QUANTUM_CHECKS + CLASSICAL_CHECKS}


def _to_report(item, cfg: Config, elapsed: float) -> CheckReport:
    _, check_id, statement, ok, witness, details, *rest = item
    theta = rest[0] if rest else cfg.thetas[0]
    status = ok if isinstance(ok, str) else ("pass" if ok else "fail")
    return CheckReport(check_id, statement, status, witness if status == "fail" else None,
                       cfg.max_degree, theta, round(elapsed, 3), list(details))


def run_checks(checks, cfg: Config) -> list:
    reports = []
    for fn in checks:
        t0 = time.perf_counter()
        items = fn(cfg)
        dt = time.perf_counter() - t0
        for item in items:
            reports.append(_to_report(item, cfg, dt / max(1, len(items))))
    return reports


def run_verify(suite: str, max_degree: int = 3, thetas=(0,), seed: int = 0) -> dict:
    if suite not in SUITES:
        raise KeyError(f"unknown suite {suite!r}")
    cfg = Config(max_degree, tuple(thetas), seed)
    reports = run_checks(SUITES[suite], cfg)
    return {
        "version": REPORT_VERSION,
        "config": {"theta": list(thetas), "max_degree": max_degree, "seed": seed, "suite": suite},
        "checks": [asdict(r) for r in reports],
    }


def failed(doc: dict) -> list:
    return [c for c in doc["checks"] if c["status"] == "fail"]


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=False)
