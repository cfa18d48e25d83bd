"""Braided Laplace and Maxwell operators with their gauge checks."""
from __future__ import annotations

import itertools

from . import classical as cl
from .algebra import AlgebraId, NCPoly, Report, radial_form, spec, to_text
from .fields import apply_cal, partial
from .rmatrix import amat_identity, amat_mul, amat_sub
from .scalars import TWO_Q, qpow

R3, R4, H2 = AlgebraId.R3, AlgebraId.R4, AlgebraId.H2


class NotInModule(ValueError):
    pass


def _q():
    return qpow(1)


# ---------------------------------------------------------------------------
# idempotents

def _h2_columns():
    q = _q()
    g = {x: NCPoly.gen(H2, x) for x in "bhc"}
    left = [g["c"].scale(q.inverse()), g["h"].scale(TWO_Q.inverse()), g["b"].scale(q)]
    return left, [g["b"], g["h"], g["c"]]


def idempotent(alg) -> tuple:
    """(ebar, e) with ebar^2 = ebar verified on construction."""
    alg = AlgebraId(alg)
    if alg != H2:
        return cl.idempotent(alg)
    left, right = _h2_columns()
    ebar = [[(u * v).r_shift(-2) for v in right] for u in left]
    e = amat_sub(amat_identity(H2, 3), ebar)
    if amat_sub(amat_mul(ebar, ebar), ebar) != amat_sub(ebar, ebar):
        raise ArithmeticError("ebar is not idempotent")
    return ebar, e


def apply_matrix(M: list, v: list) -> list:
    return cl.apply_matrix(M, v) if v[0].alg != H2 else _h2_apply(M, v)


def _h2_apply(M, v):
    out = []
    for row in M:
        s = NCPoly(H2)
        for a, x in zip(row, v):
            s = s + a * x
        out.append(s)
    return out


def module_membership(alg, v: list) -> bool:
    """True iff e v = v, i.e. ebar v = 0."""
    alg = AlgebraId(alg)
    ebar, _ = idempotent(alg)
    return all(x.is_zero() for x in apply_matrix(ebar, v))


# ---------------------------------------------------------------------------
# Laplace operators

def _delta_r3_part(f: NCPoly) -> NCPoly:
    """q^-5 d_c d_b + 2_q q^-4 d_h d_h + q^-3 d_b d_c (r3, coefficientwise on r4)."""
    return (
        partial("c", partial("b", f)).scale(qpow(-5))
        + partial("h", partial("h", f)).scale(TWO_Q * qpow(-4))
        + partial("b", partial("c", f)).scale(qpow(-3))
    )


def _delta_h2(f: NCPoly) -> NCPoly:
    q = _q()
    B = lambda g: apply_cal("calB", g)
    H = lambda g: apply_cal("calH", g)
    C = lambda g: apply_cal("calC", g)
    s = B(C(f)).scale(q.inverse()) + H(H(f)).scale(TWO_Q.inverse()) + C(B(f)).scale(q)
    return s.scale(qpow(-8)).r_shift(-4)


def laplace(alg, f: NCPoly) -> NCPoly:
    alg = AlgebraId(alg)
    if f.alg != alg:
        raise ValueError(f"element of {f.alg} passed to the {alg} Laplacian")
    if alg == R3:
        return _delta_r3_part(f)
    if alg == R4:
        dl = partial("l", partial("l", f))
        return _delta_r3_part(f) + dl.scale(TWO_Q * qpow(-4))
    if alg == H2:
        return _delta_h2(f)
    if alg == AlgebraId.SPHERE:
        return cl.laplace_sphere(f)
    if alg in (AlgebraId.SL2, AlgebraId.GL2):
        return cl.laplace_sl2(f)
    if alg == AlgebraId.HYPERBOLOID:
        return cl.laplace_hyperboloid(f)
    if alg == AlgebraId.MINKOWSKI:
        return cl.laplace_minkowski(f)
    raise ValueError(f"no Laplacian on {alg}")


# ---------------------------------------------------------------------------
# Maxwell operators

def _row_coeffs():
    return {"c": qpow(-5), "h": qpow(-4) * TWO_Q, "b": qpow(-3), "l": TWO_Q * qpow(-4)}


def divergence(alg, v: list) -> NCPoly:
    """The row (q^-5 d_c, q^-4 2_q d_h, q^-3 d_b[, 2_q q^-4 d_l]) applied to v."""
    rc = _row_coeffs()
    order = ("c", "h", "b", "l")[: len(v)]
    out = NCPoly(AlgebraId(alg))
    for g, vi in zip(order, v):
        out = out + partial(g, vi).scale(rc[g])
    return out


def h2_gauge_operators():
    """(q^-1 calC, calH/2_q, q calB) as callables."""
    q = _q()
    return (
        lambda f: apply_cal("calC", f).scale(q.inverse()),
        lambda f: apply_cal("calH", f).scale(TWO_Q.inverse()),
        lambda f: apply_cal("calB", f).scale(q),
    )


def maxwell(alg, v: list) -> list:
    alg = AlgebraId(alg)
    if any(x.alg != alg for x in v):
        raise ValueError("column entries must belong to the chosen algebra")
    if alg == R3:
        if len(v) != 3:
            raise ValueError("r3 Maxwell needs a 3-column")
        div = divergence(alg, v)
        return [laplace(alg, vi) - partial(g, div) for vi, g in zip(v, "bhc")]
    if alg == R4:
        if len(v) != 4:
            raise ValueError("r4 Maxwell needs a 4-column")
        div = divergence(alg, v)
        return [laplace(alg, vi) - partial(g, div) for vi, g in zip(v, "bhcl")]
    if alg == H2:
        if len(v) != 3:
            raise ValueError("h2 Maxwell needs a 3-column")
        if not module_membership(alg, v):
            raise NotInModule("column is not in the projective module e K^3")
        div = apply_cal("calB", v[0]) + apply_cal("calH", v[1]) + apply_cal("calC", v[2])
        col = [op(div) for op in h2_gauge_operators()]
        raw = [laplace(alg, vi) - ci.scale(qpow(-8)).r_shift(-4) for vi, ci in zip(v, col)]
        return apply_matrix(idempotent(H2)[1], raw)
    if alg == AlgebraId.SPHERE:
        if len(v) != 3 or not module_membership(alg, v):
            raise NotInModule("column is not in the sphere module")
        return cl.maxwell_sphere(v)
    if alg in (AlgebraId.SL2, AlgebraId.GL2):
        return cl.maxwell_sl2(v)
    if alg == AlgebraId.HYPERBOLOID:
        if len(v) != 3 or not module_membership(alg, v):
            raise NotInModule("column is not in the hyperboloid module")
        return cl.maxwell_hyperboloid(v)
    if alg == AlgebraId.MINKOWSKI:
        if len(v) != 4:
            raise ValueError("Minkowski Maxwell needs a 4-column")
        return cl.maxwell_minkowski(v)
    raise ValueError(f"no Maxwell operator on {alg}")


# ---------------------------------------------------------------------------
# gauge verification

def monomials(alg, max_degree: int, min_degree: int = 0):
    """Normal monomials up to max_degree (b^i h^j / h^j c^k on hyperboloids)."""
    alg = AlgebraId(alg)
    n = spec(alg).ngens
    for d in range(min_degree, max_degree + 1):
        for e in itertools.product(range(d + 1), repeat=n):
            if sum(e) != d:
                continue
            if alg in (H2, AlgebraId.HYPERBOLOID) and e[0] and e[2]:
                continue
            yield NCPoly(alg, {tuple(e) + (0,): qpow(0)})


def gradient_column(alg, rho: NCPoly) -> list:
    alg = AlgebraId(alg)
    if alg == R3:
        return [partial(g, rho) for g in "bhc"]
    if alg == R4:
        return [partial(g, rho) for g in "bhcl"]
    if alg == H2:
        return [op(rho) for op in h2_gauge_operators()]
    if alg == AlgebraId.SPHERE:
        return cl.sphere_gauge_column(rho)
    if alg == AlgebraId.HYPERBOLOID:
        return cl.hyperboloid_gauge_column(rho)
    return cl.gradient(alg, rho)


def commutation_defect(alg, f: NCPoly) -> list:
    """[Delta, d_g] f (ambient) or e([col, Delta] f) (h2), the gauge hypothesis."""
    alg = AlgebraId(alg)
    if alg in (R3, R4):
        names = "bhc" if alg == R3 else "bhcl"
        return [laplace(alg, partial(g, f)) - partial(g, laplace(alg, f)) for g in names]
    if alg == H2:
        raw = [op(laplace(alg, f)) - laplace(alg, op(f)) for op in h2_gauge_operators()]
        return apply_matrix(idempotent(H2)[1], raw)
    raise ValueError(f"no gauge hypothesis on {alg}")


def gauge_check(alg, rhos, max_degree: int = 2) -> Report:
    """Hypothesis per degree, then Mw(gauge column of rho) = 0 where it holds.

    The status is 'pass' if every conclusion that was licensed by a verified
    hypothesis holds, and 'hypothesis-failed' is recorded per degree.
    """
    alg = AlgebraId(alg)
    rep = Report(f"gauge[{alg}]", True)
    hyp_ok: dict = {}
    quantum = alg in (R3, R4, H2)
    if quantum:
        for d in range(max_degree + 1):
            ok = True
            for m in monomials(alg, d, d):
                if any(not radial_form(x).is_zero() for x in commutation_defect(alg, m)):
                    ok = False
                    rep.details.append(f"hypothesis fails at degree {d} on {to_text(m)}")
                    break
            hyp_ok[d] = ok
            rep.details.append(f"degree {d}: hypothesis {'holds' if ok else 'fails'}")
    for rho in rhos:
        degs = {sum(k[:-1]) for k in rho.terms} or {0}
        if quantum and not all(hyp_ok.get(d, False) for d in degs):
            rep.details.append(f"rho = {to_text(rho)}: hypothesis not verified, conclusion skipped")
            continue
        out = maxwell(alg, gradient_column(alg, rho))
        if any(not radial_form(x).is_zero() for x in out):
            rep.passed = False
            rep.witness = f"rho = {to_text(rho)}: " + "; ".join(to_text(x) for x in out)
        else:
            rep.details.append(f"rho = {to_text(rho)}: Mw(column) = 0")
    rep.hypothesis = hyp_ok
    return rep
