"""Noncommutative polynomials and PBW normal forms.

Elements are finite sums of ordered monomials ``b^i h^j c^k l^m`` (quantum
algebras) or commutative monomials (classical algebras).  Every key carries a
trailing exponent of ``r``: a scalar on the hyperboloids, and on the ambient
spaces the central square root of the Casimir, r**2 = Cas.  That trailing
slot lets operators divide by r**2 without leaving the polynomial type (see
:func:`radial_form`).

Rewriting rules are the defining relations solved for the out-of-order word.
Multiplication is memoized per monomial pair; all values are immutable.
"""
from __future__ import annotations

import enum
import itertools
import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Mapping

from .scalars import ONE, TWO_Q, QFrac, Scalar, qpow

Key = tuple  # (e_1, ..., e_n, e_r)


class AlgebraMismatch(ValueError):
    pass


class UnknownGenerator(ValueError):
    pass


class NotDivisible(ArithmeticError):
    pass


class AlgebraId(str, enum.Enum):
    R4 = "r4"
    R3 = "r3"
    H2 = "h2"
    SPHERE = "sphere"
    SL2 = "sl2"
    MINKOWSKI = "minkowski"
    # q = 1 counterparts of R4 and H2, used by the classical oracles
    GL2 = "gl2"
    HYPERBOLOID = "hyperboloid"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class AlgebraSpec:
    id: AlgebraId
    gens: tuple
    commutative: bool
    quantum: bool
    graded: bool
    # the quotient by Cas - r**2 is taken on top of this algebra
    ambient: AlgebraId | None = None
    index: dict = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self):
        self.index.update({g: i for i, g in enumerate(self.gens)})

    @property
    def ngens(self) -> int:
        return len(self.gens)


SPECS = {
    AlgebraId.R4: AlgebraSpec(AlgebraId.R4, ("b", "h", "c", "l"), False, True, True),
    AlgebraId.R3: AlgebraSpec(AlgebraId.R3, ("b", "h", "c"), False, True, True),
    AlgebraId.H2: AlgebraSpec(AlgebraId.H2, ("b", "h", "c"), False, True, False, AlgebraId.R3),
    AlgebraId.SPHERE: AlgebraSpec(AlgebraId.SPHERE, ("x", "y", "z"), True, False, True),
    AlgebraId.SL2: AlgebraSpec(AlgebraId.SL2, ("b", "h", "c"), True, False, True),
    AlgebraId.MINKOWSKI: AlgebraSpec(AlgebraId.MINKOWSKI, ("t", "x", "y", "z"), True, False, True),
    AlgebraId.GL2: AlgebraSpec(AlgebraId.GL2, ("b", "h", "c", "l"), True, False, True),
    AlgebraId.HYPERBOLOID: AlgebraSpec(
        AlgebraId.HYPERBOLOID, ("b", "h", "c"), True, False, False, AlgebraId.SL2
    ),
}


def spec(alg) -> AlgebraSpec:
    return SPECS[AlgebraId(alg)]


# ---------------------------------------------------------------------------
# rewriting rules

def _rule_terms(alg: AlgebraId, items) -> list:
    """[(coeff, {gen: exp}, r_exp)] -> [(key, QFrac)] for the given algebra."""
    s = SPECS[alg]
    out = []
    for coeff, exps, rexp in items:
        e = [0] * s.ngens
        for g, k in exps.items():
            e[s.index[g]] += k
        out.append((tuple(e) + (rexp,), QFrac.coerce(coeff)))
    return out


def _quantum_rules(alg: AlgebraId) -> dict:
    q = qpow(1)
    qq = q - qpow(-1)
    kappa = (q**2 - 1) / (q**2 + 1)
    s = SPECS[alg]
    i = s.index
    rules = {}
    if alg == AlgebraId.R3 or alg == AlgebraId.H2:
        rules[(i["h"], i["b"])] = [(qpow(-2), {"b": 1, "h": 1}, 0)]
        rules[(i["c"], i["h"])] = [(qpow(-2), {"h": 1, "c": 1}, 0)]
        rules[(i["c"], i["b"])] = [(ONE, {"b": 1, "c": 1}, 0), (kappa, {"h": 2}, 0)]
    elif alg == AlgebraId.R4:
        # q^2 hb - bh = -(q - q^-1) lb, and cyclic; l central
        rules[(i["h"], i["b"])] = [(qpow(-2), {"b": 1, "h": 1}, 0),
                                   (-qpow(-2) * qq, {"b": 1, "l": 1}, 0)]
        rules[(i["c"], i["h"])] = [(qpow(-2), {"h": 1, "c": 1}, 0),
                                   (-qpow(-2) * qq, {"c": 1, "l": 1}, 0)]
        rules[(i["c"], i["b"])] = [(ONE, {"b": 1, "c": 1}, 0), (kappa, {"h": 2}, 0),
                                   (qq / (q**2 + 1), {"h": 1, "l": 1}, 0)]
        for g in ("b", "h", "c"):
            rules[(i["l"], i[g])] = [(ONE, {g: 1, "l": 1}, 0)]
    return {k: _rule_terms(alg, v) for k, v in rules.items()}


RULES = {a: _quantum_rules(a) for a in (AlgebraId.R3, AlgebraId.R4)}


def h2_bc_rule(classical: bool = False) -> list:
    """b*c on the hyperboloid, from Cas_sl = r**2: [(key, coeff)] over (b,h,c,r)."""
    if classical:
        alpha, beta = QFrac(1) / 2, QFrac(1) / 4
    else:
        q = qpow(1)
        alpha = q / (q**2 + 1)
        beta = q**4 / (q**2 + 1) ** 2
    return [((0, 0, 0, 2), alpha), ((0, 2, 0, 0), -beta)]


# ---------------------------------------------------------------------------
# multiplication engines

def _add_into(acc: dict, key, c):
    s = acc.get(key)
    if s is None:
        if c:
            acc[key] = c
    else:
        s = s + c
        if s:
            acc[key] = s
        else:
            del acc[key]


def _shift(key: Key, other: Key) -> Key:
    return tuple(a + b for a, b in zip(key, other))


def _unit(n: int, i: int) -> tuple:
    e = [0] * (n + 1)
    e[i] = 1
    return tuple(e)


@lru_cache(maxsize=None)
def _pbw_times_gen(alg: AlgebraId, e: tuple, g: int) -> tuple:
    """Normal form of (normal monomial e) * generator g; e has r-slot 0."""
    n = SPECS[alg].ngens
    last = max((i for i in range(n) if e[i]), default=-1)
    if last <= g:
        return ((_shift(e, _unit(n, g)), ONE),)
    rest = list(e)
    rest[last] -= 1
    rest = tuple(rest)
    acc: dict = {}
    for key, c in RULES[alg][(last, g)]:
        for k2, c2 in _pbw_mul(alg, rest, key):
            _add_into(acc, k2, c * c2)
    return tuple(acc.items())


@lru_cache(maxsize=None)
def _pbw_mul(alg: AlgebraId, a: tuple, b: tuple) -> tuple:
    """Normal form of a * b for normal monomials a, b (full keys)."""
    n = SPECS[alg].ngens
    rshift = a[n] + b[n]
    a0 = a[:n] + (0,)
    first = min((i for i in range(n) if b[i]), default=-1)
    if first < 0:
        return ((a0[:n] + (rshift,), ONE),)
    b_rest = list(b[:n]) + [0]
    b_rest[first] -= 1
    b_rest = tuple(b_rest)
    acc: dict = {}
    for k1, c1 in _pbw_times_gen(alg, a0, first):
        for k2, c2 in _pbw_mul(alg, k1, b_rest):
            k2 = k2[:n] + (k2[n] + rshift,)
            _add_into(acc, k2, c1 * c2)
    return tuple(acc.items())


@lru_cache(maxsize=None)
def _hyperboloid_reduce_mono(alg: AlgebraId, key: Key) -> tuple:
    """Eliminate monomials containing both b and c (bc -> Cas-derived value)."""
    i, j, k, r = key
    if i == 0 or k == 0:
        return ((key, ONE),)
    classical = alg == AlgebraId.HYPERBOLOID
    # b^i h^j c^k = q^{2j} b^{i-1} h^j (bc) c^{k-1}
    pref = ONE if classical else qpow(2 * j)
    acc: dict = {}
    for (bi, hj, ck, rr), c in h2_bc_rule(classical):
        new = (i - 1 + bi, j + hj, k - 1 + ck, r + rr)
        for k2, c2 in _hyperboloid_reduce_mono(alg, new):
            _add_into(acc, k2, pref * c * c2)
    return tuple(acc.items())


@lru_cache(maxsize=None)
def mono_mul(alg: AlgebraId, a: Key, b: Key) -> tuple:
    s = SPECS[alg]
    if s.commutative:
        key = _shift(a, b)
        if alg == AlgebraId.HYPERBOLOID:
            return _hyperboloid_reduce_mono(alg, key)
        return ((key, ONE),)
    if alg == AlgebraId.H2:
        acc: dict = {}
        for k1, c1 in _pbw_mul(AlgebraId.R3, a, b):
            for k2, c2 in _hyperboloid_reduce_mono(alg, k1):
                _add_into(acc, k2, c1 * c2)
        return tuple(acc.items())
    return _pbw_mul(alg, a, b)


# ---------------------------------------------------------------------------
# polynomials

def _coerce_coeff(c):
    if isinstance(c, QFrac):
        return c, 0
    return QFrac.coerce(c), 0


class NCPoly:
    """Immutable normal-form element of one algebra.

    ``terms`` maps full keys (generator exponents plus r-exponent) to nonzero
    :class:`QFrac` coefficients.
    """

    __slots__ = ("alg", "terms", "_h")

    def __init__(self, alg, terms: Mapping | None = None):
        self.alg = AlgebraId(alg)
        self.terms = dict(terms) if terms else {}
        self._h = None

    # constructors
    @classmethod
    def zero(cls, alg) -> "NCPoly":
        return cls(alg)

    @classmethod
    def const(cls, alg, c=1) -> "NCPoly":
        s = spec(alg)
        sc = Scalar.coerce(c)
        return cls(alg, {(0,) * s.ngens + (e,): v for e, v in sc.terms.items()})

    @classmethod
    def gen(cls, alg, name: str) -> "NCPoly":
        s = spec(alg)
        if name not in s.index:
            raise UnknownGenerator(f"unknown generator {name!r} for algebra {s.id}")
        return cls(alg, {_unit(s.ngens, s.index[name]): ONE})

    @classmethod
    def monomial(cls, alg, exps: Iterable[int], r: int = 0, coeff=ONE) -> "NCPoly":
        """A single (already ordered) monomial; reduced on H2."""
        key = tuple(exps) + (r,)
        f = cls(alg, {key: QFrac.coerce(coeff)})
        return f.reduced()

    def reduced(self) -> "NCPoly":
        if self.alg in (AlgebraId.H2, AlgebraId.HYPERBOLOID):
            acc: dict = {}
            for k, c in self.terms.items():
                for k2, c2 in _hyperboloid_reduce_mono(self.alg, k):
                    _add_into(acc, k2, c * c2)
            return NCPoly(self.alg, acc)
        return self

    @property
    def spec(self) -> AlgebraSpec:
        return SPECS[self.alg]

    # arithmetic
    def _check(self, other: "NCPoly"):
        if other.alg != self.alg:
            raise AlgebraMismatch(f"algebra mismatch: {self.alg} vs {other.alg}")

    def __add__(self, other):
        if not isinstance(other, NCPoly):
            other = NCPoly.const(self.alg, other)
        self._check(other)
        if not other.terms:
            return self
        acc = dict(self.terms)
        for k, c in other.terms.items():
            _add_into(acc, k, c)
        return NCPoly(self.alg, acc)

    __radd__ = __add__

    def __neg__(self):
        return NCPoly(self.alg, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, NCPoly):
            other = NCPoly.const(self.alg, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "NCPoly":
        if isinstance(c, Scalar):
            acc: dict = {}
            n = self.spec.ngens
            for e, v in c.terms.items():
                for k, x in self.terms.items():
                    _add_into(acc, k[:n] + (k[n] + e,), x * v)
            return NCPoly(self.alg, acc).reduced() if any(c.terms) else NCPoly(self.alg, acc)
        c = QFrac.coerce(c)
        if not c:
            return NCPoly(self.alg)
        if c.is_one():
            return self
        return NCPoly(self.alg, {k: x * c for k, x in self.terms.items()})

    def r_shift(self, n: int) -> "NCPoly":
        """Multiply by r**n."""
        if n == 0:
            return self
        m = self.spec.ngens
        f = NCPoly(self.alg, {k[:m] + (k[m] + n,): c for k, c in self.terms.items()})
        return f

    def __mul__(self, other):
        if isinstance(other, NCPoly):
            self._check(other)
            acc: dict = {}
            for k1, c1 in self.terms.items():
                for k2, c2 in other.terms.items():
                    c12 = c1 * c2
                    for k, c in mono_mul(self.alg, k1, k2):
                        _add_into(acc, k, c12 * c)
            return NCPoly(self.alg, acc)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, n: int):
        out = NCPoly.const(self.alg, 1)
        for _ in range(n):
            out = out * self
        return out

    # comparison
    def __eq__(self, other):
        if isinstance(other, NCPoly):
            return self.alg == other.alg and self.terms == other.terms
        if isinstance(other, (int, QFrac, Scalar)):
            return self == NCPoly.const(self.alg, other)
        return NotImplemented

    def __hash__(self):
        if self._h is None:
            self._h = hash((self.alg, frozenset(self.terms.items())))
        return self._h

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    # inspection
    def gen_degree(self, key: Key) -> int:
        return sum(key[: self.spec.ngens])

    def degree(self) -> int:
        return max((self.gen_degree(k) for k in self.terms), default=-1)

    def by_monomial(self) -> dict:
        """{generator exponents: Scalar} merging the r-exponents."""
        n = self.spec.ngens
        out: dict = {}
        for k, c in self.terms.items():
            out.setdefault(k[:n], {})[k[n]] = c
        return {m: Scalar(t) for m, t in out.items()}

    def coeff(self, exps) -> Scalar:
        return self.by_monomial().get(tuple(exps), Scalar())

    def scalar_value(self) -> Scalar:
        """The value of a constant element; raises if generators occur."""
        bm = self.by_monomial()
        n = self.spec.ngens
        if any(m != (0,) * n for m in bm):
            raise ValueError(f"{self} is not a scalar")
        return bm.get((0,) * n, Scalar())

    def is_scalar(self) -> bool:
        n = self.spec.ngens
        return all(not any(k[:n]) for k in self.terms)

    def has_r(self) -> bool:
        n = self.spec.ngens
        return any(k[n] for k in self.terms)

    def map_coeffs(self, fn) -> "NCPoly":
        acc = {}
        for k, c in self.terms.items():
            v = fn(c)
            if v:
                acc[k] = v
        return NCPoly(self.alg, acc)

    def __repr__(self):
        return f"NCPoly({self.alg.value}: {to_text(self)})"

    def __str__(self):
        return to_text(self)


def gens(alg) -> dict:
    return {g: NCPoly.gen(alg, g) for g in spec(alg).gens}


def from_words(alg, words) -> NCPoly:
    """Normal form of a linear combination of words.

    ``words`` is a mapping (or iterable of pairs) from tuples of generator
    names to coefficients.
    """
    alg = AlgebraId(alg)
    s = SPECS[alg]
    if isinstance(words, Mapping):
        words = words.items()
    total = NCPoly(alg)
    for word, coeff in words:
        f = NCPoly.const(alg, coeff)
        for g in word:
            if g not in s.index:
                raise UnknownGenerator(f"unknown generator {g!r} for algebra {alg}")
            f = f * NCPoly.gen(alg, g)
        total = total + f
    return total


def normal_form(alg, expr) -> NCPoly:
    """Normal form of a word expression, an expression string, or an NCPoly."""
    if isinstance(expr, NCPoly):
        if expr.alg != AlgebraId(alg):
            raise AlgebraMismatch(f"algebra mismatch: {expr.alg} vs {alg}")
        return expr.reduced()
    if isinstance(expr, str):
        from .parser import parse_poly

        return parse_poly(expr, alg)
    return from_words(alg, expr)


def multiply(alg, f: NCPoly, g: NCPoly) -> NCPoly:
    alg = AlgebraId(alg)
    if f.alg != alg or g.alg != alg:
        raise AlgebraMismatch("operands belong to a different algebra")
    return f * g


def commutator(f: NCPoly, g: NCPoly) -> NCPoly:
    return f * g - g * f


# ---------------------------------------------------------------------------
# order, grading, division

def order_key(alg, exps: tuple) -> tuple:
    """Admissible order: total degree, then lexicographic in generator order."""
    return (sum(exps), tuple(exps))


def homogeneous_parts(f: NCPoly) -> list:
    if not f.spec.graded:
        raise ValueError(f"grading is not defined on {f.alg}")
    parts: dict = {}
    for k, c in f.terms.items():
        parts.setdefault(f.gen_degree(k), {})[k] = c
    return [(d, NCPoly(f.alg, parts[d])) for d in sorted(parts)]


def leading(f: NCPoly) -> tuple:
    n = f.spec.ngens
    k = max(f.terms, key=lambda k: order_key(f.alg, k[:n]))
    return k, f.terms[k]


def divide_by_central(f: NCPoly, z: NCPoly) -> NCPoly:
    """g with z*g == f, for z central and r-free; raises NotDivisible."""
    f._check(z)
    if z.is_zero():
        raise ZeroDivisionError("division by zero element")
    n = f.spec.ngens
    if z.has_r():
        raise ValueError("divisor must not involve r")
    zk, _ = leading(z)
    quot: dict = {}
    rem = dict(f.terms)
    while rem:
        lk = max(rem, key=lambda k: (order_key(f.alg, k[:n]), k[n]))
        t = tuple(a - b for a, b in zip(lk[:n], zk[:n]))
        if any(x < 0 for x in t):
            raise NotDivisible(f"{to_text(NCPoly(f.alg, rem))} is not divisible by {to_text(z)}")
        tk = t + (lk[n],)
        prod = z * NCPoly(f.alg, {tk: ONE})
        lc = prod.terms.get(lk)
        if lc is None:
            raise NotDivisible("leading term mismatch during division")
        c = rem[lk] / lc
        _add_into(quot, tk, c)
        for k, v in prod.terms.items():
            _add_into(rem, k, -c * v)
    return NCPoly(f.alg, quot)


# ---------------------------------------------------------------------------
# Casimir elements and the radial form

def _cas(alg: AlgebraId) -> NCPoly | None:
    q = qpow(1)
    if alg in (AlgebraId.R3, AlgebraId.R4, AlgebraId.H2):
        amb = AlgebraId.R3 if alg == AlgebraId.H2 else alg
        g = gens(amb)
        cas = (g["b"] * g["c"]).scale(qpow(-1)) + (g["h"] * g["h"]).scale(TWO_Q.inverse()) \
            + (g["c"] * g["b"]).scale(q)
        return cas
    if alg in (AlgebraId.SL2, AlgebraId.GL2):
        g = gens(alg)
        return (g["b"] * g["c"]).scale(2) + (g["h"] * g["h"]).scale(QFrac(1) / 2)
    if alg == AlgebraId.SPHERE:
        g = gens(alg)
        return g["x"] * g["x"] + g["y"] * g["y"] + g["z"] * g["z"]
    return None


_CAS = {a: _cas(a) for a in AlgebraId}


def cas_element(alg) -> NCPoly:
    c = _CAS[AlgebraId(alg)]
    if c is None:
        raise ValueError(f"no radial Casimir on {alg}")
    return c


def split_l(f: NCPoly) -> dict:
    """R4/GL2 element as {l-exponent: element of R3/SL2} (PBW coefficientwise)."""
    target = AlgebraId.R3 if f.alg == AlgebraId.R4 else AlgebraId.SL2
    out: dict = {}
    for k, c in f.terms.items():
        b, h, cc, l, r = k
        out.setdefault(l, {})[(b, h, cc, r)] = c
    return {m: NCPoly(target, t) for m, t in out.items()}


def join_l(parts: Mapping, alg) -> NCPoly:
    alg = AlgebraId(alg)
    acc: dict = {}
    for m, g in parts.items():
        for (b, h, c, r), v in g.terms.items():
            _add_into(acc, (b, h, c, m, r), v)
    return NCPoly(alg, acc)


def radial_form(f: NCPoly) -> NCPoly:
    """Canonical representative in the ambient algebra extended by r, r**2 = Cas.

    Each r-parity class is written r**N * F with F free of r; positive even
    excess is absorbed into Cas powers, and Cas factors of F are cancelled
    against negative powers of r.  Two elements are equal iff their radial
    forms are.
    """
    if f.alg in (AlgebraId.R4, AlgebraId.GL2):
        return join_l({m: radial_form(g) for m, g in split_l(f).items()}, f.alg)
    if f.alg not in (AlgebraId.R3, AlgebraId.SL2, AlgebraId.SPHERE):
        return f
    n = f.spec.ngens
    cas = _CAS[f.alg]
    classes: dict = {}
    for k, c in f.terms.items():
        classes.setdefault(k[n] % 2, {}).setdefault(k[n], {})[k[:n] + (0,)] = c
    out = NCPoly(f.alg)
    for p, by_e in classes.items():
        low = min(by_e)
        F = NCPoly(f.alg)
        for e, t in by_e.items():
            F = F + NCPoly(f.alg, t) * cas_power(f.alg, (e - low) // 2)
        N = low
        if N > p:
            F = F * cas_power(f.alg, (N - p) // 2)
            N = p
        while N < p and F:
            try:
                F = divide_by_central(F, cas)
            except NotDivisible:
                break
            N += 2
        out = out + F.r_shift(N)
    return out


@lru_cache(maxsize=None)
def cas_power(alg: AlgebraId, k: int) -> NCPoly:
    if k == 0:
        return NCPoly.const(alg, 1)
    return cas_power(alg, k - 1) * _CAS[alg]


def to_hyperboloid(f: NCPoly) -> NCPoly:
    """Quotient map R3 -> H2 (or SL2 -> classical hyperboloid)."""
    target = {AlgebraId.R3: AlgebraId.H2, AlgebraId.SL2: AlgebraId.HYPERBOLOID}[f.alg]
    return NCPoly(target, f.terms).reduced()


def lift_hyperboloid(f: NCPoly) -> NCPoly:
    """Normal-form representative of an H2 element inside R3 (r kept as scalar)."""
    target = {AlgebraId.H2: AlgebraId.R3, AlgebraId.HYPERBOLOID: AlgebraId.SL2}[f.alg]
    return NCPoly(target, f.terms)


def equal_mod_radial(f: NCPoly, g: NCPoly) -> bool:
    return radial_form(f - g).is_zero()


# ---------------------------------------------------------------------------
# specialization q -> q0

CLASSICAL_OF = {
    AlgebraId.R3: AlgebraId.SL2,
    AlgebraId.R4: AlgebraId.GL2,
    AlgebraId.H2: AlgebraId.HYPERBOLOID,
}


def specialize(f: NCPoly, q0=1) -> NCPoly:
    """Evaluate coefficients at q = q0; at q0 = 1 land in the classical algebra."""
    target = CLASSICAL_OF[f.alg] if q0 == 1 else f.alg
    acc: dict = {}
    for k, c in f.terms.items():
        _add_into(acc, k, c.specialize(q0))
    return NCPoly(target, acc).reduced()


# ---------------------------------------------------------------------------
# serialization

def _mono_text(s: AlgebraSpec, exps) -> str:
    parts = []
    for g, e in zip(s.gens, exps):
        if e == 1:
            parts.append(g)
        elif e > 1:
            parts.append(f"{g}^{e}")
    return "*".join(parts)


def _coeff_text(sc: Scalar) -> tuple[bool, str]:
    """(negative, text) for a coefficient; text is '' for a unit."""
    from .scalars import _bivar_str

    num, den = sc.fraction_parts()
    lead = sorted(num, key=lambda k: (-k[1], -k[0]))[0]
    neg = num[lead] < 0
    if neg:
        num = {k: -v for k, v in num.items()}
    unit_den = den == {(0, 0): 1}
    if unit_den:
        if num == {(0, 0): 1}:
            return neg, ""
        if len(num) == 1:
            return neg, _bivar_str(num)
        return neg, f"({_bivar_str(num)})".replace(" ", "")
    parts = [_bivar_str(t) if len(t) == 1 else f"({_bivar_str(t)})" for t in (num, den)]
    return neg, f"({parts[0]}/{parts[1]})".replace(" ", "")


def to_text(f: NCPoly) -> str:
    """Canonical serialization, terms in decreasing monomial order."""
    s = f.spec
    bm = f.by_monomial()
    if not bm:
        return "0"
    out = []
    for exps in sorted(bm, key=lambda e: order_key(f.alg, e), reverse=True):
        neg, ct = _coeff_text(bm[exps])
        mono = _mono_text(s, exps)
        if mono and ct:
            body = f"{ct}*{mono}"
        elif mono:
            body = mono
        else:
            body = ct or "1"
        if not out:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


# ---------------------------------------------------------------------------
# confluence

@dataclass
class Report:
    name: str
    passed: bool
    details: list = field(default_factory=list)
    witness: str | None = None


def _word_rules(alg: AlgebraId, max_len: int) -> dict:
    """String rewriting rules {lhs word: [(coeff, word, r_exp)]} for the reference reducer."""
    s = SPECS[alg]
    rules: dict = {}
    if s.commutative:
        for i, j in itertools.combinations(range(s.ngens), 2):
            rules[(j, i)] = [(ONE, (i, j), 0)]
        if alg == AlgebraId.HYPERBOLOID:
            for j in range(0, max(0, max_len - 2) + 1):
                rules[(0,) + (1,) * j + (2,)] = [(c, _key_word((0, j + k[1], 0, 0)), k[3])
                                                 for k, c in h2_bc_rule(True)]
        return rules
    base = AlgebraId.R3 if alg == AlgebraId.H2 else alg
    for (x, y), rhs in RULES[base].items():
        rules[(x, y)] = [(c, _key_word(k), k[-1]) for k, c in rhs]
    if alg == AlgebraId.H2:
        for j in range(0, max(0, max_len - 2) + 1):
            lhs = (0,) + (1,) * j + (2,)
            rules[lhs] = [(qpow(2 * j) * c, _key_word((0, j + k[1], 0, 0)), k[3])
                          for k, c in h2_bc_rule(False)]
    return rules


def _key_word(key) -> tuple:
    word = []
    for i, e in enumerate(key[:-1]):
        word.extend([i] * e)
    return tuple(word)


class _WordReducer:
    def __init__(self, alg: AlgebraId, max_len: int):
        self.alg = alg
        self.rules = _word_rules(alg, max_len)
        self.lens = sorted({len(k) for k in self.rules})
        self.cache: dict = {}

    def find(self, word):
        for pos in range(len(word)):
            for L in self.lens:
                lhs = word[pos:pos + L]
                if len(lhs) == L and lhs in self.rules:
                    return pos, lhs
        return None

    def step_at(self, word, pos, lhs) -> list:
        out = []
        for c, w, r in self.rules[lhs]:
            out.append((c, word[:pos] + w + word[pos + len(lhs):], r))
        return out

    def reduce(self, word) -> dict:
        """{(normal word, r_exp): coeff} by leftmost rewriting."""
        word = tuple(word)
        if word in self.cache:
            return self.cache[word]
        hit = self.find(word)
        if hit is None:
            res = {(word, 0): ONE}
        else:
            res = {}
            for c, w, r in self.step_at(word, *hit):
                for (w2, r2), c2 in self.reduce(w).items():
                    _add_into(res, (w2, r + r2), c * c2)
        self.cache[word] = res
        return res

    def reduce_all(self, items) -> dict:
        acc: dict = {}
        for c, w, r in items:
            for (w2, r2), c2 in self.reduce(w).items():
                _add_into(acc, (w2, r + r2), c * c2)
        return acc


def _words_to_poly(alg: AlgebraId, d: dict) -> NCPoly:
    n = SPECS[alg].ngens
    acc: dict = {}
    for (w, r), c in d.items():
        e = [0] * n
        for g in w:
            e[g] += 1
        _add_into(acc, tuple(e) + (r,), c)
    return NCPoly(alg, acc)


def random_poly(alg, rng: random.Random, max_degree: int, nterms: int = 3) -> NCPoly:
    """Random normal-form element with small exact coefficients."""
    alg = AlgebraId(alg)
    s = SPECS[alg]
    f = NCPoly(alg)
    for _ in range(nterms):
        d = rng.randint(0, max_degree)
        e = [0] * s.ngens
        for _ in range(d):
            e[rng.randrange(s.ngens)] += 1
        c = QFrac(rng.choice([-3, -2, -1, 1, 2, 5])) * (qpow(rng.randint(-2, 2)) if s.quantum else ONE)
        f = f + NCPoly.monomial(alg, e, 0, c)
    return f


def check_confluence(alg, max_degree: int = 3, samples: int = 200, seed: int = 0) -> Report:
    """Critical pairs up to length 3, exhaustive word agreement, random associativity."""
    alg = AlgebraId(alg)
    if max_degree < 3:
        raise ValueError("max_degree must be at least 3")
    s = SPECS[alg]
    rep = Report(f"confluence[{alg}]", True)
    red = _WordReducer(alg, max_degree)
    # overlap ambiguities u v w with (u v) and (v w) both left-hand sides
    lhs_list = list(red.rules)
    pairs = 0
    for a in lhs_list:
        for b in lhs_list:
            for ov in range(1, min(len(a), len(b))):
                if a[-ov:] != b[:ov]:
                    continue
                word = a + b[ov:]
                if len(word) > max(3, max_degree):
                    continue
                left = red.reduce_all(red.step_at(word, 0, a))
                right = red.reduce_all(red.step_at(word, len(a) - ov, b))
                pairs += 1
                diff = _words_to_poly(alg, left) - _words_to_poly(alg, right)
                if diff:
                    rep.passed = False
                    rep.witness = f"overlap {word}: {to_text(diff)}"
    rep.details.append(f"critical pairs resolved: {pairs}")
    # the fast engine agrees with the reference reducer on every word
    words = 0
    for L in range(max_degree + 1):
        for w in itertools.product(range(s.ngens), repeat=L):
            ref = _words_to_poly(alg, red.reduce(w))
            fast = NCPoly.const(alg, 1)
            for g in w:
                fast = fast * NCPoly(alg, {_unit(s.ngens, g): ONE})
            words += 1
            if ref != fast:
                rep.passed = False
                rep.witness = f"word {w}: engine {to_text(fast)} vs reference {to_text(ref)}"
    rep.details.append(f"words compared: {words}")
    # randomized associativity
    rng = random.Random(seed)
    for _ in range(samples):
        d1 = rng.randint(0, max_degree)
        d2 = rng.randint(0, max_degree - d1)
        d3 = max_degree - d1 - d2
        u, v, w = (random_poly(alg, rng, d, 2) for d in (d1, d2, d3))
        if (u * v) * w != u * (v * w):
            rep.passed = False
            rep.witness = f"associativity fails for {u} | {v} | {w}"
            break
    rep.details.append(f"associativity samples: {samples}")
    return rep
