"""Exact coefficient arithmetic.

Two layers live here:

* :class:`QFrac` -- an element of Q(q), a reduced quotient of integer
  polynomials in ``q`` backed by :mod:`flint`.
* :class:`Scalar` -- an element of Q(q)[r, 1/r].  Every scalar the library
  produces has a denominator of the form ``(polynomial in q) * r**n``; the
  Laurent representation makes that structural, and :meth:`Scalar.__truediv__`
  refuses anything that would leave it.

Canonical normalization of a :class:`QFrac`: ``gcd(num, den) == 1`` including
integer content, and the leading coefficient of ``den`` is positive.  Two
fractions are equal iff their normalized numerators and denominators are equal.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

import flint

_P = flint.fmpz_poly


class PoleError(ArithmeticError):
    """Evaluation point is a pole of the expression."""


class DenominatorError(ValueError):
    """A denominator outside (polynomial in q) * r**n was requested."""


def _poly_key(p: _P) -> tuple:
    return tuple(int(c) for c in p.coeffs())


def _poly_str(p: _P, var: str = "q") -> str:
    return _bivar_str({(e, 0): int(c) for e, c in enumerate(p.coeffs()) if c != 0}, var)


def _mono_str(eq: int, er: int, qv: str = "q", rv: str = "r") -> str:
    parts = []
    if eq:
        parts.append(qv if eq == 1 else f"{qv}^{eq}")
    if er:
        parts.append(rv if er == 1 else f"{rv}^{er}")
    return "*".join(parts)


def _bivar_str(terms: dict, qv: str = "q", rv: str = "r") -> str:
    """Integer polynomial {(eq, er): c} as text, highest r then highest q first."""
    if not terms:
        return "0"
    out = []
    for (eq, er) in sorted(terms, key=lambda k: (-k[1], -k[0])):
        c = terms[(eq, er)]
        mono = _mono_str(eq, er, qv, rv)
        mag = abs(c)
        if mono:
            body = mono if mag == 1 else f"{mag}*{mono}"
        else:
            body = str(mag)
        if not out:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


Coercible = Union[int, Fraction, "QFrac"]


class QFrac:
    """Reduced element of Q(q)."""

    __slots__ = ("num", "den", "_h")

    def __init__(self, num=0, den=1, _reduced: bool = False):
        if isinstance(num, Fraction):
            num, den = _P([num.numerator]), _P([num.denominator]) * _as_poly(den)
        else:
            num = _as_poly(num)
            den = _as_poly(den)
        if not _reduced:
            if den.is_zero():
                raise ZeroDivisionError("zero denominator")
            if num.is_zero():
                den = _ONE_P
            else:
                g = num.gcd(den)
                if not g.is_one():
                    num = num // g
                    den = den // g
                if den.leading_coefficient() < 0:
                    num = -num
                    den = -den
        self.num = num
        self.den = den
        self._h = None

    # construction helpers
    @staticmethod
    def coerce(x: Coercible) -> "QFrac":
        if isinstance(x, QFrac):
            return x
        if isinstance(x, int):
            return QFrac(_P([x]), _ONE_P, True)
        if isinstance(x, Fraction):
            return QFrac(x)
        if isinstance(x, flint.fmpq):
            return QFrac(Fraction(int(x.p), int(x.q)))
        raise TypeError(f"cannot coerce {type(x).__name__} to QFrac")

    @staticmethod
    def q_power(n: int) -> "QFrac":
        if n >= 0:
            return QFrac(_P([0] * n + [1]), _ONE_P, True)
        return QFrac(_ONE_P, _P([0] * (-n) + [1]), True)

    # predicates
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.den.is_one() and self.num.is_one()

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    # arithmetic
    def __add__(self, other):
        if not isinstance(other, QFrac):
            if isinstance(other, int):
                if other == 0:
                    return self
                return QFrac(self.num + self.den * other, self.den)
            other = QFrac.coerce(other)
        if other.num.is_zero():
            return self
        if self.num.is_zero():
            return other
        if self.den == other.den:
            return QFrac(self.num + other.num, self.den)
        return QFrac(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return QFrac(-self.num, self.den, True)

    def __sub__(self, other):
        return self + (-QFrac.coerce(other))

    def __rsub__(self, other):
        return QFrac.coerce(other) + (-self)

    def __mul__(self, other):
        if not isinstance(other, QFrac):
            if isinstance(other, int):
                if other == 0:
                    return ZERO
                if other == 1:
                    return self
                return QFrac(self.num * other, self.den)
            other = QFrac.coerce(other)
        if self.num.is_zero() or other.num.is_zero():
            return ZERO
        if other.den.is_one() and other.num.is_one():
            return self
        if self.den.is_one() and self.num.is_one():
            return other
        # cross-cancel keeps the operands small
        g1 = self.num.gcd(other.den)
        g2 = other.num.gcd(self.den)
        n1, d2 = (self.num, other.den) if g1.is_one() else (self.num // g1, other.den // g1)
        n2, d1 = (other.num, self.den) if g2.is_one() else (other.num // g2, self.den // g2)
        num = n1 * n2
        den = d1 * d2
        if den.leading_coefficient() < 0:
            num, den = -num, -den
        return QFrac(num, den, True)

    __rmul__ = __mul__

    def inverse(self) -> "QFrac":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero")
        num, den = self.den, self.num
        if den.leading_coefficient() < 0:
            num, den = -num, -den
        return QFrac(num, den, True)

    def __truediv__(self, other):
        return self * QFrac.coerce(other).inverse()

    def __rtruediv__(self, other):
        return QFrac.coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        num, den = self.num ** n, self.den ** n
        return QFrac(num, den, True)

    def __eq__(self, other):
        if isinstance(other, QFrac):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self == QFrac.coerce(other)
        return NotImplemented

    def __hash__(self):
        if self._h is None:
            self._h = hash((_poly_key(self.num), _poly_key(self.den)))
        return self._h

    # evaluation
    def evaluate(self, q0) -> Fraction:
        q0 = Fraction(q0)
        x = flint.fmpq(q0.numerator, q0.denominator)
        d = self.den(x)
        if d == 0:
            raise PoleError(f"pole at q={q0}")
        v = self.num(x) / d
        return Fraction(int(v.p), int(v.q))

    def specialize(self, q0) -> "QFrac":
        return QFrac(self.evaluate(q0))

    def is_constant(self) -> bool:
        return self.num.degree() <= 0 and self.den.degree() <= 0

    def __repr__(self):
        return f"QFrac({self})"

    def __str__(self):
        if self.den.is_one():
            return _poly_str(self.num)
        return f"({_poly_str(self.num)})/({_poly_str(self.den)})"


_ONE_P = _P([1])


def _as_poly(x) -> _P:
    if isinstance(x, _P):
        return x
    if isinstance(x, int):
        return _P([x])
    if isinstance(x, (list, tuple)):
        return _P(list(x))
    raise TypeError(f"cannot build polynomial from {type(x).__name__}")


ZERO = QFrac(0)
ONE = QFrac(1)
Q = QFrac.q_power(1)
QINV = QFrac.q_power(-1)


def qint(n: int) -> QFrac:
    """q-integer n_q = (q**n - q**-n) / (q - q**-1)."""
    return (QFrac.q_power(n) - QFrac.q_power(-n)) / (Q - QINV)


def qpow(n: int) -> QFrac:
    return QFrac.q_power(n)


TWO_Q = qint(2)
# the free factor of the q-bracket is fixed to 2_q; hbar follows from it
W = TWO_Q
HBAR = W * (qpow(4) - qpow(2) + 1)
MU = qpow(-4)
NU = qpow(-2)


class Scalar:
    """Element of Q(q)[r, 1/r], stored as {r-exponent: QFrac}."""

    __slots__ = ("terms", "_h")

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        elif not isinstance(terms, dict):
            c = QFrac.coerce(terms)
            terms = {0: c} if c else {}
        else:
            terms = {e: QFrac.coerce(c) for e, c in terms.items() if c}
        self.terms = terms
        self._h = None

    @staticmethod
    def coerce(x) -> "Scalar":
        return x if isinstance(x, Scalar) else Scalar(x)

    @staticmethod
    def r_power(n: int, coeff: Coercible = 1) -> "Scalar":
        return Scalar({n: coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def __add__(self, other):
        other = Scalar.coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e)
            s = c if s is None else s + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Scalar(out)

    __radd__ = __add__

    def __neg__(self):
        return Scalar({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-Scalar.coerce(other))

    def __rsub__(self, other):
        return Scalar.coerce(other) - self

    def __mul__(self, other):
        other = Scalar.coerce(other)
        out: dict[int, QFrac] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                s = out.get(e)
                p = c1 * c2
                out[e] = p if s is None else s + p
        return Scalar({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = Scalar.coerce(other)
        if not other.terms:
            raise ZeroDivisionError("division by zero scalar")
        if len(other.terms) == 1:
            (e, c), = other.terms.items()
            inv = c.inverse()
            return Scalar({k - e: v * inv for k, v in self.terms.items()})
        return _laurent_exact_div(self, other)

    def __rtruediv__(self, other):
        return Scalar.coerce(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return Scalar(1) / (self ** (-n))
        out = Scalar(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, Scalar):
            try:
                other = Scalar.coerce(other)
            except TypeError:
                return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._h is None:
            self._h = hash(frozenset(self.terms.items()))
        return self._h

    def r_free(self) -> QFrac:
        """The Q(q) value of an r-free scalar."""
        if not self.terms:
            return ZERO
        if set(self.terms) != {0}:
            raise ValueError(f"scalar {self} depends on r")
        return self.terms[0]

    def evaluate(self, q0, r0=None) -> Fraction:
        total = Fraction(0)
        for e, c in self.terms.items():
            v = c.evaluate(q0)
            if e:
                if r0 is None:
                    raise ValueError("scalar depends on r; pass r0")
                r0 = Fraction(r0)
                if r0 == 0 and e < 0:
                    raise PoleError("pole at r=0")
                v *= r0 ** e
            total += v
        return total

    def specialize_q(self, q0) -> "Scalar":
        return Scalar({e: c.specialize(q0) for e, c in self.terms.items()})

    def fraction_parts(self) -> tuple[dict, dict]:
        """Canonical (numerator, denominator) as integer {(eq, er): c} maps."""
        if not self.terms:
            return {}, {(0, 0): 1}
        den_q = _ONE_P
        for c in self.terms.values():
            g = den_q.gcd(c.den)
            den_q = den_q * (c.den // g)
        if den_q.leading_coefficient() < 0:
            den_q = -den_q
        shift = max(0, -min(self.terms))
        num: dict = {}
        for e, c in self.terms.items():
            p = c.num * (den_q // c.den)
            for eq, a in enumerate(p.coeffs()):
                if a != 0:
                    num[(eq, e + shift)] = num.get((eq, e + shift), 0) + int(a)
        den = {(eq, shift): int(a) for eq, a in enumerate(den_q.coeffs()) if a != 0}
        from math import gcd
        g = 0
        for v in list(num.values()) + list(den.values()):
            g = gcd(g, v)
        if g > 1:
            num = {k: v // g for k, v in num.items()}
            den = {k: v // g for k, v in den.items()}
        return num, den

    def __str__(self):
        num, den = self.fraction_parts()
        if den == {(0, 0): 1}:
            return _bivar_str(num)
        return f"({_bivar_str(num)})/({_bivar_str(den)})"

    def __repr__(self):
        return f"Scalar({self})"


def _laurent_exact_div(a: Scalar, b: Scalar) -> Scalar:
    """Exact division of Laurent polynomials in r over Q(q); raises if inexact."""
    if not a.terms:
        return Scalar()
    shift_b = min(b.terms)
    bt = {e - shift_b: c for e, c in b.terms.items()}
    db = max(bt)
    lead = bt[db].inverse()
    shift_a = min(a.terms)
    rem = {e - shift_a: c for e, c in a.terms.items()}
    quot: dict[int, QFrac] = {}
    while rem:
        top = max(rem)
        if top < db:
            raise DenominatorError(
                "denominator must be (polynomial in q) * r**n; "
                f"division by {b} is not exact"
            )
        k = top - db
        c = rem[top] * lead
        quot[k] = c
        for e, bc in bt.items():
            s = rem.get(e + k, ZERO) - c * bc
            if s:
                rem[e + k] = s
            else:
                rem.pop(e + k, None)
    return Scalar({e + shift_a - shift_b: c for e, c in quot.items()})


def scalar_normalize(num: Scalar, den: Scalar) -> Scalar:
    """Reduce ``num / den`` to canonical form, enforcing the denominator shape."""
    if Scalar.coerce(den).is_zero():
        raise ZeroDivisionError("zero denominator")
    return Scalar.coerce(num) / Scalar.coerce(den)


def eval_scalar(s, q0, r0=None) -> Fraction:
    return Scalar.coerce(s).evaluate(q0, r0)


def as_qfrac_list(xs: Iterable) -> list[QFrac]:
    return [QFrac.coerce(x) for x in xs]
