"""Sparse multivariate polynomials with exact rational coefficients."""

from __future__ import annotations

import functools
from fractions import Fraction
from typing import Iterable, Mapping

from gmpy2 import mpq, mpz

Coefficient = type(mpq())
Exponent = tuple

_INT_TYPES = (int, type(mpz()))


def coeff(value) -> Coefficient:
    """Coerce ``value`` to an exact rational.

    Accepts ints, ``Fraction``, ``mpq`` and strings such as ``"-3/4"``.
    Floats are refused on purpose.
    """
    if isinstance(value, Coefficient):
        return value
    if isinstance(value, _INT_TYPES):
        return mpq(value)
    if isinstance(value, Fraction):
        return mpq(value.numerator, value.denominator)
    if isinstance(value, str):
        text = value.strip()
        if "." in text or "e" in text.lower():
            raise ValueError(f"not an exact rational literal: {value!r}")
        if "/" in text:
            num, den = text.split("/")
            if int(den) <= 0:
                raise ValueError(f"denominator must be positive: {value!r}")
            return mpq(int(num), int(den))
        return mpq(int(text))
    raise TypeError(f"cannot use {type(value).__name__} as an exact coefficient")


def format_coeff(c: Coefficient) -> str:
    return f"{c.numerator}/{c.denominator}"


class TermOrder:
    """Monomial order; ``key`` maps an exponent tuple to a sort key that
    increases with the order."""

    KINDS = ("grevlex", "lex")

    def __init__(self, kind: str = "grevlex"):
        if kind not in self.KINDS:
            raise ValueError(f"unknown term order {kind!r}")
        self.kind = kind
        if kind == "lex":
            self.key = _lex_key
        else:
            self.key = _grevlex_key

    def __eq__(self, other):
        return isinstance(other, TermOrder) and other.kind == self.kind

    def __hash__(self):
        return hash(self.kind)

    def __repr__(self):
        return f"TermOrder({self.kind!r})"


def _lex_key(e):
    return e


def _grevlex_key(e):
    return (sum(e),) + tuple(-x for x in reversed(e))


class Ring:
    """Polynomial ring Q[names] with a term order.

    Variables earlier in ``names`` are larger. Rings are interned, so two
    rings with the same names and order are the same object.
    """

    def __new__(cls, names: Iterable[str], order: str | TermOrder = "grevlex"):
        names = tuple(names)
        order = order if isinstance(order, TermOrder) else TermOrder(order)
        return _intern_ring(cls, names, order.kind)

    def __getnewargs__(self):
        return (self.names, self.order.kind)

    @property
    def nvars(self) -> int:
        return len(self.names)

    def index(self, var) -> int:
        if isinstance(var, Poly):
            var = var.variable_name()
        try:
            return self.names.index(var)
        except ValueError:
            raise ValueError(f"unknown variable {var!r} in ring {self.names}") from None

    @property
    def zero(self) -> Poly:
        return Poly(self, {})

    @property
    def one(self) -> Poly:
        return self.const(1)

    def const(self, c) -> Poly:
        c = coeff(c)
        return Poly(self, {(0,) * self.nvars: c} if c else {})

    def gen(self, name: str) -> Poly:
        e = [0] * self.nvars
        e[self.index(name)] = 1
        return Poly(self, {tuple(e): mpq(1)})

    def gens(self) -> tuple[Poly, ...]:
        return tuple(self.gen(n) for n in self.names)

    def monomial(self, exp, c=1) -> Poly:
        return Poly(self, {tuple(exp): coeff(c)})

    def from_dict(self, terms: Mapping) -> Poly:
        out = {}
        for e, c in terms.items():
            c = coeff(c)
            if c:
                e = tuple(e)
                if len(e) != self.nvars:
                    raise ValueError(f"exponent {e} has wrong arity for {self.names}")
                out[e] = out.get(e, 0) + c
        return Poly(self, {e: c for e, c in out.items() if c})

    def with_order(self, order) -> Ring:
        return Ring(self.names, order)

    def extend(self, *names: str) -> Ring:
        return Ring(self.names + tuple(names), self.order)

    def __repr__(self):
        return f"Ring({','.join(self.names)}; {self.order.kind})"


@functools.lru_cache(maxsize=None)
def _intern_ring(cls, names, kind):
    if len(set(names)) != len(names):
        raise ValueError(f"duplicate variable names {names}")
    ring = object.__new__(cls)
    ring.names = names
    ring.order = TermOrder(kind)
    return ring


def _same_ring(a: Poly, b: Poly) -> None:
    if a.ring is not b.ring:
        raise ValueError(f"ring mismatch: {a.ring} vs {b.ring}")


class Poly:
    """Immutable sparse polynomial: a dict from exponent tuples to nonzero
    ``mpq`` coefficients. Terms are exposed in strictly decreasing order."""

    __slots__ = ("ring", "_terms", "_sorted")

    def __init__(self, ring: Ring, terms: dict):
        self.ring = ring
        self._terms = terms
        self._sorted = None

    # -- basic structure ---------------------------------------------------
    @property
    def coeffs(self) -> Mapping:
        return self._terms

    def terms(self) -> list:
        if self._sorted is None:
            key = self.ring.order.key
            self._sorted = sorted(self._terms.items(), key=lambda t: key(t[0]), reverse=True)
        return self._sorted

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and not any(next(iter(self._terms))))

    def constant_value(self) -> Coefficient:
        return self._terms.get((0,) * self.ring.nvars, mpq(0))

    @property
    def lm(self) -> tuple:
        if not self._terms:
            raise ValueError("zero polynomial has no leading monomial")
        return self.terms()[0][0]

    @property
    def lc(self) -> Coefficient:
        if not self._terms:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.terms()[0][1]

    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=-1)

    def degree(self, var) -> int:
        i = self.ring.index(var)
        return max((e[i] for e in self._terms), default=-1)

    def variable_name(self) -> str:
        if len(self._terms) == 1:
            (e, c), = self._terms.items()
            if c == 1 and sum(e) == 1:
                return self.ring.names[e.index(1)]
        raise ValueError(f"{self} is not a ring variable")

    def involves(self, var) -> bool:
        i = self.ring.index(var)
        return any(e[i] for e in self._terms)

    # -- arithmetic --------------------------------------------------------
    def _coerce(self, other) -> Poly:
        if isinstance(other, Poly):
            _same_ring(self, other)
            return other
        return self.ring.const(other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e)
            if s is None:
                out[e] = c
            else:
                s = s + c
                if s:
                    out[e] = s
                else:
                    del out[e]
        return Poly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.ring, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            c = coeff(other)
            if not c:
                return self.ring.zero
            return Poly(self.ring, {e: v * c for e, v in self._terms.items()})
        _same_ring(self, other)
        out: dict = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e)
                out[e] = c1 * c2 if s is None else s + c1 * c2
        return Poly(self.ring, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other):
        c = coeff(other)
        if not c:
            raise ZeroDivisionError("division of a polynomial by zero")
        return self * (1 / c)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result, base = self.ring.one, self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.ring is other.ring and self._terms == other._terms
        if isinstance(other, (int, Fraction, Coefficient)):
            return self == self.ring.const(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, frozenset(self._terms.items())))

    def monic(self) -> Poly:
        return self / self.lc if self._terms else self

    def mul_term(self, exp, c) -> Poly:
        return Poly(self.ring, {tuple(a + b for a, b in zip(e, exp)): v * c
                                for e, v in self._terms.items()})

    # -- calculus and substitution ------------------------------------------
    def diff(self, var, times: int = 1) -> Poly:
        p = self
        for _ in range(times):
            p = p._diff_once(self.ring.index(var))
        return p

    def _diff_once(self, i: int) -> Poly:
        out = {}
        for e, c in self._terms.items():
            if e[i]:
                ne = e[:i] + (e[i] - 1,) + e[i + 1:]
                out[ne] = c * e[i]
        return Poly(self.ring, out)

    def subs(self, var, replacement) -> Poly:
        """Substitute ``replacement`` (a polynomial of the same ring or a
        scalar) for the variable ``var``."""
        i = self.ring.index(var)
        replacement = self._coerce(replacement)
        powers = {}
        out = self.ring.zero
        grouped: dict = {}
        for e, c in self._terms.items():
            rest = e[:i] + (0,) + e[i + 1:]
            grouped.setdefault(e[i], {})[rest] = c
        for k, part in grouped.items():
            if k not in powers:
                powers[k] = replacement ** k
            out = out + Poly(self.ring, part) * powers[k]
        return out

    def homogeneous_component(self, d: int) -> Poly:
        return Poly(self.ring, {e: c for e, c in self._terms.items() if sum(e) == d})

    def top_component(self) -> Poly:
        return self.homogeneous_component(self.total_degree())

    def coefficients_in(self, var) -> dict:
        """Group terms by the power of ``var``: {k: coefficient polynomial}."""
        i = self.ring.index(var)
        grouped: dict = {}
        for e, c in self._terms.items():
            grouped.setdefault(e[i], {})[e[:i] + (0,) + e[i + 1:]] = c
        return {k: Poly(self.ring, v) for k, v in grouped.items()}

    def lift(self, ring: Ring) -> Poly:
        """Embed into ``ring``, whose variables must include ours."""
        if ring is self.ring:
            return self
        idx = [ring.index(n) for n in self.ring.names]
        out = {}
        for e, c in self._terms.items():
            ne = [0] * ring.nvars
            for j, k in zip(idx, e):
                ne[j] = k
            out[tuple(ne)] = c
        return Poly(ring, out)

    def drop(self, ring: Ring) -> Poly:
        """Restrict to ``ring``, whose variables must cover every variable
        actually present."""
        keep = [self.ring.index(n) for n in ring.names]
        out = {}
        for e, c in self._terms.items():
            if sum(e) != sum(e[j] for j in keep):
                raise ValueError(f"{self} involves variables outside {ring.names}")
            out[tuple(e[j] for j in keep)] = c
        return Poly(ring, out)

    # -- evaluation -------------------------------------------------------
    def __call__(self, *values):
        """Evaluate at a point; exact for rational inputs, float/complex
        otherwise."""
        if len(values) != self.ring.nvars:
            raise ValueError(f"expected {self.ring.nvars} values")
        exact = all(isinstance(v, (int, Fraction, Coefficient, type(mpz()))) for v in values)
        if exact:
            values = [coeff(v) for v in values]
            total = mpq(0)
            for e, c in self._terms.items():
                t = c
                for v, k in zip(values, e):
                    if k:
                        t *= v ** k
                total += t
            return total
        total = 0
        for e, c in self._terms.items():
            t = float(c)
            for v, k in zip(values, e):
                if k:
                    t *= v ** k
            total += t
        return total

    # -- printing -----------------------------------------------------------
    def __repr__(self):
        if not self._terms:
            return "0"
        parts = []
        for e, c in self.terms():
            mono = "*".join(n if k == 1 else f"{n}^{k}" for n, k in zip(self.ring.names, e) if k)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def ring_ops(a: Poly, b: Poly, op: str) -> Poly:
    _same_ring(a, b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown ring operation {op!r}")


def differentiate(p: Poly, var) -> Poly:
    return p.diff(var)


def substitute(p: Poly, var, replacement) -> Poly:
    return p.subs(var, replacement)


def homogeneous_component(p: Poly, d: int) -> Poly:
    if d < 0:
        raise ValueError("degree must be non-negative")
    return p.homogeneous_component(d)


def divide_exact(a: Poly, b: Poly) -> Poly:
    """Quotient ``a / b``; raises ``ArithmeticError`` unless ``b`` divides
    ``a``."""
    _same_ring(a, b)
    if not b:
        raise ZeroDivisionError("exact division by zero polynomial")
    key = a.ring.order.key
    blm, blc = b.lm, b.lc
    rem = dict(a._terms)
    quot = {}
    bterms = b._terms
    while rem:
        m = max(rem, key=key)
        if any(x < y for x, y in zip(m, blm)):
            raise ArithmeticError("inexact polynomial division")
        qe = tuple(x - y for x, y in zip(m, blm))
        qc = rem[m] / blc
        quot[qe] = qc
        for e, c in bterms.items():
            ne = tuple(x + y for x, y in zip(e, qe))
            v = rem.get(ne, 0) - qc * c
            if v:
                rem[ne] = v
            else:
                rem.pop(ne, None)
    return Poly(a.ring, quot)


# Plain X, Y ring used for every polynomial that appears in files.
XY = Ring(("X", "Y"))


def from_literal(triples, ring: Ring = XY) -> Poly:
    """Parse a list of ``[ex, ey, "num/den"]`` triples."""
    terms: dict = {}
    for item in triples:
        if len(item) != ring.nvars + 1:
            raise ValueError(f"bad polynomial term {item!r}")
        *exp, c = item
        if any(not isinstance(k, int) or isinstance(k, bool) or k < 0 for k in exp):
            raise ValueError(f"bad exponent in {item!r}")
        e = tuple(exp)
        terms[e] = terms.get(e, 0) + coeff(c)
    return ring.from_dict(terms)


def to_literal(p: Poly) -> list:
    return [list(e) + [format_coeff(c)] for e, c in p.terms()]
