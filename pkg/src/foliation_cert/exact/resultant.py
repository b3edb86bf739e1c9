"""Resultants by the subresultant PRS, and coprimality tests."""

from __future__ import annotations

from gmpy2 import mpq

from . import univariate as uni
from .poly import Poly, divide_exact


def _as_univariate(p: Poly, var) -> list:
    """Dense list of coefficient polynomials (constant term first)."""
    groups = p.coefficients_in(var)
    n = max(groups, default=-1)
    return [groups.get(k, p.ring.zero) for k in range(n + 1)]


def _from_univariate(coeffs: list, var, ring) -> Poly:
    x = ring.gen(var)
    out = ring.zero
    for k, c in enumerate(coeffs):
        if c:
            out = out + c * x ** k
    return out


def _trim(p: list) -> list:
    p = list(p)
    while p and not p[-1]:
        p.pop()
    return p


def _prem(a: list, b: list) -> list:
    """Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b."""
    r = list(a)
    db = len(b) - 1
    lc = b[-1]
    e = len(a) - len(b) + 1
    while r and len(r) - 1 >= db:
        dr = len(r) - 1
        top = r[-1]
        r = [c * lc for c in r]
        for j in range(db + 1):
            r[dr - db + j] = r[dr - db + j] - top * b[j]
        r = _trim(r)
        e -= 1
    if e > 0:
        f = lc ** e
        r = [c * f for c in r]
    return _trim(r)


def resultant(p: Poly, q: Poly, var) -> Poly:
    """Resultant of ``p`` and ``q`` with respect to ``var``.

    The result lies in the same ring and does not involve ``var``. Uses the
    subresultant PRS, with exact polynomial division in the coefficient
    ring.
    """
    if p.ring is not q.ring:
        raise ValueError("ring mismatch")
    if not p or not q:
        raise ValueError("resultant of a zero polynomial")
    A = _as_univariate(p, var)
    B = _as_univariate(q, var)
    ring = p.ring
    if len(A) == 1 and len(B) == 1:
        raise ValueError(f"both inputs are constant in {var}")
    if len(B) == 1:
        return B[0] ** (len(A) - 1)
    if len(A) == 1:
        return A[0] ** (len(B) - 1)

    s = 1
    if len(A) < len(B):
        A, B = B, A
        if (len(A) - 1) % 2 and (len(B) - 1) % 2:
            s = -1
    g = h = ring.one
    while True:
        da, db = len(A) - 1, len(B) - 1
        delta = da - db
        if da % 2 and db % 2:
            s = -s
        R = _prem(A, B)
        A = B
        div = g * h ** delta
        B = [divide_exact(c, div) for c in R]
        g = A[-1]
        if delta == 0:
            h = h
        elif delta == 1:
            h = g
        else:
            h = divide_exact(g ** delta, h ** (delta - 1))
        if not B:
            return ring.zero
        if len(B) == 1:
            break
    da = len(A) - 1
    # h <- h^(1 - deg A) * lc(B)^deg A, with B now constant in var
    if da == 0:
        res = h
    elif da == 1:
        res = B[0]
    else:
        res = divide_exact(B[0] ** da, h ** (da - 1))
    return res * s


def univariate_resultant(p: list, q: list) -> mpq:
    """Resultant of two dense univariate polynomials via the Euclidean
    algorithm over Q."""
    p, q = uni.trim(p), uni.trim(q)
    if not p or not q:
        return mpq(0)
    res = mpq(1)
    while True:
        dp, dq = len(p) - 1, len(q) - 1
        if dq == 0:
            return res * q[0] ** dp
        r = uni.divmod_(p, q)[1]
        if not r:
            return mpq(0)
        dr = len(r) - 1
        if dp % 2 and dq % 2:
            res = -res
        res *= q[-1] ** (dp - dr)
        p, q = q, r


def content_in(p: Poly, var) -> list:
    """Univariate gcd (in the remaining variable) of the coefficients of
    ``p`` viewed as a polynomial in ``var``. Only for bivariate rings."""
    ring = p.ring
    if ring.nvars != 2:
        raise ValueError("content_in needs a bivariate ring")
    other = ring.names[1 - ring.index(var)]
    g: list = []
    for c in p.coefficients_in(var).values():
        g = uni.gcd(g, uni.from_poly(c, other))
        if len(g) == 1:
            break
    return g


def coprime(p: Poly, q: Poly, var="Y", tries: int = 64) -> bool:
    """Exact test that ``p`` and ``q`` (bivariate) share no nonconstant
    factor.

    A common factor with positive degree in ``var`` would survive the
    specialisation of the other variable at any value where neither leading
    coefficient in ``var`` vanishes; a common factor free of ``var`` divides
    both contents.
    """
    ring = p.ring
    if not p or not q:
        return False
    if len(uni.gcd(content_in(p, var), content_in(q, var))) > 1:
        return False
    if not p.involves(var) or not q.involves(var):
        return True
    other = ring.names[1 - ring.index(var)]
    lp = p.coefficients_in(var)[p.degree(var)]
    lq = q.coefficients_in(var)[q.degree(var)]
    admissible = 0
    for k in range(tries):
        x0 = mpq(k * (-1) ** k, 1 + k // 7)
        if lp.subs(other, x0).is_zero() or lq.subs(other, x0).is_zero():
            continue
        ps = uni.from_poly(p.subs(other, x0), var)
        qs = uni.from_poly(q.subs(other, x0), var)
        if len(uni.gcd(ps, qs)) <= 1:
            return True
        admissible += 1
        if admissible >= 3:
            break
    # specialisations keep meeting; settle it with the full resultant
    return not resultant(p, q, var).is_zero()
