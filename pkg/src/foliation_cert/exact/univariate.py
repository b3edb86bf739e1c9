"""Dense univariate kernels over Q.

Polynomials are lists of ``mpq`` coefficients, constant term first, with no
trailing zeros (the zero polynomial is ``[]``).
"""

from __future__ import annotations

from gmpy2 import mpq

from .poly import Poly, Ring, coeff

_MPQ = type(mpq())


def trim(p: list) -> list:
    p = [c if isinstance(c, _MPQ) else coeff(c) for c in p]
    while p and not p[-1]:
        p.pop()
    return p


def degree(p: list) -> int:
    return len(p) - 1


def add(p: list, q: list) -> list:
    n = max(len(p), len(q))
    return trim([(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)])


def sub(p: list, q: list) -> list:
    return add(p, [-c for c in q])


def mul(p: list, q: list) -> list:
    if not p or not q:
        return []
    out = [mpq(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return trim(out)


def scale(p: list, c) -> list:
    c = coeff(c)
    return trim([a * c for a in p])


def derivative(p: list) -> list:
    return trim([p[i] * i for i in range(1, len(p))])


def monic(p: list) -> list:
    if not p:
        return []
    lc = p[-1]
    return [a / lc for a in p]


def divmod_(p: list, q: list) -> tuple[list, list]:
    if not q:
        raise ZeroDivisionError("division by zero polynomial")
    r = [mpq(a) for a in p]
    dq = len(q) - 1
    if len(r) - 1 < dq:
        return [], trim(r)
    quot = [mpq(0)] * (len(r) - dq)
    lc = q[-1]
    for k in range(len(r) - 1 - dq, -1, -1):
        c = r[k + dq] / lc
        quot[k] = c
        if c:
            for j, b in enumerate(q):
                r[k + j] -= c * b
    return trim(quot), trim(r[:dq])


def gcd(p: list, q: list) -> list:
    """Monic gcd (``[]`` when both inputs vanish)."""
    a, b = trim(p), trim(q)
    while b:
        a, b = b, divmod_(a, b)[1]
    return monic(a)


def squarefree_part(p: list) -> list:
    p = trim(p)
    if len(p) <= 1:
        return monic(p)
    return monic(divmod_(p, gcd(p, derivative(p)))[0])


def yun(p: list) -> tuple:
    """Squarefree decomposition ``p = c * prod(a_i ** i)``.

    Returns ``(c, [a_1, a_2, ...])`` with each ``a_i`` monic and squarefree.
    """
    p = trim(p)
    if not p:
        raise ValueError("zero polynomial has no squarefree decomposition")
    c = p[-1]
    f = monic(p)
    if len(f) == 1:
        return c, []
    factors = []
    df = derivative(f)
    a = gcd(f, df)
    b = divmod_(f, a)[0]
    cq = divmod_(df, a)[0]
    d = sub(cq, derivative(b))
    while len(b) > 1:
        ai = gcd(b, d)
        factors.append(ai)
        b = divmod_(b, ai)[0]
        cq = divmod_(d, ai)[0]
        d = sub(cq, derivative(b))
    while factors and len(factors[-1]) == 1:
        factors.pop()
    return c, factors


def square_split(u: list) -> tuple:
    """Detect ``u = c * q**2`` with ``q`` monic.

    Returns ``(True, c, q)`` or ``(False, None, None)``. The returned ``q``
    need not be squarefree; callers check that separately.
    """
    u = trim(u)
    if not u:
        raise ValueError("square_split of the zero polynomial")
    c, parts = yun(u)
    q = [mpq(1)]
    for i, a in enumerate(parts, start=1):
        if len(a) == 1:
            continue
        if i % 2:
            return False, None, None
        for _ in range(i // 2):
            q = mul(q, a)
    if scale(mul(q, q), c) != u:
        raise AssertionError("square_split reconstruction failed")
    return True, c, q


def is_squarefree(p: list) -> bool:
    p = trim(p)
    return len(gcd(p, derivative(p))) <= 1


def evaluate(p: list, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def to_float(p: list) -> list:
    return [float(c) for c in p]


def from_poly(p: Poly, var=None) -> list:
    """Dense coefficients of a polynomial in a single variable."""
    ring = p.ring
    if var is None:
        live = {i for e in p.coeffs for i, k in enumerate(e) if k}
        if len(live) > 1:
            raise ValueError(f"{p} is not univariate")
        i = live.pop() if live else 0
    else:
        i = ring.index(var)
    out = [mpq(0)] * (max((e[i] for e in p.coeffs), default=-1) + 1)
    for e, c in p.coeffs.items():
        if sum(e) != e[i]:
            raise ValueError(f"{p} is not univariate in {ring.names[i]}")
        out[e[i]] = c
    return trim(out)


def to_poly(p: list, ring: Ring, var) -> Poly:
    i = ring.index(var)
    terms = {}
    for k, c in enumerate(p):
        if c:
            e = [0] * ring.nvars
            e[i] = k
            terms[tuple(e)] = c
    return Poly(ring, terms)
