"""Groebner bases, normal forms and zero-dimensional ideal queries."""

from __future__ import annotations

import heapq
import itertools
import math
from dataclasses import dataclass

from gmpy2 import mpq

from .exact import univariate as uni
from .exact.poly import Poly, Ring, TermOrder
from .linalg import DependencyTracker


def _divides(a: tuple, b: tuple) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: tuple, b: tuple) -> tuple:
    return tuple(max(x, y) for x, y in zip(a, b))


def _neg_key(key, e):
    return tuple(-k for k in key(e))


def _leading(terms: dict, key) -> tuple:
    m = max(terms, key=key)
    return m, terms[m]


def _reduce(terms: dict, basis: list, key, full: bool = True) -> dict:
    """Remainder of ``terms`` on division by ``basis`` (a list of
    (lm, lc, terms) triples). With ``full=False`` stop at the first
    irreducible leading term."""
    f = dict(terms)
    rem = {}
    heap = [(_neg_key(key, e), e) for e in f]
    heapq.heapify(heap)
    queued = set(f)
    while heap:
        _, m = heapq.heappop(heap)
        queued.discard(m)
        c = f.get(m)
        if c is None:
            continue
        for lm, lc, g in basis:
            if _divides(lm, m):
                q = c / lc
                shift = tuple(x - y for x, y in zip(m, lm))
                for e, v in g.items():
                    ne = tuple(x + y for x, y in zip(e, shift))
                    nv = f.get(ne, 0) - q * v
                    if nv:
                        f[ne] = nv
                        if ne not in queued:
                            queued.add(ne)
                            heapq.heappush(heap, (_neg_key(key, ne), ne))
                    else:
                        f.pop(ne, None)
                break
        else:
            rem[m] = c
            del f[m]
            if not full:
                rem.update(f)
                return rem
    return rem


def _monic(terms: dict, key) -> tuple:
    lm, lc = _leading(terms, key)
    inv = 1 / lc
    return lm, mpq(1), {e: c * inv for e, c in terms.items()}


def _spoly(f: tuple, g: tuple) -> dict:
    lm_f, lc_f, tf = f
    lm_g, lc_g, tg = g
    L = _lcm(lm_f, lm_g)
    sf = tuple(x - y for x, y in zip(L, lm_f))
    sg = tuple(x - y for x, y in zip(L, lm_g))
    out = {}
    for e, c in tf.items():
        out[tuple(x + y for x, y in zip(e, sf))] = c / lc_f
    for e, c in tg.items():
        ne = tuple(x + y for x, y in zip(e, sg))
        v = out.get(ne, 0) - c / lc_g
        if v:
            out[ne] = v
        else:
            out.pop(ne, None)
    return out


@dataclass(frozen=True)
class GroebnerBasis:
    generators: tuple
    ring: Ring
    reduced: bool = True

    @property
    def order(self) -> TermOrder:
        return self.ring.order

    def _triples(self):
        return [(g.lm, g.lc, g.coeffs) for g in self.generators]

    def reduce(self, f: Poly) -> Poly:
        return normal_form(f, self)

    def contains(self, f: Poly) -> bool:
        return normal_form(f, self).is_zero()

    def contains_one(self) -> bool:
        return contains_one(self)

    def leading_monomials(self) -> list:
        return [g.lm for g in self.generators]

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)


def groebner(gens, order=None) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``.

    Buchberger's algorithm with the normal selection strategy and the
    product and chain criteria. Output generators are monic and sorted by
    decreasing leading monomial, so the result is deterministic.
    """
    gens = list(gens)
    if not gens:
        raise ValueError("groebner needs at least one generator")
    ring = gens[0].ring
    for g in gens:
        if g.ring is not ring:
            raise ValueError("ring mismatch among generators")
    if order is not None:
        ring = ring.with_order(order)
        gens = [Poly(ring, dict(g.coeffs)) for g in gens]
    key = ring.order.key

    G: list = []
    for g in gens:
        if g.is_zero():
            continue
        if g.is_constant():
            return GroebnerBasis((ring.one,), ring)
        G.append(_monic(dict(g.coeffs), key))
    if not G:
        return GroebnerBasis((), ring)

    pairs = {(i, j) for j in range(len(G)) for i in range(j)}
    while pairs:
        i, j = min(pairs, key=lambda p: (key(_lcm(G[p[0]][0], G[p[1]][0])), p))
        pairs.discard((i, j))
        lm_i, lm_j = G[i][0], G[j][0]
        if all(x == 0 or y == 0 for x, y in zip(lm_i, lm_j)):
            continue
        L = _lcm(lm_i, lm_j)
        if any(k != i and k != j and _divides(G[k][0], L)
               and (min(i, k), max(i, k)) not in pairs
               and (min(j, k), max(j, k)) not in pairs
               for k in range(len(G))):
            continue
        r = _reduce(_spoly(G[i], G[j]), G, key)
        if not r:
            continue
        new = _monic(r, key)
        if not any(new[0]):
            return GroebnerBasis((ring.one,), ring)
        n = len(G)
        G.append(new)
        pairs.update((k, n) for k in range(n))

    # minimalise, then interreduce
    keep = []
    for idx, g in enumerate(G):
        if any(_divides(h[0], g[0]) and (h[0] != g[0] or jdx < idx)
               for jdx, h in enumerate(G) if jdx != idx):
            continue
        keep.append(g)
    out = []
    for idx, g in enumerate(keep):
        others = keep[:idx] + keep[idx + 1:]
        r = _reduce(g[2], others, key)
        out.append(Poly(ring, _monic(r, key)[2]))
    out.sort(key=lambda p: key(p.lm), reverse=True)
    return GroebnerBasis(tuple(out), ring)


def normal_form(f: Poly, gb: GroebnerBasis) -> Poly:
    if f.ring.names != gb.ring.names:
        raise ValueError("ring mismatch between polynomial and basis")
    if f.ring is not gb.ring:
        f = Poly(gb.ring, dict(f.coeffs))
    return Poly(gb.ring, _reduce(f.coeffs, gb._triples(), gb.ring.order.key))


def s_polynomial(f: Poly, g: Poly) -> Poly:
    return Poly(f.ring, _spoly((f.lm, f.lc, f.coeffs), (g.lm, g.lc, g.coeffs)))


def is_groebner(gb: GroebnerBasis) -> bool:
    """Buchberger's criterion checked on every pair."""
    triples = gb._triples()
    key = gb.ring.order.key
    for a, b in itertools.combinations(triples, 2):
        if _reduce(_spoly(a, b), triples, key):
            return False
    return True


def is_reduced(gb: GroebnerBasis) -> bool:
    for i, g in enumerate(gb.generators):
        if g.lc != 1:
            return False
        for j, h in enumerate(gb.generators):
            if i != j and any(_divides(h.lm, e) for e in g.coeffs):
                return False
    return True


def contains_one(gb: GroebnerBasis) -> bool:
    return len(gb.generators) == 1 and gb.generators[0].is_constant()


def _as_basis(gens) -> GroebnerBasis:
    return gens if isinstance(gens, GroebnerBasis) else groebner(gens)


def radical_member(f: Poly, gens) -> bool:
    """Decide whether ``f`` vanishes on the variety of ``gens``.

    Rabinowitsch trick: f lies in the radical iff 1 - t*f together with the
    ideal generates the unit ideal. ``f`` is first reduced modulo the ideal,
    which does not change the answer and keeps the auxiliary basis small.
    """
    gb = _as_basis(gens)
    if not gb.generators:
        return f.is_zero()
    f0 = normal_form(f, gb)
    if f0.is_zero():
        return True
    ring = gb.ring
    tname = "t"
    while tname in ring.names:
        tname += "_"
    ext = ring.extend(tname)
    t = ext.gen(tname)
    aux = [g.lift(ext) for g in gb.generators] + [ext.one - t * f0.lift(ext)]
    return contains_one(groebner(aux))


def is_zero_dimensional(gb: GroebnerBasis) -> bool:
    if contains_one(gb):
        return True
    n = gb.ring.nvars
    for i in range(n):
        if not any(m[i] > 0 and sum(m) == m[i] for m in gb.leading_monomials()):
            return False
    return True


def standard_monomials(gb: GroebnerBasis) -> list:
    """Monomials outside the leading-term ideal, in decreasing order."""
    if contains_one(gb):
        return []
    if not is_zero_dimensional(gb):
        raise ValueError("ideal is not zero-dimensional")
    lms = gb.leading_monomials()
    n = gb.ring.nvars
    bounds = []
    for i in range(n):
        bounds.append(min(m[i] for m in lms if m[i] > 0 and sum(m) == m[i]))
    out = [e for e in itertools.product(*(range(b) for b in bounds))
           if not any(_divides(m, e) for m in lms)]
    key = gb.ring.order.key
    out.sort(key=key, reverse=True)
    return out


def quotient_dimension(gb: GroebnerBasis):
    """Dimension of the quotient algebra; ``math.inf`` when the ideal is not
    zero-dimensional."""
    if not is_zero_dimensional(gb):
        return math.inf
    return len(standard_monomials(gb))


def coordinates(f: Poly, gb: GroebnerBasis, basis: list | None = None) -> list:
    """Coefficients of the normal form of ``f`` on the standard monomials."""
    if basis is None:
        basis = standard_monomials(gb)
    nf = normal_form(f, gb)
    return [nf.coeffs.get(e, mpq(0)) for e in basis]


def minimal_polynomial(gb: GroebnerBasis, var) -> list:
    """Monic minimal polynomial (dense, constant term first) of the
    variable ``var`` in the quotient by a zero-dimensional ideal."""
    basis = standard_monomials(gb)
    if not basis:
        return [mpq(1)]
    x = gb.ring.gen(var)
    tracker = DependencyTracker()
    power = gb.ring.one
    for _ in range(len(basis) + 1):
        dep = tracker.add(coordinates(power, gb, basis))
        if dep is not None:
            return uni.monic(uni.trim(dep))
        power = normal_form(power * x, gb)
    raise AssertionError("no dependency among powers; quotient dimension is wrong")


def radical_basis(gens) -> GroebnerBasis:
    """Groebner basis of the radical of a zero-dimensional ideal
    (Seidenberg: adjoin the squarefree parts of the minimal univariate
    polynomials of every variable)."""
    gb = _as_basis(gens)
    if contains_one(gb):
        return gb
    if not is_zero_dimensional(gb):
        raise ValueError("ideal is not zero-dimensional")
    extra = []
    for name in gb.ring.names:
        mp = minimal_polynomial(gb, name)
        sqf = uni.squarefree_part(mp)
        if len(sqf) < len(mp):
            extra.append(uni.to_poly(sqf, gb.ring, name))
    if not extra:
        return gb
    return groebner(list(gb.generators) + extra)


def zero_dim_radical(gens) -> list:
    return list(radical_basis(gens).generators)
