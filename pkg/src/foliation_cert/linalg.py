"""Exact row reduction over Q for the small systems the checks need."""

from __future__ import annotations

from gmpy2 import mpq


def rref(rows: list[list]) -> tuple[list[list], list[int]]:
    """Reduced row echelon form; returns (rows, pivot columns)."""
    m = [[mpq(x) for x in r] for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: list[list]) -> int:
    return len(rref(rows)[1])


def nullspace(rows: list[list], ncols: int | None = None) -> list[list]:
    """Basis of {v : rows @ v = 0}."""
    if ncols is None:
        ncols = len(rows[0])
    red, pivots = rref(rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [mpq(0)] * ncols
        v[f] = mpq(1)
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


class DependencyTracker:
    """Feed vectors one at a time; reports the first linear dependency as
    coefficients over all vectors fed so far."""

    def __init__(self):
        self._rows = []  # (pivot, vector, combination)
        self._count = 0

    def add(self, vec: list) -> list | None:
        k = self._count
        self._count += 1
        v = [mpq(x) for x in vec]
        combo = {k: mpq(1)}
        for piv, row, rc in self._rows:
            f = v[piv]
            if f:
                v = [a - f * b for a, b in zip(v, row)]
                for j, c in rc.items():
                    combo[j] = combo.get(j, 0) - f * c
        piv = next((i for i, x in enumerate(v) if x), None)
        if piv is None:
            return [combo.get(j, mpq(0)) for j in range(k + 1)]
        inv = 1 / v[piv]
        v = [x * inv for x in v]
        combo = {j: c * inv for j, c in combo.items()}
        self._rows.append((piv, v, combo))
        return None
