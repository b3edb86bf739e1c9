"""Floating-point shadow of the symbolic checks.

Points of each locus are found by eliminating one variable with an exact
resultant, taking eigenvalue roots of the eliminant, back-substituting and
Newton-polishing. Every polynomial the symbolic side decided is then
evaluated at those points.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np

from .exact import Poly, resultant
from .exact import univariate as uni

log = logging.getLogger(__name__)

ACCEPT = 1e-8
REJECT = 1e-4
CLUSTER_RADIUS = 1e-6


class OracleError(RuntimeError):
    pass


class NumericPoly:
    """Vectorised complex evaluation of a bivariate polynomial."""

    def __init__(self, p: Poly):
        self.poly = p
        items = list(p.coeffs.items())
        self.ex = np.array([e[0] for e, _ in items], dtype=int)
        self.ey = np.array([e[1] for e, _ in items], dtype=int)
        self.c = np.array([float(c) for _, c in items], dtype=float)

    def terms(self, x: complex, y: complex) -> np.ndarray:
        if not len(self.c):
            return np.zeros(0, dtype=complex)
        return self.c * np.power(complex(x), self.ex) * np.power(complex(y), self.ey)

    def __call__(self, x, y) -> complex:
        return complex(self.terms(x, y).sum())

    def relative(self, x, y) -> float:
        """|p(x, y)| over the sum of absolute term values: the size of the
        value against the rounding scale of its evaluation."""
        t = self.terms(x, y)
        if not len(t):
            return 0.0
        scale = float(np.abs(t).sum())
        if scale == 0.0:
            return 0.0
        return float(abs(t.sum()) / scale)


@dataclass
class NumericPoint:
    x: complex
    y: complex
    residuals: list = field(default_factory=list)
    cluster_multiplicity: int = 1
    locus: str = ""

    def to_dict(self) -> dict:
        return {
            "x": [float(self.x.real), float(self.x.imag)],
            "y": [float(self.y.real), float(self.y.imag)],
            "residuals": [float(r) for r in self.residuals],
            "cluster_multiplicity": self.cluster_multiplicity,
        }


def _newton(system: list, point: tuple, steps: int = 30) -> tuple:
    """Complex Newton iteration on a square 2x2 polynomial system."""
    funcs = [NumericPoly(p) for p in system]
    jac = [[NumericPoly(p.diff("X")), NumericPoly(p.diff("Y"))] for p in system]
    x, y = point
    for _ in range(steps):
        f = np.array([g(x, y) for g in funcs])
        J = np.array([[d(x, y) for d in row] for row in jac])
        try:
            dx, dy = np.linalg.solve(J, -f)
        except np.linalg.LinAlgError:
            break
        x, y = x + dx, y + dy
        if abs(dx) + abs(dy) <= 1e-15 * (1 + abs(x) + abs(y)):
            break
    return complex(x), complex(y)


# coordinate changes tried in turn: (X, Y) = M (u, v)
CHARTS = (
    ((1, 0), (0, 1)),
    ((0, 1), (1, 0)),
    ((1, 1), (0, 1)),
    ((1, -1), (0, 1)),
    ((1, 0), (1, 1)),
    ((1, 2), (0, 1)),
    ((1, -2), (1, 1)),
)


def _change(p: Poly, M) -> Poly:
    """p(M (X, Y)) as a polynomial in the new coordinates."""
    X, Y = p.ring.gens()
    (a, b), (c, d) = M
    new_x, new_y = a * X + b * Y, c * X + d * Y
    out = p.ring.zero
    for e, coef in p.coeffs.items():
        out = out + coef * new_x ** e[0] * new_y ** e[1]
    return out


def _eliminant_roots(F: Poly, g: Poly) -> tuple[list, list]:
    """Roots in X of Res_Y(F, g): (distinct roots with Yun multiplicity,
    raw eigenvalue roots of the full eliminant)."""
    r = uni.from_poly(resultant(F, g, "Y"), "X")
    if len(r) <= 1:
        raise OracleError("eliminant is constant")
    _, parts = uni.yun(r)
    distinct = []
    for mult, a in enumerate(parts, start=1):
        if len(a) > 1:
            for z in np.roots(uni.to_float(a)[::-1]):
                distinct.append((complex(z), mult))
    raw = [complex(z) for z in np.roots(uni.to_float(r)[::-1])]
    return distinct, raw


def solve_locus(F: Poly, g: Poly, polish: list, expected_points: int,
                expected_multiplicity: int) -> tuple[list, dict]:
    """Numerically solve F = g = 0.

    ``polish`` is a square system with simple roots at the same points, used
    for Newton refinement. The plain coordinates are tried first, then a
    swap and a few shears, until the eliminant has the expected shape
    (``expected_points`` distinct roots, each of ``expected_multiplicity``).
    """
    for M in CHARTS:
        Fs, gs = _change(F, M), _change(g, M)
        if Fs.degree("Y") < 1:
            continue
        distinct, raw = _eliminant_roots(Fs, gs)
        if len(distinct) != expected_points or any(m != expected_multiplicity for _, m in distinct):
            log.debug("chart %s: eliminant shape %s rejected", M, [m for _, m in distinct])
            continue
        ng = NumericPoly(gs)
        points = []
        for u, _ in distinct:
            fv = _coeffs_in_y(Fs, u)
            vs = np.roots(fv[::-1]) if len(fv) > 1 else []
            if not len(vs):
                break
            v = complex(min(vs, key=lambda vv: ng.relative(u, vv)))
            (a, b), (c, d) = M
            points.append((a * u + b * v, c * u + d * v))
        else:
            polished = [_newton(polish, pt) for pt in points]
            return polished, {"chart": M, "raw_roots": raw,
                              "eliminant_roots": [u for u, _ in distinct],
                              "multiplicities": [m for _, m in distinct]}
    raise OracleError("could not find an elimination direction with the expected root shape")


def _coeffs_in_y(p: Poly, x: complex) -> list:
    groups = p.coefficients_in("Y")
    n = max(groups)
    return [NumericPoly(groups[k])(x, 0) if k in groups else 0j for k in range(n + 1)]


def cluster_radius(multiplicity: int, base: float = CLUSTER_RADIUS) -> float:
    # an m-fold root moves by about eps**(1/m) under rounding of the coefficients
    return max(base, 10 * np.finfo(float).eps ** (1.0 / multiplicity))


def cluster(centres: list, raw: list, multiplicities: list | None = None,
            base: float = CLUSTER_RADIUS) -> list:
    """Number of raw eigenvalue roots within the (relative) cluster radius
    of each centre."""
    if multiplicities is None:
        multiplicities = [1] * len(centres)
    radii = [cluster_radius(m, base) for m in multiplicities]
    counts = [0] * len(centres)
    for z in raw:
        dists = [abs(z - c) / max(1.0, abs(c)) for c in centres]
        j = int(np.argmin(dists))
        if dists[j] <= radii[j]:
            counts[j] += 1
    return counts


def solve_loci(F: Poly, lines: Poly, cubic: Poly, tol: float = 1e-10) -> dict:
    """Approximate the bitangency points V(F, l1 l2) and the points V(F, C).

    Returns {"bitangency": [...], "vertical": [...]} of ``NumericPoint``.
    """
    FX, FY = F.diff("X"), F.diff("Y")
    out = {}
    specs = {
        "bitangency": (lines, [lines, FX - FY], 4, 2),
        "vertical": (cubic, [F, cubic], 12, 1),
    }
    for kind, (g, polish, n, mult) in specs.items():
        pts, info = solve_locus(F, g, polish, n, mult)
        nF, ng = NumericPoly(F), NumericPoly(g)
        counts = cluster(info["eliminant_roots"], info["raw_roots"], info["multiplicities"])
        points = []
        for (x, y), c in zip(pts, counts):
            res = [nF.relative(x, y), ng.relative(x, y)]
            if max(res) >= tol:
                raise OracleError(f"{kind} point did not converge: residuals {res}")
            points.append(NumericPoint(x, y, res, c, kind))
        log.debug("%s locus solved in chart %s", kind, info["chart"])
        out[kind] = points
    return out


@dataclass
class ResidualCheck:
    label: str
    locus: str
    max_residual: float
    numeric_verdict: str
    symbolic_verdict: bool | None
    agree: bool

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "locus": self.locus,
            "max_residual": self.max_residual,
            "numeric": self.numeric_verdict,
            "symbolic": self.symbolic_verdict,
            "agree": self.agree,
        }


def numeric_verdict(max_residual: float, accept: float = ACCEPT, reject: float = REJECT) -> str:
    if max_residual < accept:
        return "vanishes"
    if max_residual > reject:
        return "nonzero"
    return "ambiguous"


def residuals(exprs: list, points: list, symbolic=None, accept: float = ACCEPT,
              reject: float = REJECT) -> tuple[float, bool]:
    """Largest relative residual of ``exprs`` over ``points`` and whether the
    numeric verdict matches the symbolic one (``symbolic`` is a bool or a
    list of bools, one per expression; default: all vanish)."""
    if symbolic is None or isinstance(symbolic, bool):
        symbolic = [True if symbolic is None else symbolic] * len(exprs)
    worst = 0.0
    agree = True
    for p, sym in zip(exprs, symbolic):
        r = max((NumericPoly(p).relative(pt.x, pt.y) for pt in points), default=0.0)
        worst = max(worst, r)
        verdict = numeric_verdict(r, accept, reject)
        agree &= (verdict == "vanishes") if sym else (verdict == "nonzero")
    return worst, agree


def check(label: str, p: Poly, points: list, locus: str, symbolic: bool | None,
          accept: float = ACCEPT, reject: float = REJECT) -> ResidualCheck:
    r = max((NumericPoly(p).relative(pt.x, pt.y) for pt in points), default=0.0)
    verdict = numeric_verdict(r, accept, reject)
    if symbolic is None:
        agree = verdict != "ambiguous"
    else:
        agree = (verdict == "vanishes") if symbolic else (verdict == "nonzero")
    return ResidualCheck(label, locus, r, verdict, symbolic, agree)
