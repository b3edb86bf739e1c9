"""Regenerate tests/fixtures/frozen.json with sympy and mpmath.

Independent of foliation_cert: instances are read straight from the JSON
fixtures and every quantity is recomputed from scratch. Run by hand; the
test suite only reads the frozen output.
"""

import json
from pathlib import Path

import mpmath
import sympy as sp

HERE = Path(__file__).resolve().parent
FIX = HERE.parent / "fixtures"
X, Y, t = sp.symbols("X Y t")


def load(name):
    data = json.loads((FIX / name).read_text())

    def poly(triples):
        return sp.expand(sum(sp.Rational(c) * X**ex * Y**ey for ex, ey, c in triples))

    C = poly(data["C"]) if data.get("C") else None
    return poly(data["F"]), sp.Rational(data["a"]), sp.Rational(data["b"]), C


def literal(p):
    P = sp.Poly(p, X, Y)
    return sorted([[int(m[0]), int(m[1]), f"{sp.Rational(c).p}/{sp.Rational(c).q}"]
                   for m, c in P.terms()])


def gb_literal(gens):
    G = sp.groebner(gens, X, Y, order="grevlex")
    return [literal(g) for g in G.exprs]


def foliation(F, a, b, C=None):
    FX, FY = sp.diff(F, X), sp.diff(F, Y)
    C = FX if C is None else C
    L = (X + Y + a) * (X + Y + b)
    LX = sp.diff(L, X)
    G = sp.expand(L * C**2)
    h = LX * (C + FY) / 2 + L * sp.diff(C, Y)
    k = -C - LX * sp.diff(C, Y) / 2
    hp = -LX * (C + FX) / 2 - L * sp.diff(C, X)
    kp = C + LX * sp.diff(C, X) / 2
    A = sp.expand(h * C + k * F)
    B = sp.expand(hp * C + kp * F)
    P = sp.expand(G * FX + F * B)
    Q = sp.expand(G * FY - F * A)
    return dict(G=G, A=A, B=B, P=P, Q=Q, L=L, C=C)


def numeric_points(F, g, digits=60):
    """Common zeros of F and g from the resultant in X, refined at high precision."""
    mpmath.mp.dps = digits
    r = sp.Poly(sp.resultant(F, g, Y), X)
    sqf = sp.Poly(sp.sqf_part(r.as_expr()), X)
    pts = []
    for xr in sp.Poly(sqf, X).nroots(n=digits, maxsteps=200):
        fy = sp.Poly(F.subs(X, xr), Y)
        gy = sp.Poly(g.subs(X, xr), Y)
        ys = fy.nroots(n=digits, maxsteps=200)
        y = min(ys, key=lambda v: abs(complex(gy.eval(v))))
        pts.append((mpmath.mpc(complex(xr)), mpmath.mpc(complex(y))))
    fs = [sp.lambdify((X, Y), e, "mpmath") for e in (F, g)]
    jac = [[sp.lambdify((X, Y), sp.diff(e, v), "mpmath") for v in (X, Y)] for e in (F, g)]
    refined = []
    for x, y in pts:
        for _ in range(60):
            f = mpmath.matrix([fs[0](x, y), fs[1](x, y)])
            J = mpmath.matrix([[jac[i][j](x, y) for j in range(2)] for i in range(2)])
            try:
                d = mpmath.lu_solve(J, -f)
            except ZeroDivisionError:
                break
            x, y = x + d[0], y + d[1]
        refined.append((x, y))
    return refined


def torsion_kernel_dim(F, pts):
    mons = [X**i * Y**(d - i) for d in range(5) for i in range(d, -1, -1)]
    rows = [[complex(m.subs({X: complex(px), Y: complex(py)})) for m in mons] for px, py in pts]
    M = mpmath.matrix([[mpmath.mpc(v) for v in r] for r in rows])
    sv = mpmath.svd_c(M, compute_uv=False)
    rank = sum(1 for s in sv if abs(s) > mpmath.mpf(10) ** -6 * max(abs(v) for v in sv))
    return 15 - rank


def radical_member(f, gens):
    G = sp.groebner(list(gens) + [1 - t * f], t, X, Y, order="grevlex")
    return G.exprs == [1]


def main():
    out = {}
    F, a, b, _ = load("main_instance.json")
    FX, FY = sp.diff(F, X), sp.diff(F, Y)
    fol = foliation(F, a, b)
    L = fol["L"]
    res = sp.Poly(sp.resultant(F, FX, Y), X)
    out["main"] = {
        "res_y_F_FX": literal(res.as_expr()),
        "res_y_F_FX_degree": res.degree(),
        "res_y_F_FX_squarefree": sp.degree(sp.gcd(res, res.diff(X)), X) == 0,
        "gb_F_FX": gb_literal([F, FX]),
        "gb_F_lines": gb_literal([F, L]),
        "gb_F_FX_FY": gb_literal([F, FX, FY]),
        "deg_G": sp.Poly(fol["G"], X, Y).total_degree(),
        "deg_A": sp.Poly(fol["A"], X, Y).total_degree(),
        "deg_B": sp.Poly(fol["B"], X, Y).total_degree(),
        "deg_P": sp.Poly(fol["P"], X, Y).total_degree(),
        "deg_Q": sp.Poly(fol["Q"], X, Y).total_degree(),
        "gcd_PQ": literal(sp.gcd(fol["P"], fol["Q"])),
        "A": literal(fol["A"]),
        "B": literal(fol["B"]),
        "FX_minus_FY_in_radical": radical_member(FX - FY, [F, L]),
    }
    pts = numeric_points(F, L) + numeric_points(F, FX)
    out["main"]["numeric_point_count"] = len(pts)
    out["main"]["torsion_kernel_dim"] = torsion_kernel_dim(F, pts)
    # pointwise relation at the bitangency points: A = (l1 l2)_Y F_X^2 there
    bit = numeric_points(F, L)
    e = sp.lambdify((X, Y), fol["A"] - sp.diff(L, Y) * FX**2, "mpmath")
    out["main"]["A_vs_LY_FX2_max_abs"] = float(max(abs(e(x, y)) for x, y in bit))

    F4 = X**4 + Y**4 - 1
    out["fermat"] = {"gb_F_FX": gb_literal([F4, sp.diff(F4, X)])}

    Ff, af, bf, Cf = load("family_instance.json")
    ff = foliation(Ff, af, bf, Cf)
    out["family"] = {
        "deg_P": sp.Poly(ff["P"], X, Y).total_degree(),
        "deg_Q": sp.Poly(ff["Q"], X, Y).total_degree(),
        "gcd_PQ": literal(sp.gcd(ff["P"], ff["Q"])),
        "C_minus_FX_in_radical": radical_member(Cf - sp.diff(Ff, X), [Ff, ff["L"]]),
    }
    fpts = numeric_points(Ff, ff["L"]) + numeric_points(Ff, Cf)
    out["family"]["torsion_kernel_dim"] = torsion_kernel_dim(Ff, fpts)

    (FIX / "frozen.json").write_text(json.dumps(out, indent=1) + "\n")


if __name__ == "__main__":
    main()
