"""Small plane-curve helpers built on the polynomial kernel."""

from __future__ import annotations

from . import univariate as uni
from .poly import Poly, Ring


def curve_derivative(f: Poly, F: Poly) -> Poly:
    """Derivative of ``f`` along the curve ``F = 0``: f_X F_Y - f_Y F_X."""
    return f.diff("X") * F.diff("Y") - f.diff("Y") * F.diff("X")


def restrict_to_line(F: Poly, offset) -> list:
    """Dense univariate restriction of ``F`` to the line X + Y + offset = 0,
    parametrised by X."""
    ring = F.ring
    line_y = -ring.gen("X") - offset
    return uni.from_poly(F.subs("Y", line_y), "X")


def dehomogenize_binary(form: Poly) -> tuple[list, int]:
    """Write a binary form in X, Y as ``Y**k * g(X, Y)`` with g(X, 1) of full
    degree; returns (dense g(X, 1), k)."""
    if not form:
        raise ValueError("zero form")
    d = form.total_degree()
    k = min(e[1] for e in form.coeffs)
    dense = [0] * (d + 1)
    for e, c in form.coeffs.items():
        if sum(e) != d:
            raise ValueError("not a homogeneous form")
        dense[e[0]] = c
    return uni.trim(dense), k


def binary_form_squarefree(form: Poly) -> bool:
    g, k = dehomogenize_binary(form)
    # the factor Y appears with multiplicity d - deg g(X, 1)
    ymult = form.total_degree() - uni.degree(g)
    return ymult <= 1 and uni.is_squarefree(g)


def binary_forms_coprime(f: Poly, g: Poly) -> bool:
    a, _ = dehomogenize_binary(f)
    b, _ = dehomogenize_binary(g)
    y_in_f = f.total_degree() > uni.degree(a)
    y_in_g = g.total_degree() > uni.degree(b)
    if y_in_f and y_in_g:
        return False
    return len(uni.gcd(a, b)) <= 1


def homogenize(F: Poly, name: str = "Z") -> Poly:
    """Homogenize a polynomial in X, Y to a form in X, Y, ``name``."""
    ring = Ring(F.ring.names + (name,), F.ring.order)
    d = F.total_degree()
    return ring.from_dict({e + (d - sum(e),): c for e, c in F.coeffs.items()})
