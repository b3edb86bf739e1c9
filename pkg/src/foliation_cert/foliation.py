"""Construction of the degree-10 foliation attached to a quartic with two
parallel bitangents, its affine 1-form, and the degree computation."""

from __future__ import annotations

from dataclasses import dataclass, fields, replace

from .errors import DegenerateFormError, InstanceError, NormalizationError
from .exact import XY, Poly, coeff, coprime
from .ideal import GroebnerBasis, coordinates, radical_basis


@dataclass(frozen=True)
class QuarticInstance:
    """A quartic F with lines l1 = X+Y+a, l2 = X+Y+b, and an optional cubic
    C (F_X when absent)."""

    F: Poly
    a: object = 0
    b: object = 1
    C: Poly | None = None
    construction: dict | None = None

    def __post_init__(self):
        object.__setattr__(self, "a", coeff(self.a))
        object.__setattr__(self, "b", coeff(self.b))
        if self.F.ring is not XY or (self.C is not None and self.C.ring is not XY):
            raise InstanceError("instance polynomials must live in Q[X, Y]")
        if self.F.total_degree() != 4:
            raise InstanceError(f"F must have degree 4, got {self.F.total_degree()}")
        if self.C is not None and self.C.total_degree() != 3:
            raise InstanceError(f"C must have degree 3, got {self.C.total_degree()}")
        if self.a == self.b:
            raise InstanceError("the two bitangent lines must be different (a == b)")

    @property
    def l1(self) -> Poly:
        X, Y = XY.gens()
        return X + Y + self.a

    @property
    def l2(self) -> Poly:
        X, Y = XY.gens()
        return X + Y + self.b

    @property
    def lines(self) -> Poly:
        return self.l1 * self.l2

    @property
    def cubic(self) -> Poly:
        return self.F.diff("X") if self.C is None else self.C

    def __eq__(self, other):
        if not isinstance(other, QuarticInstance):
            return NotImplemented
        return (self.F, self.a, self.b, self.C) == (other.F, other.a, other.b, other.C)

    def __hash__(self):
        return hash((self.F, self.a, self.b, self.C))


@dataclass(frozen=True)
class FoliationData:
    F: Poly
    l1: Poly
    l2: Poly
    C: Poly
    G: Poly
    h: Poly
    k: Poly
    h_prime: Poly
    k_prime: Poly
    A: Poly
    B: Poly
    scale: object = 1

    def fields(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self)}


@dataclass(frozen=True)
class OneForm:
    """P dX + Q dY."""

    P: Poly
    Q: Poly


@dataclass(frozen=True)
class DegreeReport:
    degree: int
    infinity_invariant: bool
    top_component: Poly


def cubic_scale(C: Poly, FX: Poly, bitangency: GroebnerBasis):
    """The scalar lam with C = lam * F_X at every point of the (radical)
    bitangency basis, or None when no single scalar works."""
    c = coordinates(C, bitangency)
    f = coordinates(FX, bitangency)
    pivot = next((i for i, v in enumerate(f) if v), None)
    if pivot is None:
        return None
    lam = c[pivot] / f[pivot]
    if not lam or any(ci != lam * fi for ci, fi in zip(c, f)):
        return None
    return lam


def build_foliation(inst: QuarticInstance, normalize: bool = True,
                    bitangency: GroebnerBasis | None = None) -> FoliationData:
    """Derived polynomials G, h, k, h', k', A, B for the instance.

    One set of formulas in a cubic C serves every instance; C defaults to
    F_X. With ``normalize`` a supplied cubic is
    divided by the scalar relating it to F_X on the bitangency points.
    """
    F = inst.F
    FX, FY = F.diff("X"), F.diff("Y")
    C = inst.cubic
    lam = coeff(1)
    if normalize and inst.C is not None:
        if bitangency is None:
            bitangency = radical_basis([F, inst.lines])
        lam = cubic_scale(C, FX, bitangency)
        if lam is None:
            raise NormalizationError("cubic is not a constant multiple of F_X on the bitangency points")
        C = C / lam

    L = inst.lines
    LX = L.diff("X")
    CX, CY = C.diff("X"), C.diff("Y")
    G = L * C ** 2
    h = LX * (C + FY) / 2 + L * CY
    k = -C - LX * CY / 2
    h_prime = -LX * (C + FX) / 2 - L * CX
    k_prime = C + LX * CX / 2
    A = h * C + k * F
    B = h_prime * C + k_prime * F
    fd = FoliationData(F, inst.l1, inst.l2, C, G, h, k, h_prime, k_prime, A, B, lam)
    _check_degrees(fd)
    return fd


def _check_degrees(fd: FoliationData) -> None:
    bounds = {"G": 8, "h": 4, "h_prime": 4, "k": 3, "k_prime": 3, "A": 7, "B": 7}
    for name, bound in bounds.items():
        if getattr(fd, name).total_degree() > bound:
            raise InstanceError(f"degree of {name} exceeds {bound}")
    if fd.G.total_degree() != 8:
        raise InstanceError("G must have degree exactly 8")


def perturb(fd: FoliationData, **changes) -> FoliationData:
    """Copy of ``fd`` with some fields replaced; A and B are recomputed from
    h, k, h', k' unless given explicitly."""
    new = replace(fd, **changes)
    if "A" not in changes:
        new = replace(new, A=new.h * new.C + new.k * new.F)
    if "B" not in changes:
        new = replace(new, B=new.h_prime * new.C + new.k_prime * new.F)
    return new


def one_form(fd: FoliationData, check_saturated: bool = True) -> OneForm:
    """Affine coefficients of G dF + F (B dX - A dY)."""
    FX, FY = fd.F.diff("X"), fd.F.diff("Y")
    P = fd.G * FX + fd.F * fd.B
    Q = fd.G * FY - fd.F * fd.A
    if check_saturated and not coprime(P, Q):
        raise DegenerateFormError("P and Q share a nonconstant factor")
    return OneForm(P, Q)


def invariance_defect(fd: FoliationData, w: OneForm) -> Poly:
    """P F_Y - Q F_X - F (A F_X + B F_Y); identically zero when the curve
    F = 0 is invariant by construction."""
    FX, FY = fd.F.diff("X"), fd.F.diff("Y")
    return w.P * FY - w.Q * FX - fd.F * (fd.A * FX + fd.B * FY)


def degree_report(w: OneForm) -> DegreeReport:
    """Degree of the foliation P dX + Q dY on the projective plane.

    With m the top degree of the coefficients, the foliation has degree m-1
    and leaves the line at infinity non-invariant exactly when the degree
    m+1 part of X P + Y Q vanishes.
    """
    if w.P.is_zero() and w.Q.is_zero():
        raise ValueError("zero 1-form has no degree")
    m = max(w.P.total_degree(), w.Q.total_degree())
    X, Y = w.P.ring.gens()
    top = (X * w.P + Y * w.Q).homogeneous_component(m + 1)
    if top.is_zero():
        return DegreeReport(m - 1, False, top)
    return DegreeReport(m, True, top)


def top_identity_residues(fd: FoliationData) -> tuple[Poly, Poly]:
    """Top-degree parts of X(h'C + k'F) - Y(hC + kF) + 4 l1 l2 C**2 and of
    X G F_X + Y G F_Y - 4 G F. Both vanish for a well-formed instance."""
    X, Y = fd.F.ring.gens()
    FX, FY = fd.F.diff("X"), fd.F.diff("Y")
    dG = fd.G.total_degree()
    first = (X * (fd.h_prime * fd.C + fd.k_prime * fd.F)
             - Y * (fd.h * fd.C + fd.k * fd.F)
             + 4 * fd.l1 * fd.l2 * fd.C ** 2)
    euler = X * fd.G * FX + Y * fd.G * FY - 4 * fd.G * fd.F
    return first.homogeneous_component(dG), euler.homogeneous_component(dG + 4)


def check_top_identity(fd: FoliationData) -> bool:
    first, euler = top_identity_residues(fd)
    return first.is_zero() and euler.is_zero()
