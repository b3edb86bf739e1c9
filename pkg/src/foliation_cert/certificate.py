"""Verification of the leaf property and the accompanying claims.

Every pointwise statement about the sixteen singular points is decided by
radical membership over Q against the ideal of the points, never by
evaluating at algebraic numbers.
"""

from __future__ import annotations

import logging
import sys
import time
from dataclasses import dataclass, field

from . import oracle
from .errors import (EXIT_CERTIFIED, EXIT_CHECK_FAILED, EXIT_PRECONDITION,
                     InstanceError)
from .exact import (XY, Poly, Ring, coeff, curve_derivative, format_coeff,
                    homogenize, to_literal)
from .exact import univariate as uni
from .exact.curves import (binary_form_squarefree, binary_forms_coprime,
                           restrict_to_line)
from .foliation import (DegreeReport, FoliationData, OneForm, QuarticInstance,
                        build_foliation, check_top_identity, degree_report,
                        invariance_defect, one_form)
from .ideal import (GroebnerBasis, contains_one, groebner, quotient_dimension,
                    radical_basis, radical_member, standard_monomials,
                    coordinates)
from .linalg import rank

log = logging.getLogger(__name__)

BITANGENCY = "bitangency"
VERTICAL = "vertical"

CURVE_DEGREE = 4
SELF_INTERSECTION = CURVE_DEGREE ** 2


# --------------------------------------------------------------------------
# preconditions

@dataclass
class Diagnostics:
    checks: dict = field(default_factory=dict)
    notes: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def failed(self) -> list:
        return [k for k, v in self.checks.items() if not v]

    def to_dict(self) -> dict:
        return {"ok": self.ok, "checks": dict(self.checks), "notes": dict(self.notes)}


def _chart(Fh: Poly, var: str) -> list:
    """Projective Jacobian ideal of ``Fh`` in the affine chart var = 1."""
    others = [n for n in Fh.ring.names if n != var]
    ring = Ring(others, Fh.ring.order)
    gens = [Fh] + [Fh.diff(n) for n in Fh.ring.names]
    return [g.subs(var, 1).drop(ring) for g in gens]


def validate_quartic(inst: QuarticInstance, order=None) -> Diagnostics:
    """Smoothness, behaviour at infinity, and distinctness of the twelve
    points of V(F, C). Each check is reported separately."""
    F, C = inst.F, inst.cubic
    FX, FY = F.diff("X"), F.diff("Y")
    d = Diagnostics()
    d.checks["affine_smooth"] = contains_one(groebner([F, FX, FY], order))

    top = F.homogeneous_component(4)
    d.checks["top_form_squarefree"] = binary_form_squarefree(top)
    Fh = homogenize(F)
    d.checks["smooth_at_infinity"] = all(contains_one(groebner(_chart(Fh, v), order)) for v in ("X", "Y"))

    try:
        gb = groebner([F, C], order)
        scheme = quotient_dimension(gb)
        reduced = quotient_dimension(radical_basis(gb)) if scheme != float("inf") else scheme
    except ValueError:
        scheme = reduced = float("inf")
    d.notes["vertical_scheme_length"] = scheme if scheme != float("inf") else "infinite"
    d.notes["vertical_reduced_count"] = reduced if reduced != float("inf") else "infinite"
    d.checks["twelve_distinct_points"] = scheme == 12 and reduced == 12

    d.checks["lines_not_asymptotic"] = top(1, -1) != 0
    cubic_top = C.homogeneous_component(3)
    d.checks["infinity_coprime"] = bool(cubic_top) and binary_forms_coprime(top, cubic_top)
    return d


@dataclass
class BitangentCheck:
    line: str
    is_square: bool
    squarefree_quadratic: bool
    scalar: object = None
    chord: list | None = None

    @property
    def ok(self) -> bool:
        return self.is_square and self.squarefree_quadratic

    def to_dict(self) -> dict:
        return {
            "line": self.line,
            "ok": self.ok,
            "is_square": self.is_square,
            "squarefree_quadratic": self.squarefree_quadratic,
            "scalar": None if self.scalar is None else f"{self.scalar.numerator}/{self.scalar.denominator}",
        }


def certify_bitangent(inst: QuarticInstance, which: str) -> BitangentCheck:
    """F restricted to the line must be c * q**2 with q a squarefree
    quadratic."""
    offset = {"l1": inst.a, "l2": inst.b}[which]
    u = restrict_to_line(inst.F, offset)
    if not u:
        return BitangentCheck(which, False, False)
    ok, c, q = uni.square_split(u)
    if not ok:
        return BitangentCheck(which, False, False)
    return BitangentCheck(which, True, uni.degree(q) == 2 and uni.is_squarefree(q), c, q)


def bitangent_points_distinct(inst: QuarticInstance) -> bool:
    return quotient_dimension(radical_basis([inst.F, inst.lines])) == 4


# --------------------------------------------------------------------------
# loci

@dataclass
class Locus:
    kind: str
    generators: tuple
    gb: GroebnerBasis
    radical: GroebnerBasis
    scheme_length: int
    reduced_count: int

    def to_dict(self) -> dict:
        return {"kind": self.kind, "scheme_length": self.scheme_length,
                "reduced_count": self.reduced_count}


def make_locus(kind: str, gens: list, order=None) -> Locus:
    gb = groebner(gens, order)
    rad = radical_basis(gb)
    return Locus(kind, tuple(gens), gb, rad, quotient_dimension(gb), quotient_dimension(rad))


def build_loci(inst: QuarticInstance, cubic: Poly | None = None, order=None) -> tuple[Locus, Locus]:
    """The bitangency points V(F, l1 l2) and the points V(F, C), with their
    invariants checked; raises ``InstanceError`` naming the failed ideal."""
    F = inst.F
    FX, FY = F.diff("X"), F.diff("Y")
    C = inst.cubic if cubic is None else cubic
    bit = make_locus(BITANGENCY, [F, inst.lines], order)
    vert = make_locus(VERTICAL, [F, C], order)
    if (bit.scheme_length, bit.reduced_count) != (8, 4):
        raise InstanceError(f"<F, l1 l2>: scheme length {bit.scheme_length}, "
                            f"{bit.reduced_count} points (expected 8, 4)")
    if (vert.scheme_length, vert.reduced_count) != (12, 12):
        raise InstanceError(f"<F, C>: scheme length {vert.scheme_length}, "
                            f"{vert.reduced_count} points (expected 12, 12)")
    if not contains_one(groebner([F, C, inst.lines], order)):
        raise InstanceError("<F, C, l1 l2> is not the unit ideal: the loci meet")
    for loc in (bit, vert):
        if not contains_one(groebner(list(loc.generators) + [FY], order)):
            raise InstanceError(f"F_Y vanishes somewhere on the {loc.kind} locus")
    if not radical_member(FX - FY, bit.gb):
        raise InstanceError("F_X - F_Y is not in the radical of <F, l1 l2>")
    return bit, vert


# --------------------------------------------------------------------------
# the five conditions

CONDITION_TEXT = {
    1: "A = G_Y",
    2: "A F_X + B F_Y = 0",
    3: "A_Y = G_YY/2 + F_YY G_Y/(2 F_Y)",
    4: "B_Y - A_X = -F_XY G_Y/F_Y - G_XY",
    5: "B_X = -G_XX/2 - F_XX G_Y/(2 F_Y)",
}


def condition_polynomial(n: int, fd: FoliationData) -> Poly:
    """Denominator-cleared form of condition ``n``; the condition holds at a
    point with F_Y != 0 iff this polynomial vanishes there."""
    F, G, A, B = fd.F, fd.G, fd.A, fd.B
    FX, FY = F.diff("X"), F.diff("Y")
    FXX, FXY, FYY = F.diff("X", 2), FX.diff("Y"), F.diff("Y", 2)
    GX, GY = G.diff("X"), G.diff("Y")
    if n == 1:
        return A - GY
    if n == 2:
        return A * FX + B * FY
    if n == 3:
        return 2 * FY * A.diff("Y") - FY * GY.diff("Y") - FYY * GY
    if n == 4:
        return FY * (B.diff("Y") - A.diff("X")) + FXY * GY + FY * GX.diff("Y")
    if n == 5:
        return 2 * FY * B.diff("X") + FY * GX.diff("X") + FXX * GY
    raise ValueError(f"no condition {n}")


@dataclass
class ConditionVerdict:
    condition_id: int
    locus_kind: str
    passed: bool
    checked_polynomial: Poly

    def to_dict(self) -> dict:
        return {"condition": self.condition_id, "locus": self.locus_kind,
                "statement": CONDITION_TEXT[self.condition_id], "passed": self.passed}


def check_condition(n: int, fd: FoliationData, locus: Locus) -> ConditionVerdict:
    p = condition_polynomial(n, fd)
    return ConditionVerdict(n, locus.kind, radical_member(p, locus.gb), p)


# --------------------------------------------------------------------------
# singularities, tangency, torsion

@dataclass
class SingularLocusVerdict:
    P_vanishes: bool
    Q_vanishes: bool
    G_in_singular_radical: bool

    @property
    def passed(self) -> bool:
        return self.P_vanishes and self.Q_vanishes and self.G_in_singular_radical

    def to_dict(self) -> dict:
        return {"passed": self.passed, "P_in_rad_FG": self.P_vanishes,
                "Q_in_rad_FG": self.Q_vanishes, "G_in_rad_FPQ": self.G_in_singular_radical}


def singular_locus_check(fd: FoliationData, w: OneForm, order=None) -> SingularLocusVerdict:
    """V(F, P, Q) = V(F, G) by mutual radical membership."""
    FG = groebner([fd.F, fd.G], order)
    FPQ = groebner([fd.F, w.P, w.Q], order)
    return SingularLocusVerdict(radical_member(w.P, FG), radical_member(w.Q, FG),
                                radical_member(fd.G, FPQ))


@dataclass
class TangencyReport:
    d: int
    curve_self_intersection: int
    tang_total: int
    per_locus_order_at_least_two: dict
    multiplicity_exactly_two: bool
    point_count: int
    memberships: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"degree": self.d, "self_intersection": self.curve_self_intersection,
                "total": self.tang_total, "order_at_least_two": dict(self.per_locus_order_at_least_two),
                "points": self.point_count, "exact_two": self.multiplicity_exactly_two}


def tangency_total(d: int, curve_degree: int = CURVE_DEGREE,
                   self_intersection: int = SELF_INTERSECTION) -> int:
    """tang = (d + 2) deg S - S.S for an invariant curve S."""
    return (d + 2) * curve_degree - self_intersection


def exactly_two(orders_ok: bool, singular_ok: bool, infinity_ok: bool,
                points: int, total: int) -> bool:
    """Each of ``points`` tangencies has order >= 2; they sum to ``total``,
    so all equal 2 exactly when 2 * points == total."""
    return orders_ok and singular_ok and infinity_ok and 2 * points == total


def tangency_report(fd: FoliationData, loci, dr: DegreeReport, singular_ok: bool,
                    infinity_ok: bool) -> TangencyReport:
    total = tangency_total(dr.degree)
    DG = curve_derivative(fd.G, fd.F)
    memberships = {loc.kind: {"G": radical_member(fd.G, loc.gb), "D_S G": radical_member(DG, loc.gb)}
                   for loc in loci}
    orders = {k: all(v.values()) for k, v in memberships.items()}
    points = sum(loc.reduced_count for loc in loci)
    exact = exactly_two(all(orders.values()), singular_ok, infinity_ok, points, total)
    return TangencyReport(dr.degree, SELF_INTERSECTION, total, orders, exact, points, memberships)


@dataclass
class TorsionReport:
    kernel_dim: int
    order_two_certified: bool
    witness_note: str

    def to_dict(self) -> dict:
        return {"kernel_dim": self.kernel_dim, "order_two": self.order_two_certified,
                "note": self.witness_note}


def quartic_monomials() -> list:
    return [(i, d - i) for d in range(5) for i in range(d, -1, -1)]


def torsion_order(inst: QuarticInstance, loci) -> TorsionReport:
    """Order of sum(P_j) - 4 D_inf in the Picard group of the quartic.

    Twice the class is principal (divisor of G over the eighth power of the
    line at infinity). The class itself is principal iff some quartic other
    than a multiple of F vanishes at the sixteen points, so the order is
    exactly 2 iff the space of such quartics is one-dimensional.
    """
    cols = [XY.monomial(e) for e in quartic_monomials()]
    rows = []
    for loc in loci:
        basis = standard_monomials(loc.radical)
        images = [coordinates(m, loc.radical, basis) for m in cols]
        rows.extend([list(r) for r in zip(*images)])
    dim = len(cols) - rank(rows)
    if dim == 0:
        raise AssertionError("F itself must vanish on the points; kernel cannot be empty")
    if dim == 1:
        note = ("2(sum P_j - 4 D_inf) = div(G / L^8); only multiples of F vanish "
                "on all 16 points, so sum P_j - 4 D_inf is not principal")
        return TorsionReport(1, True, note)
    return TorsionReport(dim, False, "order divides 2; equality not certified")


# --------------------------------------------------------------------------
# full pipeline

@dataclass
class MembershipQuery:
    label: str
    polynomial: Poly
    locus: str
    verdict: bool


@dataclass
class CertificateReport:
    instance: QuarticInstance
    validation: Diagnostics
    bitangents: list = field(default_factory=list)
    loci: tuple | None = None
    foliation: FoliationData | None = None
    form: OneForm | None = None
    degree: DegreeReport | None = None
    top_identity: bool | None = None
    invariance_identity: bool | None = None
    conditions: list = field(default_factory=list)
    singular_locus: SingularLocusVerdict | None = None
    tangency: TangencyReport | None = None
    torsion: TorsionReport | None = None
    oracle: dict | None = None
    queries: list = field(default_factory=list)
    timings: dict = field(default_factory=dict)
    error: str | None = None
    exit_code: int = EXIT_CERTIFIED
    order: str = "grevlex"

    @property
    def overall(self) -> bool:
        return self.exit_code == EXIT_CERTIFIED

    def to_dict(self, include_timings: bool = True) -> dict:
        from . import __version__
        from .instances import instance_to_dict

        out = {
            "instance": instance_to_dict(self.instance),
            "term_order": self.order,
            "validation": self.validation.to_dict(),
            "bitangents": [b.to_dict() for b in self.bitangents],
        }
        if self.loci is not None:
            out["loci"] = [loc.to_dict() for loc in self.loci]
        if self.foliation is not None:
            fd = self.foliation
            out["cubic_scale"] = format_coeff(coeff(fd.scale))
            out["foliation"] = {name: to_literal(getattr(fd, name))
                                for name in ("C", "G", "A", "B")}
        if self.degree is not None:
            out["degree"] = {"d": self.degree.degree,
                             "infinity_invariant": self.degree.infinity_invariant,
                             "top_identity": self.top_identity,
                             "invariance_identity": self.invariance_identity}
        if self.conditions:
            out["conditions"] = [v.to_dict() for v in self.conditions]
        if self.singular_locus is not None:
            out["singular_locus"] = self.singular_locus.passed
            out["singular_locus_detail"] = self.singular_locus.to_dict()
        if self.tangency is not None:
            out["tangency"] = self.tangency.to_dict()
        if self.torsion is not None:
            out["torsion"] = self.torsion.to_dict()
        if self.oracle is not None:
            out["oracle"] = self.oracle
        out["checks"] = self.math_checks()
        out["error"] = self.error
        out["exit_code"] = self.exit_code
        out["overall"] = self.overall
        out["versions"] = {"foliation_cert": __version__,
                           "python": ".".join(map(str, sys.version_info[:3]))}
        if include_timings:
            out["timings"] = dict(self.timings)
        return out

    def math_checks(self) -> dict:
        """Named pass/fail flags of every mathematical verdict."""
        out = {}
        if self.degree is not None:
            out["degree_10"] = self.degree.degree == 10 and not self.degree.infinity_invariant
        if self.top_identity is not None:
            out["top_identity"] = self.top_identity
        if self.invariance_identity is not None:
            out["invariance_identity"] = self.invariance_identity
        for v in self.conditions:
            out[f"condition_{v.condition_id}_{v.locus_kind}"] = v.passed
        if self.singular_locus is not None:
            out["singular_locus"] = self.singular_locus.passed
        if self.tangency is not None:
            out["tangency_32"] = self.tangency.tang_total == 32
            out["exact_two"] = self.tangency.multiplicity_exactly_two
        if self.torsion is not None:
            out["torsion_order_two"] = self.torsion.order_two_certified
        if self.oracle is not None and not self.oracle.get("skipped"):
            out["oracle_agreement"] = self.oracle["agree"]
        return out


def _timed(report: CertificateReport, name: str, fn, *args, **kwargs):
    t0 = time.perf_counter()
    out = fn(*args, **kwargs)
    report.timings[name] = round(time.perf_counter() - t0, 4)
    return out


def run_oracle(report: CertificateReport, tol: float = 1e-10,
               accept: float = oracle.ACCEPT, reject: float = oracle.REJECT) -> dict:
    fd = report.foliation
    pts = oracle.solve_loci(fd.F, fd.l1 * fd.l2, fd.C, tol=tol)
    by_locus = {BITANGENCY: pts[BITANGENCY], VERTICAL: pts[VERTICAL],
                "all": pts[BITANGENCY] + pts[VERTICAL]}
    checks = [oracle.check(q.label, q.polynomial, by_locus[q.locus], q.locus, q.verdict,
                           accept, reject) for q in report.queries]
    counts = {k: sum(p.cluster_multiplicity for p in v) for k, v in pts.items()}
    expected = {BITANGENCY: report.loci[0].scheme_length, VERTICAL: report.loci[1].scheme_length}
    counts_ok = counts == expected and len(pts[BITANGENCY]) == report.loci[0].reduced_count \
        and len(pts[VERTICAL]) == report.loci[1].reduced_count
    return {
        "skipped": False,
        "accept": accept,
        "reject": reject,
        "point_tolerance": tol,
        "points": {k: [p.to_dict() for p in v] for k, v in pts.items()},
        "scheme_counts": counts,
        "counts_match": counts_ok,
        "checks": [c.to_dict() for c in checks],
        "disagreements": sum(not c.agree for c in checks),
        "max_point_residual": max(max(p.residuals) for p in by_locus["all"]),
        "agree": counts_ok and all(c.agree for c in checks),
    }


def prepare(inst: QuarticInstance, normalize: bool = True, order=None) -> CertificateReport:
    """Preconditions, loci, foliation data and 1-form. On failure the
    returned report carries exit class 2 and an error message."""
    report = CertificateReport(inst, Diagnostics(), order=order or "grevlex")
    report.validation = _timed(report, "validate", validate_quartic, inst, order)
    if report.validation.ok:
        report.bitangents = [certify_bitangent(inst, w) for w in ("l1", "l2")]
        report.validation.checks["bitangent_l1"] = report.bitangents[0].ok
        report.validation.checks["bitangent_l2"] = report.bitangents[1].ok
        report.validation.checks["tangency_points_distinct"] = bitangent_points_distinct(inst)
    if not report.validation.ok:
        report.error = "instance fails: " + ", ".join(report.validation.failed())
        report.exit_code = EXIT_PRECONDITION
        return report
    try:
        bit = _timed(report, "bitangency_locus", make_locus, BITANGENCY, [inst.F, inst.lines], order)
        fd = _timed(report, "build", build_foliation, inst, normalize, bit.radical)
        report.foliation = fd
        report.loci = _timed(report, "loci", build_loci, inst, fd.C, order)
        report.form = _timed(report, "one_form", one_form, fd)
    except InstanceError as exc:
        report.error = str(exc)
        report.exit_code = EXIT_PRECONDITION
    return report


def run_degree(report: CertificateReport) -> None:
    fd = report.foliation
    report.degree = _timed(report, "degree", degree_report, report.form)
    report.top_identity = check_top_identity(fd)
    report.invariance_identity = invariance_defect(fd, report.form).is_zero()


def run_conditions(report: CertificateReport, which=(1, 2, 3, 4, 5)) -> None:
    fd = report.foliation
    t0 = time.perf_counter()
    for loc in report.loci:
        for n in which:
            v = check_condition(n, fd, loc)
            report.conditions.append(v)
            report.queries.append(MembershipQuery(f"condition {n}", v.checked_polynomial, loc.kind, v.passed))
    report.timings["conditions"] = round(time.perf_counter() - t0, 4)


def run_singular_and_tangency(report: CertificateReport) -> None:
    fd, form = report.foliation, report.form
    FX, FY = fd.F.diff("X"), fd.F.diff("Y")
    report.queries.append(MembershipQuery("F_X - F_Y", FX - FY, BITANGENCY, True))
    sl = _timed(report, "singular_locus", singular_locus_check, fd, form, report.order)
    report.singular_locus = sl
    report.queries += [
        MembershipQuery("P in rad<F,G>", form.P, "all", sl.P_vanishes),
        MembershipQuery("Q in rad<F,G>", form.Q, "all", sl.Q_vanishes),
        MembershipQuery("G in rad<F,P,Q>", fd.G, "all", sl.G_in_singular_radical),
    ]
    checks = report.validation.checks
    infinity_ok = checks["lines_not_asymptotic"] and checks["infinity_coprime"]
    report.tangency = _timed(report, "tangency", tangency_report, fd, report.loci,
                             report.degree, sl.passed, infinity_ok)
    DG = curve_derivative(fd.G, fd.F)
    for loc in report.loci:
        verdicts = report.tangency.memberships[loc.kind]
        report.queries.append(MembershipQuery("G", fd.G, loc.kind, verdicts["G"]))
        report.queries.append(MembershipQuery("D_S G", DG, loc.kind, verdicts["D_S G"]))


def run_torsion(report: CertificateReport) -> None:
    report.torsion = _timed(report, "torsion", torsion_order, report.instance, report.loci)


def attach_oracle(report: CertificateReport, tol: float = 1e-10,
                  accept: float = oracle.ACCEPT, reject: float = oracle.REJECT) -> None:
    try:
        report.oracle = _timed(report, "oracle", run_oracle, report, tol, accept, reject)
    except oracle.OracleError as exc:
        report.oracle = {"skipped": False, "agree": False, "error": str(exc)}


def finish(report: CertificateReport) -> CertificateReport:
    if report.exit_code != EXIT_PRECONDITION:
        report.exit_code = EXIT_CERTIFIED if all(report.math_checks().values()) else EXIT_CHECK_FAILED
    return report


def full_verify(inst: QuarticInstance, normalize: bool = True, use_oracle: bool = True,
                tol: float = 1e-10, accept: float = oracle.ACCEPT, reject: float = oracle.REJECT,
                order=None) -> CertificateReport:
    """Run every check on ``inst`` and aggregate the verdicts.

    Pipeline: preconditions, bitangents, loci, foliation, 1-form, degree and
    top identity, ten condition checks, singular locus, tangency count,
    torsion order, numeric cross-check.
    """
    report = prepare(inst, normalize, order)
    if report.exit_code == EXIT_PRECONDITION:
        return report
    run_degree(report)
    run_conditions(report)
    run_singular_and_tangency(report)
    run_torsion(report)
    if use_oracle:
        attach_oracle(report, tol, accept, reject)
    else:
        report.oracle = {"skipped": True}
    return finish(report)
