import random
from fractions import Fraction

import pytest
from gmpy2 import mpq
from hypothesis import given, settings, strategies as st

from foliation_cert.exact import (XY, Ring, coeff, curve_derivative, differentiate,
                                  divide_exact, format_coeff, from_literal,
                                  homogeneous_component, resultant, ring_ops,
                                  square_split, substitute, to_literal)
from foliation_cert.exact import univariate as uni
from foliation_cert.exact.resultant import coprime

X, Y = XY.gens()

small = st.integers(-4, 4)
monos = st.tuples(st.integers(0, 3), st.integers(0, 3))
polys = st.dictionaries(monos, small, max_size=6).map(XY.from_dict)


# -- coefficients -----------------------------------------------------------

def test_coefficients_are_reduced_fractions():
    c = coeff("-6/4")
    assert (c.numerator, c.denominator) == (-3, 2)
    with pytest.raises(ValueError):
        coeff("6/-4")
    assert format_coeff(coeff(0)) == "0/1"
    assert coeff(Fraction(2, 4)) == mpq(1, 2)


def test_floats_are_refused():
    with pytest.raises(TypeError):
        coeff(0.5)


# -- ring_ops ---------------------------------------------------------------

def test_difference_of_squares():
    assert ring_ops(X + Y, X - Y, "mul") == X**2 - Y**2


def test_additive_identity():
    p = 3 * X**2 * Y - Y + 7
    assert ring_ops(p, XY.zero, "add") == p


def test_line_pair_expansion():
    s = X + Y
    assert (Y + X) * (Y + X + 1) == s**2 + s


def test_ring_mismatch_raises():
    other = Ring(("X", "Y", "Z"))
    with pytest.raises(ValueError):
        ring_ops(X, other.gen("Z"), "add")


def test_product_degree_adds():
    p, q = X**3 + Y, X * Y**2 - 1
    assert (p * q).total_degree() == 6


def test_terms_are_strictly_decreasing():
    p = X**2 + X * Y + Y**3 + X + 1
    keys = [XY.order.key(e) for e, _ in p.terms()]
    assert keys == sorted(keys, reverse=True) and len(set(keys)) == len(keys)
    assert all(c != 0 for _, c in p.terms())


# -- differentiate ----------------------------------------------------------

def test_derivative_examples():
    assert differentiate(X**2 * Y, "X") == 2 * X * Y
    assert differentiate(XY.const(5), "X").is_zero()
    L = (X + Y) * (X + Y + 1)
    assert (L.diff("X") - L.diff("Y")).is_zero()


def test_unknown_variable():
    with pytest.raises(ValueError):
        differentiate(X, "Z")


@given(polys)
def test_derivative_drops_degree_by_one(p):
    if p.involves("X"):
        assert p.diff("X").degree("X") == p.degree("X") - 1


# -- substitute -------------------------------------------------------------

def test_substitution_examples():
    assert substitute(X + Y, "Y", -X).is_zero()
    assert substitute(X**2 + Y**2, "Y", 1) == X**2 + 1


def test_restriction_of_constructed_quartic(gens):
    a = coeff(0)
    l1, l2 = X + Y + a, X + Y + 1
    q, m = X**2 - 3 * X * Y + 2, 2 * X * Y + Y**2 - X + 5
    F = l1 * l2 * q - m**2
    line = -X - a
    assert F.subs("Y", line) == -(m.subs("Y", line) ** 2)


@settings(max_examples=100)
@given(polys, polys, polys)
def test_substitution_is_a_homomorphism(p, q, r):
    lhs = substitute(p * q, "Y", r)
    assert lhs == substitute(p, "Y", r) * substitute(q, "Y", r)
    assert substitute(p + q, "Y", r) == substitute(p, "Y", r) + substitute(q, "Y", r)


# -- homogeneous components -------------------------------------------------

def test_homogeneous_component_example():
    assert homogeneous_component(X**2 + X * Y + X + 1, 2) == X**2 + X * Y


@given(polys)
def test_components_sum_to_polynomial(p):
    total = XY.zero
    for d in range(p.total_degree() + 1):
        total = total + homogeneous_component(p, d)
    assert total == p


@given(polys, st.integers(0, 6))
def test_euler_relation(p, d):
    h = homogeneous_component(p, d)
    assert X * h.diff("X") + Y * h.diff("Y") == d * h


# -- canonical form ---------------------------------------------------------

@given(polys, polys, polys)
def test_canonical_form(a, b, c):
    assert a + b == b + a
    assert ((a + b) + c).terms() == (a + (b + c)).terms()
    assert (a * (b + c)).terms() == (a * b + a * c).terms()


# -- literals ---------------------------------------------------------------

@given(polys)
def test_literal_round_trip(p):
    assert from_literal(to_literal(p)) == p


def test_literal_keeps_fractions():
    p = X / 2 - coeff("3/7") * Y
    assert from_literal(to_literal(p)) == p
    assert sorted(to_literal(p)) == [[0, 1, "-3/7"], [1, 0, "1/2"]]


# -- exact division ---------------------------------------------------------

def test_exact_division():
    assert divide_exact((X + Y) * (X - 2 * Y), X + Y) == X - 2 * Y
    with pytest.raises(ArithmeticError):
        divide_exact(X**2 + 1, X + Y)


# -- resultant --------------------------------------------------------------

def test_resultant_two_by_two():
    assert resultant(Y - X**2, Y + X**2, "Y") == 2 * X**2


def test_resultant_against_constant_in_var():
    F = X**4 + Y**4 - 1
    assert resultant(F, 4 * X**3, "Y") == 256 * X**12


def test_resultant_rejects_two_constants():
    with pytest.raises(ValueError):
        resultant(X + 1, X**2, "Y")


def sylvester_resultant(p, q, var="Y"):
    """Independent oracle: the Sylvester determinant, expanded by
    fraction-free Bareiss elimination over polynomial entries."""
    def coeffs(f):
        groups = f.coefficients_in(var)
        n = max(groups)
        return [groups.get(k, XY.zero) for k in range(n, -1, -1)]

    a, b = coeffs(p), coeffs(q)
    m, n = len(a) - 1, len(b) - 1
    size = m + n
    M = [[XY.zero] * size for _ in range(size)]
    for i in range(n):
        for j, c in enumerate(a):
            M[i][i + j] = c
    for i in range(m):
        for j, c in enumerate(b):
            M[n + i][i + j] = c
    sign, prev = 1, XY.one
    for k in range(size - 1):
        if M[k][k].is_zero():
            swap = next((r for r in range(k + 1, size) if not M[r][k].is_zero()), None)
            if swap is None:
                return XY.zero
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                M[i][j] = divide_exact(M[i][j] * M[k][k] - M[i][k] * M[k][j], prev)
        prev = M[k][k]
    return sign * M[-1][-1]


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10_000))
def test_resultant_matches_sylvester(seed):
    rng = random.Random(seed)

    def rand(dy):
        return XY.from_dict({(rng.randint(0, 2), j): rng.randint(-3, 3) for j in range(dy + 1)}) \
            + Y ** (dy + 1)

    p, q = rand(rng.randint(0, 2)), rand(rng.randint(0, 2))
    assert resultant(p, q, "Y") == sylvester_resultant(p, q)


def test_main_eliminant_matches_frozen(main_inst, frozen):
    F = main_inst.F
    r = resultant(F, F.diff("X"), "Y")
    fr = frozen["main"]
    assert r == from_literal(fr["res_y_F_FX"])
    u = uni.from_poly(r, "X")
    assert uni.degree(u) == fr["res_y_F_FX_degree"] == 12
    assert uni.is_squarefree(u) is fr["res_y_F_FX_squarefree"] is True


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10_000), st.booleans())
def test_resultant_vanishes_exactly_on_common_factor(seed, planted):
    rng = random.Random(seed)

    def rand(deg):
        return XY.from_dict({(i, j): rng.randint(-3, 3)
                             for i in range(deg + 1) for j in range(deg + 1 - i)}) + Y ** deg

    p, q = rand(2), rand(2)
    if planted:
        common = Y + rng.randint(-3, 3) * X + rng.randint(-3, 3)
        p, q = p * common, q * common
        assert resultant(p, q, "Y").is_zero()
        assert not coprime(p, q)
    else:
        assert resultant(p, q, "Y").is_zero() == (not coprime(p, q))


# -- square_split -----------------------------------------------------------

def test_square_split_examples():
    ok, c, q = square_split(uni.mul(uni.scale([1, 0, 1], 2), [1, 0, 1]))
    assert ok and c == 2 and q == [1, 0, 1]
    assert square_split([-1, 0, 0, 0, 2])[0] is False
    ok, c, q = square_split([0, 0, 0, 0, 1])
    assert ok and c == 1 and q == [0, 0, 1]
    assert not uni.is_squarefree(q)


@given(st.lists(small, min_size=2, max_size=4), st.integers(1, 5))
def test_square_split_recovers_squares(q, c):
    q = uni.trim(q)
    if uni.degree(q) < 1:
        return
    u = uni.scale(uni.mul(q, q), c)
    ok, c2, q2 = square_split(u)
    assert ok
    assert uni.scale(uni.mul(q2, q2), c2) == u


# -- curve derivative -------------------------------------------------------

def test_curve_derivative_of_curve_vanishes():
    F = X**4 + 3 * X * Y**2 - Y + 2
    assert curve_derivative(F, F).is_zero()


@given(polys, polys, polys)
def test_leibniz_rule(f, g, F):
    D = curve_derivative
    assert D(f * g, F) - f * D(g, F) - g * D(f, F) == XY.zero


def test_curve_derivative_of_line(main_inst):
    from foliation_cert.ideal import radical_member

    F = main_inst.F
    D = curve_derivative(main_inst.l1, F)
    assert D == F.diff("Y") - F.diff("X")
    assert radical_member(D, [F, main_inst.lines])


# -- univariate helpers -----------------------------------------------------

def test_yun_multiplicities():
    u = uni.mul(uni.mul([1, 1], [1, 1]), [-2, 0, 1])   # (x+1)^2 (x^2-2)
    c, parts = uni.yun(u)
    assert c == 1
    assert parts[0] == [-2, 0, 1] and parts[1] == [1, 1]
