import random

import pytest
from hypothesis import given, settings, strategies as st

from foliation_cert.exact import XY, TermOrder, from_literal
from foliation_cert.ideal import (contains_one, groebner, is_groebner, is_reduced,
                                  is_zero_dimensional, minimal_polynomial,
                                  normal_form, quotient_dimension, radical_basis,
                                  radical_member, zero_dim_radical)

from conftest import monic_set

X, Y = XY.gens()
LEX = TermOrder("lex")


def assert_valid(gb):
    assert is_groebner(gb)
    assert is_reduced(gb)
    return gb


def random_zero_dim(rng, points=3):
    """Ideal of a few rational points, squared to make it non-radical."""
    pts = {(rng.randint(-3, 3), rng.randint(-3, 3)) for _ in range(points)}
    xs = XY.one
    for px in {p[0] for p in pts}:
        xs = xs * (X - px)
    ys = XY.one
    for py in {p[1] for p in pts}:
        ys = ys * (Y - py)
    return [xs ** 2, ys ** 2, (xs * ys)]


# -- groebner ---------------------------------------------------------------

def test_already_reduced_basis():
    gb = assert_valid(groebner([X + Y, Y**2], LEX))
    assert set(gb.generators) == {X.lift(gb.ring) + Y.lift(gb.ring), Y.lift(gb.ring) ** 2}


def test_unit_ideal_by_hand():
    gb = assert_valid(groebner([X**2, X * Y + 1]))
    assert contains_one(gb)
    assert normal_form(XY.one, gb).is_zero()


def test_zero_ideal_gives_empty_basis():
    assert groebner([XY.zero]).generators == ()


def test_basis_is_deterministic():
    gens = [X**3 - 2 * X * Y, X**2 * Y + X - 2 * Y**2]
    assert groebner(gens).generators == groebner(list(reversed(gens))).generators


def test_textbook_grevlex_basis():
    gb = assert_valid(groebner([X**3 - 2 * X * Y, X**2 * Y + X - 2 * Y**2]))
    assert set(gb.generators) == {X**2, X * Y, Y**2 - X / 2}


def test_main_vertical_basis_matches_frozen(main_inst, frozen):
    F = main_inst.F
    gb = assert_valid(groebner([F, F.diff("X")]))
    assert set(gb.generators) == monic_set(frozen["main"]["gb_F_FX"])
    assert quotient_dimension(gb) == 12


def test_main_bitangency_basis_matches_frozen(main_inst, frozen):
    gb = assert_valid(groebner([main_inst.F, main_inst.lines]))
    assert set(gb.generators) == monic_set(frozen["main"]["gb_F_lines"])
    assert quotient_dimension(gb) == 8


def test_lex_and_grevlex_agree_on_membership(main_inst):
    F = main_inst.F
    g1 = groebner([F, main_inst.lines])
    g2 = assert_valid(groebner([F, main_inst.lines], LEX))
    probe = F.diff("X") * main_inst.l1 + Y**5
    assert normal_form(probe, g1).is_zero() == normal_form(probe.lift(g2.ring), g2).is_zero()
    assert quotient_dimension(g2) == 8


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10_000))
def test_buchberger_criterion_on_random_inputs(seed):
    rng = random.Random(seed)

    def rand():
        return XY.from_dict({(rng.randint(0, 3), rng.randint(0, 3)): rng.randint(-3, 3)
                             for _ in range(4)})

    gens = [p for p in (rand(), rand(), rand()) if not p.is_zero()]
    if gens:
        assert_valid(groebner(gens))
        assert_valid(groebner(gens, LEX))


# -- normal form ------------------------------------------------------------

def test_normal_form_examples():
    assert normal_form(X**2, groebner([X])).is_zero()
    gb = groebner([X - Y], LEX)
    assert normal_form(X + Y, gb) == 2 * Y.lift(gb.ring)
    assert normal_form(X**7 * Y + 3, groebner([XY.one])).is_zero()


@settings(max_examples=50, deadline=None)
@given(st.integers(-5, 5), st.integers(-5, 5), st.integers(0, 10_000))
def test_normal_form_is_linear_and_idempotent(alpha, beta, seed):
    rng = random.Random(seed)
    gb = groebner([X**2 + Y - 1, X * Y**2 - 2])

    def rand():
        return XY.from_dict({(rng.randint(0, 4), rng.randint(0, 4)): rng.randint(-5, 5)
                             for _ in range(5)})

    f, g = rand(), rand()
    nf = lambda p: normal_form(p, gb)
    assert nf(alpha * f + beta * g) == alpha * nf(f) + beta * nf(g)
    assert nf(nf(f)) == nf(f)


# -- contains_one -----------------------------------------------------------

def test_contains_one_examples(main_inst, frozen):
    assert contains_one(groebner([X, X + 1]))
    assert not contains_one(groebner([X]))
    F = main_inst.F
    gb = groebner([F, F.diff("X"), F.diff("Y")])
    assert contains_one(gb)
    assert set(gb.generators) == monic_set(frozen["main"]["gb_F_FX_FY"])


# -- radical membership -----------------------------------------------------

def test_radical_member_examples(main_inst, frozen):
    assert radical_member(X, [X**2])
    assert not radical_member(Y, [X])
    F = main_inst.F
    verdict = radical_member(F.diff("X") - F.diff("Y"), [F, main_inst.lines])
    assert verdict is frozen["main"]["FX_minus_FY_in_radical"] is True


def test_radical_member_not_plain_membership():
    gb = groebner([X**3, Y**2])
    assert not gb.contains(X * Y)
    assert radical_member(X * Y, gb)
    assert not radical_member(X + 1, gb)


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10_000))
def test_radical_membership_matches_point_evaluation(seed):
    rng = random.Random(seed)
    gens = random_zero_dim(rng)
    f = XY.from_dict({(rng.randint(0, 2), rng.randint(0, 2)): rng.randint(-2, 2) for _ in range(3)})
    rad = radical_basis(gens)
    # the variety of these ideals is a grid of rational points
    xs = [e for e in range(-3, 4) if gens[0](e, 0) == 0]
    ys = [e for e in range(-3, 4) if gens[1](0, e) == 0]
    vanish = all(f(a, b) == 0 for a in xs for b in ys)
    assert radical_member(f, gens) is vanish
    assert normal_form(f, rad).is_zero() is vanish


# -- dimension counts -------------------------------------------------------

def test_quotient_dimension_examples():
    assert quotient_dimension(groebner([X, Y])) == 1
    assert quotient_dimension(groebner([X**2, Y])) == 2
    assert quotient_dimension(groebner([X])) == float("inf")
    assert not is_zero_dimensional(groebner([X * Y]))


def test_zero_dim_radical_examples():
    assert set(zero_dim_radical([X**2, Y])) == {X, Y}
    with pytest.raises(ValueError):
        zero_dim_radical([X * Y])


def test_fermat_vertical_locus(frozen):
    F = X**4 + Y**4 - 1
    gb = groebner([F, F.diff("X")])
    assert set(gb.generators) == monic_set(frozen["fermat"]["gb_F_FX"])
    assert quotient_dimension(gb) == 12
    assert quotient_dimension(radical_basis(gb)) == 4


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10_000))
def test_radical_is_idempotent(seed):
    rng = random.Random(seed)
    gens = random_zero_dim(rng)
    once = radical_basis(gens)
    twice = radical_basis(once)
    assert once.generators == twice.generators
    assert quotient_dimension(once) <= quotient_dimension(groebner(gens))


def test_minimal_polynomial_of_fermat_x():
    F = X**4 + Y**4 - 1
    gb = groebner([F, F.diff("X")])
    assert minimal_polynomial(gb, "X") == [0, 0, 0, 1]


def test_instance_locus_counts(main_inst):
    F = main_inst.F
    vert = groebner([F, F.diff("X")])
    bit = groebner([F, main_inst.lines])
    assert (quotient_dimension(vert), quotient_dimension(radical_basis(vert))) == (12, 12)
    assert (quotient_dimension(bit), quotient_dimension(radical_basis(bit))) == (8, 4)
