from fractions import Fraction
from itertools import islice
from math import isqrt

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from afinvariants.af_core import StationaryAF
from afinvariants.contfrac import (
    ContinuedFraction,
    cf_of_quadratic,
    cf_of_rational,
    quadratic_cf,
    quadratic_surd,
)
from afinvariants.errors import DegreeUnsupported, OutOfDomain, PreconditionViolated
from afinvariants.lattice import IntegerMatrix
from afinvariants.handelman import quadratic_field
from afinvariants.minkowski import continued_fraction_of, minkowski_generators, question_mark

from oracles import (
    qz_closure,
    stern_brocot_question_mark,
    surd_partial_quotients,
    truncated_question_mark,
)

M = IntegerMatrix
FIB = M(((1, 1), (1, 0)))

unit_rationals = st.fractions(min_value=0, max_value=1, max_denominator=500)


def test_rational_expansions():
    assert cf_of_rational(Fraction(2, 5)) == ContinuedFraction(0, (2, 2))
    assert str(cf_of_rational(Fraction(1, 2))) == "[0; 2]"
    assert str(cf_of_rational(1)) == "[1]"
    assert cf_of_rational(Fraction(-7, 3)).value() == Fraction(-7, 3)


@settings(max_examples=100, deadline=None)
@given(st.fractions(min_value=-20, max_value=20, max_denominator=1000))
def test_rational_round_trip(x):
    assert cf_of_rational(x).value() == x


def test_quadratic_expansions():
    assert str(cf_of_quadratic(-1, 2, 5)) == "[0; (1)]"
    assert cf_of_quadratic(-1, 1, 2) == ContinuedFraction(0, (), (2,))
    assert quadratic_cf(0, 1, 10) == ContinuedFraction(3, (), (6,))
    assert quadratic_cf(0, 1, 7) == ContinuedFraction(2, (), (1, 1, 1, 4))
    with pytest.raises(PreconditionViolated):
        cf_of_quadratic(0, 1, 4)
    with pytest.raises(PreconditionViolated):
        cf_of_quadratic(0, 1, 2)  # sqrt(2) is not in (0, 1)
    with pytest.raises(PreconditionViolated):
        quadratic_cf(1, 3, 5)  # 3 does not divide 5 - 1


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 200), st.integers(-30, 30), st.integers(1, 12))
def test_quadratic_cf_matches_direct_expansion(d, p, q):
    if isqrt(d) ** 2 == d:
        return
    if (d - p * p) % q:
        p, d, q = p * q, d * q * q, q * q
    cf = quadratic_cf(p, q, d)
    direct = surd_partial_quotients(p, q, d, 30)
    assert [cf.integer_part] + list(islice(cf.partial_quotients(), 29)) == direct


def test_quadratic_surd_from_field_element():
    k = quadratic_field(5)
    x = k((Fraction(-1, 2), Fraction(1, 2)))
    p, q, d = quadratic_surd(x)
    assert Fraction(p, q) == Fraction(-1, 2) and Fraction(d, q * q) == Fraction(5, 4)
    assert cf_of_quadratic(p, q, d) == ContinuedFraction(0, (), (1,))


@pytest.mark.parametrize(
    "x,expected",
    [(Fraction(0), 0), (Fraction(1), 1), (Fraction(1, 2), Fraction(1, 2)), (Fraction(1, 3), Fraction(1, 4)),
     (Fraction(2, 5), Fraction(3, 8))],
)
def test_question_mark_rationals(x, expected):
    assert question_mark(cf_of_rational(x)) == expected


@settings(max_examples=150, deadline=None)
@given(unit_rationals)
def test_question_mark_matches_stern_brocot(x):
    assert question_mark(cf_of_rational(x)) == stern_brocot_question_mark(x)


@settings(max_examples=150, deadline=None)
@given(unit_rationals, unit_rationals)
def test_question_mark_strictly_increasing(x, y):
    if x == y:
        return
    lo, hi = min(x, y), max(x, y)
    assert question_mark(cf_of_rational(lo)) < question_mark(cf_of_rational(hi))


QUADRATICS = [(-1, 2, 5), (-1, 1, 2), (-3, 1, 10), (-1, 1, 3), (-2, 1, 7), (-5, 2, 29), (-1, 3, 7)]


@pytest.mark.parametrize("pqd", QUADRATICS)
def test_question_mark_quadratic_against_truncated_series(pqd):
    p, q, d = pqd
    if (d - p * p) % q:
        p, d, q = p * q, d * q * q, q * q
    cf = cf_of_quadratic(p, q, d)
    exact = question_mark(cf)
    series = truncated_question_mark(surd_partial_quotients(p, q, d, 65)[1:])
    assert abs(exact - series) <= Fraction(1, 2**60)
    den = exact.denominator
    assert den & (den - 1) != 0


def test_question_mark_known_values():
    assert question_mark(cf_of_quadratic(-1, 2, 5)) == Fraction(2, 3)
    assert question_mark(cf_of_quadratic(-1, 1, 2)) == Fraction(2, 5)
    assert question_mark(cf_of_quadratic(-3, 1, 10)) == Fraction(2, 65)


def test_question_mark_domain():
    with pytest.raises(OutOfDomain):
        question_mark(cf_of_rational(Fraction(3, 2)))
    with pytest.raises(OutOfDomain):
        question_mark(cf_of_rational(Fraction(-1, 2)))


def test_continued_fraction_of_field_elements():
    k = quadratic_field(5)
    assert continued_fraction_of(k(Fraction(1, 3))) == ContinuedFraction(0, (3,))
    assert continued_fraction_of(k((Fraction(-1, 2), Fraction(1, 2)))) == ContinuedFraction(0, (), (1,))


def test_minkowski_generators_examples():
    gens, group = minkowski_generators(StationaryAF(M(((1,),))), 8)
    assert [g.value for g in gens] == [0] and group.canonical_order == 1
    gens, group = minkowski_generators(StationaryAF(M.identity(2)), 8)
    assert [g.value for g in gens] == [0, Fraction(1, 2)] and group.canonical_order == 2
    gens, group = minkowski_generators(StationaryAF(FIB), 2, non_dyadic_only=True)
    assert [g.value for g in gens] == [Fraction(1, 3), Fraction(2, 3)]
    assert group.canonical_order == 3
    assert len(qz_closure([g.value for g in gens])) == 3


def test_minkowski_group_grows_with_bound():
    _, g2 = minkowski_generators(StationaryAF(FIB), 2, non_dyadic_only=True)
    _, g4 = minkowski_generators(StationaryAF(FIB), 4, non_dyadic_only=True)
    assert g4.canonical_order % g2.canonical_order == 0


def test_minkowski_degree_cap():
    with pytest.raises(DegreeUnsupported):
        minkowski_generators(StationaryAF(M(((0, 1, 0), (0, 0, 1), (1, 1, 0)))), 1)


@settings(max_examples=100, deadline=None)
@given(unit_rationals)
def test_question_mark_symmetry_rational(x):
    assert question_mark(cf_of_rational(1 - x)) == 1 - question_mark(cf_of_rational(x))


@pytest.mark.parametrize("pqd", QUADRATICS)
def test_question_mark_symmetry_quadratic(pqd):
    p, q, d = pqd
    if (d - p * p) % q:
        p, d, q = p * q, d * q * q, q * q
    # 1 - (p + sqrt(d)) / q = (p - q + sqrt(d)) / (-q)
    mirrored = cf_of_quadratic(p - q, -q, d)
    assert question_mark(mirrored) == 1 - question_mark(cf_of_quadratic(p, q, d))
