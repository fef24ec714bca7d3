from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from afinvariants.errors import DegreeUnsupported
from afinvariants.exact import (
    AlgebraicNumber,
    IntPolynomial,
    NumberField,
    compare,
    count_real_roots,
    decimal_approximation,
    factor_over_Q,
    is_irreducible,
    is_totally_real,
    isolate_real_roots,
    multiply,
    product_polynomial,
    rational_roots,
    squarefree_decomposition,
)

from oracles import sympy_factor, sympy_real_root_count

P = IntPolynomial
FIB = P((-1, -1, 1))
X2M2 = P((-2, 0, 1))


def test_polynomial_arithmetic_and_printing():
    x = P.x()
    assert str(x * x - x - P.constant(1)) == "x^2 - x - 1"
    assert (x + P.constant(1)) ** 2 == P((1, 2, 1))
    assert P((2, 4, 6)).content() == 2
    assert P((2, 4, 6)).primitive() == P((1, 2, 3))
    assert FIB.derivative() == P((-1, 2))
    assert FIB(2) == 1
    assert P((0, 0, 0)).is_zero()
    assert (FIB * X2M2).exact_quotient(FIB) == X2M2
    assert P((1, 1)).exact_quotient(P((1, 2))) is None


def test_from_rationals_normalizes():
    assert P.from_rationals([Fraction(-1, 2), Fraction(-1, 2), Fraction(1, 2)]) == FIB
    assert P.from_rationals([1, -1]) == P((-1, 1))


@pytest.mark.parametrize(
    "coeffs",
    [
        (-1, -1, 1),
        (-1, 0, 1),
        (2, -1, -2, 1),
        (4, 0, 0, 0, 1),
        (1, 0, 0, 0, 0, 0, 1),
        (-2, 0, 0, 1),
    ],
)
def test_factor_matches_sympy(coeffs):
    mine = [(f.coeffs, e) for f, e in factor_over_Q(P(coeffs))]
    assert mine == sympy_factor(coeffs)


def test_factor_high_multiplicity():
    assert factor_over_Q(FIB**8) == [(FIB, 8)]


def test_factor_degree_cap():
    with pytest.raises(DegreeUnsupported):
        factor_over_Q(P((-2,) + (0,) * 9 + (1,)))


small_poly = st.lists(st.integers(-4, 4), min_size=2, max_size=4).filter(lambda c: c[-1] != 0)


@settings(max_examples=40, deadline=None)
@given(small_poly, small_poly)
def test_factor_product_property(a, b):
    p = P(tuple(a)) * P(tuple(b))
    facs = factor_over_Q(p)
    prod = P((1,))
    for f, e in facs:
        assert is_irreducible(f)
        prod = prod * f**e
    assert prod.primitive() == p.primitive() or prod.primitive() == (-p).primitive()
    assert [(f.coeffs, e) for f, e in facs] == sympy_factor(p.coeffs)


@settings(max_examples=40, deadline=None)
@given(small_poly)
def test_squarefree_decomposition_recombines(c):
    p = P(tuple(c)) ** 2 * P((1, 1))
    prod = P((1,))
    for f, e in squarefree_decomposition(p):
        prod = prod * f**e
    assert prod.primitive() in (p.primitive(), (-p).primitive())


def test_rational_roots():
    assert rational_roots(P((2, -1, -2, 1))) == [-1, 1, 2]
    assert rational_roots(P((-1, 2))) == [Fraction(1, 2)]
    assert rational_roots(FIB) == []


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(-6, 6), min_size=2, max_size=6).filter(lambda c: c[-1] != 0))
def test_sturm_count_matches_sympy(c):
    p = P(tuple(c))
    assert count_real_roots(p) == sympy_real_root_count(c)
    assert len(isolate_real_roots(p)) == sympy_real_root_count(c)


def test_isolation_intervals_are_disjoint_and_correct():
    ivs = isolate_real_roots(P((2, -1, -2, 1)) * X2M2)
    assert len(ivs) == 5
    for (lo, hi), (lo2, _) in zip(ivs, ivs[1:]):
        assert hi <= lo2
    assert isolate_real_roots(P((1, 0, 1))) == []


def test_totally_real():
    assert is_totally_real(FIB)
    assert not is_totally_real(P((-2, 0, 0, 1)))


def test_algebraic_number_comparisons():
    phi = AlgebraicNumber.real_roots(FIB)[-1]
    r2 = AlgebraicNumber.real_roots(X2M2)[-1]
    assert compare(r2, phi) == -1
    assert phi > Fraction(1618, 1000)
    assert phi < Fraction(1619, 1000)
    assert phi == AlgebraicNumber(FIB, 1, 2)
    assert AlgebraicNumber.from_rational(Fraction(3, 2)).as_rational() == Fraction(3, 2)


def test_algebraic_number_validation():
    with pytest.raises(ValueError):
        AlgebraicNumber(FIB, -2, 2)  # two roots inside
    with pytest.raises(ValueError):
        AlgebraicNumber(P((-1, 0, 1)), 0, 2)  # reducible


def test_product_of_golden_ratio_with_itself():
    phi = AlgebraicNumber.real_roots(FIB)[-1]
    sq = multiply(phi, phi)
    assert sq.minpoly == P((1, -3, 1))
    assert sq > Fraction(2618, 1000) and sq < Fraction(2619, 1000)
    # Res_y(p(y), y^2 p(x / y)) has the product roots phi*phi', phi'^2, ...
    assert product_polynomial(FIB, FIB)(-1) == 0


def test_field_arithmetic_golden():
    k = NumberField(AlgebraicNumber.real_roots(FIB)[-1])
    lam = k.gen()
    assert (lam * lam - lam - 1).is_zero()
    assert (lam - 1).inverse() == lam
    assert lam.norm() == -1
    assert lam.sign() == 1 and (1 - lam).sign() == -1
    assert lam.floor() == 1
    assert lam.to_string("lam") == "lam"


coord = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@settings(max_examples=60, deadline=None)
@given(st.tuples(coord, coord), st.tuples(coord, coord), st.tuples(coord, coord))
def test_field_axioms_quadratic(a, b, c):
    k = NumberField(AlgebraicNumber.real_roots(X2M2)[-1])
    x, y, z = k(a), k(b), k(c)
    assert (x + y) * z == x * z + y * z
    assert (x * y) * z == x * (y * z)
    if not y.is_zero():
        assert (x / y) * y == x
    # sign is consistent with the real embedding sqrt(2)
    val = Fraction(a[0]) + Fraction(a[1]) * Fraction(14142135623730951, 10**16)
    if abs(val) > Fraction(1, 10**6):
        assert x.sign() == (1 if val > 0 else -1)


def test_decimal_approximation_certified():
    phi = AlgebraicNumber.real_roots(FIB)[-1]
    text, err = decimal_approximation(phi, 12)
    assert text == "1.618033988750"
    assert err <= Fraction(1, 10**12)
    assert decimal_approximation(AlgebraicNumber.from_rational(2), 3) == ("2.000", 0)


def test_sturm_count_after_each_refinement():
    a = AlgebraicNumber.real_roots(P((-1, -1, 0, 1)))[0]
    for _ in range(40):
        assert count_real_roots(a.minpoly, a.lo, a.hi) == 1
        a = a.refine()
    assert a.width() < Fraction(1, 2**30)


poly4 = st.lists(st.integers(-5, 5), min_size=2, max_size=5).filter(lambda c: c[-1] != 0)


def _some_root(c, pick):
    p = P(tuple(c))
    roots = [r for f, _ in factor_over_Q(p) for r in AlgebraicNumber.real_roots(f)]
    return roots[pick % len(roots)] if roots else None


@settings(max_examples=40, deadline=None)
@given(poly4, poly4, poly4, st.integers(0, 3), st.integers(0, 3), st.integers(0, 3))
def test_compare_is_a_total_order(c1, c2, c3, i, j, k):
    xs = [_some_root(c, n) for c, n in ((c1, i), (c2, j), (c3, k))]
    if any(x is None for x in xs):
        return
    a, b, c = xs
    assert compare(a, b) == -compare(b, a)
    assert compare(a, a) == 0
    if compare(a, b) <= 0 and compare(b, c) <= 0:
        assert compare(a, c) <= 0
    if compare(a, b) != 0:
        assert (float(a) - float(b)) * compare(a, b) >= -1e-9


@pytest.mark.parametrize("coeffs", [(-1, -1, 1), (-2, 0, 1), (-1, -1, 0, 1), (-3, 0, -1, 0, 1)])
def test_generator_satisfies_minpoly(coeffs):
    p = P(coeffs)
    k = NumberField(AlgebraicNumber.real_roots(p)[-1])
    g = k.gen()
    acc = k.zero()
    for c in reversed(coeffs):
        acc = acc * g + c
    assert acc.is_zero()
