from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from afinvariants.brauer import QZ, BrauerClass, TorsionSubgroup, brauer_add, brauer_from_generator
from afinvariants.errors import DuplicatePlaces

from oracles import qz_closure

qz = st.fractions(min_value=0, max_value=1, max_denominator=60).map(QZ)
PLACES = ["p2", "p3", "p5", "p7", "inf"]


@st.composite
def brauer_classes(draw):
    places = draw(st.lists(st.sampled_from(PLACES), min_size=1, max_size=4, unique=True))
    vals = [draw(qz) for _ in places[:-1]]
    last = QZ(-sum((v.value for v in vals), Fraction(0)))
    return BrauerClass(tuple(zip(places, vals + [last])))


def test_qz_basics():
    assert QZ(Fraction(5, 3)) == QZ(Fraction(2, 3))
    assert QZ(Fraction(-1, 3)).value == Fraction(2, 3)
    assert QZ(Fraction(1, 3)) + QZ(Fraction(2, 3)) == QZ(0)
    assert QZ(Fraction(1, 6)).order == 6
    assert QZ(Fraction(3, 8)).is_dyadic() and not QZ(Fraction(1, 3)).is_dyadic()
    assert 3 * QZ(Fraction(1, 3)) == QZ(0)


@settings(max_examples=100, deadline=None)
@given(st.lists(st.fractions(min_value=0, max_value=1, max_denominator=24), min_size=1, max_size=3))
def test_torsion_subgroup_matches_closure(vals):
    group = TorsionSubgroup.generated_by(QZ(v) for v in vals)
    closure = qz_closure(vals)
    assert len(closure) == group.canonical_order
    assert {y.value for y in group.elements()} == closure
    for v in closure:
        assert QZ(v) in group


def test_multiple_of_generator():
    g = TorsionSubgroup.generated_by([QZ(Fraction(1, 3)), QZ(Fraction(1, 4))])
    assert g.canonical_order == 12
    assert g.multiple_of_generator(QZ(Fraction(3, 4))) == 9
    with pytest.raises(ValueError):
        g.multiple_of_generator(QZ(Fraction(1, 5)))


def test_brauer_validation():
    with pytest.raises(ValueError):
        BrauerClass.from_mapping({"p2": Fraction(1, 2)})
    with pytest.raises(DuplicatePlaces):
        BrauerClass((("p2", QZ(Fraction(1, 2))), ("p2", QZ(Fraction(1, 2)))))
    with pytest.raises(DuplicatePlaces):
        brauer_from_generator(QZ(Fraction(1, 3)), ("p", "p"))
    assert BrauerClass.from_mapping({"p2": Fraction(1, 2), "inf": Fraction(1, 2)}).order == 2
    assert BrauerClass.zero().is_zero()


@settings(max_examples=100, deadline=None)
@given(brauer_classes(), brauer_classes(), brauer_classes())
def test_brauer_group_axioms(a, b, c):
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert (a + (-a)).is_zero()
    assert a + BrauerClass.zero() == a
    assert brauer_add(a, b) == a + b
    n = a.order
    total = BrauerClass.zero()
    for _ in range(n):
        total = total + a
    assert total.is_zero()


def test_brauer_from_generator_injective_on_order_three():
    places = ("p3", "inf")
    images = [brauer_from_generator(QZ(Fraction(k, 3)), places) for k in range(3)]
    assert len(set(images)) == 3
    assert images[1] + images[2] == images[0] == BrauerClass.zero()
    assert images[1] + images[1] == images[2]
