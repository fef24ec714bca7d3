"""Torsion arithmetic in Q/Z and a local-invariant model of Brauer classes.

A Brauer class is represented by finitely many local invariants in Q/Z,
indexed by opaque place labels, whose sum is zero. Nothing here identifies
actual places of a number field.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Mapping

from .errors import DuplicatePlaces


@dataclass(frozen=True, order=True)
class QZ:
    """A rational number modulo 1, stored in [0, 1)."""

    value: Fraction

    def __post_init__(self):
        v = Fraction(self.value)
        object.__setattr__(self, "value", v - (v.numerator // v.denominator))

    def __add__(self, other: QZ) -> QZ:
        return QZ(self.value + other.value)

    def __neg__(self) -> QZ:
        return QZ(-self.value)

    def __sub__(self, other: QZ) -> QZ:
        return QZ(self.value - other.value)

    def __mul__(self, k: int) -> QZ:
        return QZ(self.value * k)

    __rmul__ = __mul__

    @property
    def order(self) -> int:
        return self.value.denominator

    def is_zero(self) -> bool:
        return self.value == 0

    def is_dyadic(self) -> bool:
        d = self.value.denominator
        return d & (d - 1) == 0

    def __str__(self) -> str:
        return str(self.value)


@dataclass(frozen=True)
class TorsionSubgroup:
    """Subgroup of Q/Z generated by finitely many elements. It is cyclic of
    order lcm of the generator denominators, generated by 1/order."""

    generators: tuple[QZ, ...]
    canonical_order: int

    @classmethod
    def generated_by(cls, gens: Iterable[QZ]) -> TorsionSubgroup:
        gens = tuple(sorted(set(gens)))
        order = lcm(1, *(g.order for g in gens))
        return cls(gens, order)

    def canonical_generator(self) -> QZ:
        return QZ(Fraction(1, self.canonical_order))

    def __contains__(self, y: QZ) -> bool:
        return self.canonical_order % y.order == 0

    def elements(self) -> list[QZ]:
        return [QZ(Fraction(k, self.canonical_order)) for k in range(self.canonical_order)]

    def multiple_of_generator(self, y: QZ) -> int:
        """k with y = k / order."""
        k = y.value * self.canonical_order
        if k.denominator != 1:
            raise ValueError(f"{y} is not in the subgroup")
        return int(k)


@dataclass(frozen=True)
class BrauerClass:
    """Finite-support local invariants summing to 0 in Q/Z."""

    invariants: tuple[tuple[str, QZ], ...] = ()

    def __post_init__(self):
        inv = tuple(sorted((str(p), y) for p, y in self.invariants if not y.is_zero()))
        places = [p for p, _ in inv]
        if len(set(places)) != len(places):
            raise DuplicatePlaces("a place label occurs twice")
        total = sum((y.value for _, y in inv), Fraction(0))
        if total.denominator != 1:
            raise ValueError(f"local invariants sum to {total} mod 1, not 0")
        object.__setattr__(self, "invariants", inv)

    @classmethod
    def from_mapping(cls, m: Mapping[str, Fraction | QZ]) -> BrauerClass:
        return cls(tuple((p, y if isinstance(y, QZ) else QZ(y)) for p, y in m.items()))

    @classmethod
    def zero(cls) -> BrauerClass:
        return cls(())

    def as_dict(self) -> dict[str, QZ]:
        return dict(self.invariants)

    def __add__(self, other: BrauerClass) -> BrauerClass:
        return brauer_add(self, other)

    def __neg__(self) -> BrauerClass:
        return BrauerClass(tuple((p, -y) for p, y in self.invariants))

    def __sub__(self, other: BrauerClass) -> BrauerClass:
        return self + (-other)

    def is_zero(self) -> bool:
        return not self.invariants

    @property
    def order(self) -> int:
        return lcm(1, *(y.order for _, y in self.invariants))


def brauer_add(a: BrauerClass, b: BrauerClass) -> BrauerClass:
    out = a.as_dict()
    for p, y in b.invariants:
        out[p] = out[p] + y if p in out else y
    return BrauerClass(tuple(out.items()))


def brauer_from_generator(y: QZ, places: tuple[str, str]) -> BrauerClass:
    """The class with invariant y at the first place and -y at the second."""
    p1, p2 = places
    if p1 == p2:
        raise DuplicatePlaces("the two places must differ")
    return BrauerClass(((p1, y), (p2, -y)))
