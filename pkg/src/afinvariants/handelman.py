"""Handelman triples (endomorphism order, module class, field) and Morita
equivalence queries for stationary AF-algebras.

Quadratic fields get a complete decision: two full modules Z b1 + Z b2 are
similar iff the ratios b2/b1 are GL(2, Z)-equivalent, iff the periods of
their continued fractions are cyclic rotations of each other. Higher
degree falls back to a bounded search that may answer "unknown".
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from itertools import product

from .af_core import TraceModule, lattice_times, pf_eigendata, trace_module
from .contfrac import quadratic_cf, quadratic_surd
from .errors import OrderMismatch, RankDeficientModule
from .exact import AlgebraicNumber, FieldElement, IntPolynomial, NumberField, compare
from .lattice import IntegerMatrix, RationalLattice, dual_lattice, hnf, rational_inverse


class ClassStatus(str, Enum):
    PRINCIPAL_EQUAL = "principal_equal"
    DISTINCT = "distinct"
    UNKNOWN = "unknown"


class Verdict(str, Enum):
    EQUIVALENT = "equivalent"
    DISTINCT = "distinct"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class Order:
    field: NumberField
    lattice: RationalLattice

    @property
    def contains_one(self) -> bool:
        return self.field.one().coords in self.lattice

    def elements(self) -> list[FieldElement]:
        return [self.field(row) for row in self.lattice.basis]

    def is_multiplicatively_closed(self) -> bool:
        basis = self.elements()
        return all((x * y).coords in self.lattice for x in basis for y in basis)


def colon_lattice(k: NumberField, num: RationalLattice, den: RationalLattice) -> RationalLattice:
    """{x in K : x * den is contained in num}; num must have full rank."""
    if not num.is_full_rank():
        raise RankDeficientModule(f"module of rank {num.rank} in a field of degree {k.degree}")
    finv = rational_inverse(num.basis)
    d = k.degree
    cols = []
    for row in den.basis:
        mult = k(row).multiplication_matrix()
        # row t of mult * finv: coordinates of alpha^t * e in the num basis
        r = [[sum(mult[t][s] * finv[s][j] for s in range(d)) for j in range(d)] for t in range(d)]
        cols.extend([list(col) for col in zip(*r)])
    return dual_lattice(hnf(cols))


def endomorphism_ring(m) -> Order:
    """Multiplier ring {x : x m in m} of a full-rank module in K."""
    if not m.lattice.is_full_rank():
        raise RankDeficientModule(f"module of rank {m.lattice.rank} in a field of degree {m.field.degree}")
    order = Order(m.field, colon_lattice(m.field, m.lattice, m.lattice))
    assert order.contains_one, "endomorphism ring must contain 1"
    assert order.is_multiplicatively_closed(), "endomorphism ring must be closed under products"
    return order


# ---------------------------------------------------------------------------
# Ideal classes

@dataclass(frozen=True)
class IdealClassWitness:
    status: ClassStatus
    scalar: FieldElement | None = None


def _similar_by(k: NumberField, m1: RationalLattice, m2: RationalLattice, x: FieldElement) -> bool:
    return lattice_times(k, m1, x) == m2


def _quotient_walk(omega: FieldElement, terms, steps: int) -> tuple[FieldElement, FieldElement]:
    """Complete quotient omega_steps and the scalar s with
    Z + Z omega = s * (Z + Z omega_steps)."""
    w = omega
    s = omega.field.one()
    for a in terms[:steps]:
        w = (w - a).inverse()
        s = s / w
    return w, s


def _expansion_terms(cf, length: int) -> list[int]:
    out = [cf.integer_part]
    it = cf.partial_quotients()
    while len(out) < length:
        out.append(next(it))
    return out


def _quadratic_class(m1: RationalLattice, m2: RationalLattice, k: NumberField) -> IdealClassWitness:
    b1 = [k(r) for r in m1.basis]
    b2 = [k(r) for r in m2.basis]
    om1, om2 = b1[1] / b1[0], b2[1] / b2[0]
    cf1, cf2 = quadratic_cf(*quadratic_surd(om1)), quadratic_cf(*quadratic_surd(om2))
    p1, p2 = cf1.period, cf2.period
    if len(p1) != len(p2):
        return IdealClassWitness(ClassStatus.DISTINCT)
    shift = next((r for r in range(len(p1)) if p1[r:] + p1[:r] == p2), None)
    if shift is None:
        return IdealClassWitness(ClassStatus.DISTINCT)
    i1 = 1 + len(cf1.preperiod) + shift
    i2 = 1 + len(cf2.preperiod)
    rho1, s1 = _quotient_walk(om1, _expansion_terms(cf1, i1), i1)
    rho2, s2 = _quotient_walk(om2, _expansion_terms(cf2, i2), i2)
    assert rho1 == rho2, "matching periods must give equal complete quotients"
    x = (b2[0] * s2) / (b1[0] * s1)
    assert _similar_by(k, m1, m2, x)
    return IdealClassWitness(ClassStatus.PRINCIPAL_EQUAL, x)


def _search_class(m1: RationalLattice, m2: RationalLattice, k: NumberField, bound: int) -> IdealClassWitness:
    colon = colon_lattice(k, m2, m1)
    target = abs(m2.covolume() / m1.covolume())
    basis = [k(r) for r in colon.basis]
    coeffs = sorted(product(range(-bound, bound + 1), repeat=len(basis)), key=lambda c: (max(map(abs, c)), c))
    for c in coeffs:
        if not any(c):
            continue
        x = sum((b * ci for b, ci in zip(basis, c)), k.zero())
        if abs(x.norm()) == target and _similar_by(k, m1, m2, x):
            return IdealClassWitness(ClassStatus.PRINCIPAL_EQUAL, x)
    return IdealClassWitness(ClassStatus.UNKNOWN)


def ideal_class_equal(m1, m2, order: Order, search_bound: int = 8) -> IdealClassWitness:
    """Decide whether x * m1 = m2 for some nonzero x in K.

    ``m1`` and ``m2`` are anything with ``field`` and ``lattice`` attributes
    (trace modules, orders); both must have ``order`` as multiplier ring.
    """
    k = order.field
    for m in (m1, m2):
        if endomorphism_ring(m).lattice != order.lattice:
            raise OrderMismatch("module does not have the given multiplier ring")
    if k.degree == 1:
        x = k(m2.lattice.basis[0]) / k(m1.lattice.basis[0])
        return IdealClassWitness(ClassStatus.PRINCIPAL_EQUAL, x)
    if k.degree == 2:
        return _quadratic_class(m1.lattice, m2.lattice, k)
    return _search_class(m1.lattice, m2.lattice, k, search_bound)


# ---------------------------------------------------------------------------
# Triples

@dataclass(frozen=True)
class HandelmanTriple:
    order: Order
    module: TraceModule
    field: NumberField

    @property
    def lam(self) -> AlgebraicNumber:
        return self.field.root


def handelman_triple(a: IntegerMatrix, mode: str = "eigenvector") -> HandelmanTriple:
    pf = pf_eigendata(a)
    m = trace_module(pf, mode)
    return HandelmanTriple(endomorphism_ring(m), m, pf.field)


def module_class(t: HandelmanTriple, search_bound: int = 8) -> IdealClassWitness:
    """Class of the trace module relative to its order: principal_equal means
    the module is a multiple of the order itself (trivial class)."""
    return ideal_class_equal(t.order, t.module, t.order, search_bound)


def _squarefree_core(n: int) -> tuple[int, int]:
    """(d, f) with n = f^2 d and d squarefree."""
    d, f = 1, 1
    p = 2
    m = n
    while p * p <= m:
        e = 0
        while m % p == 0:
            m //= p
            e += 1
        f *= p ** (e // 2)
        if e % 2:
            d *= p
        p += 1
    return d * m, f


@lru_cache(maxsize=None)
def quadratic_field(d: int) -> NumberField:
    """Q(sqrt(d)) with sqrt(d) > 0 and power basis 1, sqrt(d)."""
    return NumberField(AlgebraicNumber.real_roots(IntPolynomial((-d, 0, 1)))[-1])


@lru_cache(maxsize=None)
def rational_field() -> NumberField:
    return NumberField.rationals()


def discriminant_core(k: NumberField) -> int:
    c, b, a = k.minpoly.coeffs
    return _squarefree_core(b * b - 4 * a * c)[0]


@dataclass(frozen=True)
class CanonicalTriple:
    """A triple transported to canonical coordinates: Q, Q(sqrt(d)) with
    basis 1, sqrt(d), or (degree >= 3) the power basis of lambda itself."""

    kind: str
    key: object
    field: NumberField
    order: RationalLattice
    module: RationalLattice


def _transport_matrix(k: NumberField) -> tuple[str, object, NumberField, list[list[Fraction]]]:
    if k.degree == 1:
        return "rational", 1, rational_field(), [[Fraction(1)]]
    if k.degree == 2:
        c, b, a = k.minpoly.coeffs
        d, f = _squarefree_core(b * b - 4 * a * c)
        eps = compare(k.root, Fraction(-b, 2 * a)) * (1 if a > 0 else -1)
        t = [[Fraction(1), Fraction(0)], [Fraction(-b, 2 * a), Fraction(eps * f, 2 * a)]]
        return "quadratic", d, quadratic_field(d), t
    ident = [[Fraction(int(i == j)) for j in range(k.degree)] for i in range(k.degree)]
    return "general", k.minpoly, k, ident


def canonical_triple(t: HandelmanTriple) -> CanonicalTriple:
    kind, key, field_, tm = _transport_matrix(t.field)
    return CanonicalTriple(kind, key, field_, t.order.lattice.transformed(tm), t.module.lattice.transformed(tm))


@dataclass(frozen=True)
class MoritaResult:
    verdict: Verdict
    trail: tuple[tuple[str, str], ...]
    witness: IdealClassWitness | None = None


def compare_triples(t1: HandelmanTriple, t2: HandelmanTriple, search_bound: int = 8) -> MoritaResult:
    c1, c2 = canonical_triple(t1), canonical_triple(t2)
    trail = []
    if t1.field.degree != t2.field.degree:
        trail.append(("field", f"degree {t1.field.degree} vs {t2.field.degree}"))
        return MoritaResult(Verdict.DISTINCT, tuple(trail))
    if c1.kind == "quadratic" and c1.key != c2.key:
        trail.append(("field", f"Q(sqrt({c1.key})) vs Q(sqrt({c2.key}))"))
        return MoritaResult(Verdict.DISTINCT, tuple(trail))
    if c1.kind == "general" and c1.field != c2.field:
        trail.append(("field", "different generators of equal degree; isomorphism not decided"))
        return MoritaResult(Verdict.UNKNOWN, tuple(trail))
    trail.append(("field", "same"))
    if c1.order != c2.order:
        trail.append(("order", "different"))
        return MoritaResult(Verdict.DISTINCT, tuple(trail))
    trail.append(("order", "same"))
    k = c1.field
    order = Order(k, c1.order)
    w = ideal_class_equal(TraceModule(k, c1.module), TraceModule(k, c2.module), order, search_bound)
    trail.append(("class", w.status.value))
    verdict = {
        ClassStatus.PRINCIPAL_EQUAL: Verdict.EQUIVALENT,
        ClassStatus.DISTINCT: Verdict.DISTINCT,
        ClassStatus.UNKNOWN: Verdict.UNKNOWN,
    }[w.status]
    return MoritaResult(verdict, tuple(trail), w)


def morita_equivalent(a: IntegerMatrix, b: IntegerMatrix, search_bound: int = 8) -> MoritaResult:
    return compare_triples(handelman_triple(a), handelman_triple(b), search_bound)
