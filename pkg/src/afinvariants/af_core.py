"""Stationary AF-algebras given by a partial multiplicity matrix.

The dimension group is modelled through the Perron-Frobenius eigenvector:
its coordinates span the trace module inside K = Q(lambda), and the order
unit is a positive dimension vector paired against that eigenvector.

An identity matrix I_n stands for the finite-dimensional algebra M_n(C).
More generally, a nonnegative matrix whose support splits into m identical
primitive blocks (for instance A (x) I_m) is telescoped to one block B
carrying multiplicity m; it models B (x) M_m(C).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cmp_to_key
from itertools import product
from typing import Sequence

from .errors import IterationCapExceeded, NegativeEntry, NotPrimitive
from .exact import (
    AlgebraicNumber,
    FieldElement,
    IntPolynomial,
    NumberField,
    compare,
    factor_over_Q,
    isolate_real_roots,
    multiply,
    product_polynomial,
    squarefree_part,
)
from .lattice import (
    IntegerMatrix,
    RationalLattice,
    char_poly,
    hnf,
    is_primitive,
    kronecker,
    kronecker_vector,
)

LIMIT_ITERATION_CAP = 64


@dataclass(frozen=True)
class Telescoped:
    block: IntegerMatrix
    copies: int
    components: tuple[tuple[int, ...], ...]


def telescope(a: IntegerMatrix) -> Telescoped | None:
    """Split the support graph of ``a`` into connected components; succeed when
    every component carries the same submatrix (indices in increasing order)."""
    n = a.n
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(n):
            if a[i, j]:
                parent[find(i)] = find(j)
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    comps = sorted((tuple(g) for g in groups.values()), key=lambda g: g[0])
    blocks = {tuple(tuple(a[i, j] for j in c) for i in c) for c in comps}
    if len(blocks) != 1:
        return None
    return Telescoped(IntegerMatrix(blocks.pop()), len(comps), tuple(comps))


def is_admissible(a: IntegerMatrix) -> bool:
    if not a.is_nonnegative():
        return False
    t = telescope(a)
    return t is not None and is_primitive(t.block)


@dataclass(frozen=True)
class StationaryAF:
    """Stationary AF-algebra: constant multiplicity matrix plus an order unit
    given as a dimension vector (defaults to all ones)."""

    matrix: IntegerMatrix
    unit: tuple[int, ...] | None = None

    def __post_init__(self):
        if not self.matrix.is_nonnegative():
            raise NegativeEntry("partial multiplicity matrices are nonnegative")
        if not is_admissible(self.matrix):
            raise NotPrimitive("matrix is neither primitive nor a union of identical primitive blocks")
        unit = self.unit if self.unit is not None else (1,) * self.matrix.n
        unit = tuple(int(x) for x in unit)
        if len(unit) != self.matrix.n or any(x < 0 for x in unit) or not any(unit):
            raise ValueError("order unit must be a nonzero nonnegative dimension vector")
        object.__setattr__(self, "unit", unit)

    @property
    def telescoped(self) -> Telescoped:
        return telescope(self.matrix)

    @property
    def finite_dimensional(self) -> bool:
        return self.telescoped.block == IntegerMatrix.identity(1)


@dataclass(frozen=True)
class PFData:
    lam: AlgebraicNumber
    field: NumberField
    eigenvector: tuple[FieldElement, ...]
    copies: int = 1

    @property
    def minpoly(self) -> IntPolynomial:
        return self.lam.minpoly

    @property
    def field_degree(self) -> int:
        return self.field.degree

    def lam_element(self) -> FieldElement:
        return self.field.gen()


def _kernel_vector(rows: list[list[FieldElement]], field_: NumberField) -> list[FieldElement]:
    """A nonzero solution of rows * v = 0, first nonzero coordinate 1;
    the kernel must be one-dimensional."""
    n = len(rows[0])
    a = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, len(a)) if not a[i][c].is_zero()), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = a[r][c].inverse()
        a[r] = [x * inv for x in a[r]]
        for i in range(len(a)):
            if i != r and not a[i][c].is_zero():
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(n) if c not in pivots]
    if len(free) != 1:
        raise NotPrimitive(f"eigenspace has dimension {len(free)}, expected 1")
    fcol = free[0]
    v = [field_.zero() for _ in range(n)]
    v[fcol] = field_.one()
    for i, c in enumerate(pivots):
        v[c] = -a[i][fcol]
    first = next(x for x in v if not x.is_zero())
    inv = first.inverse()
    return [x * inv for x in v]


def _dominant_root(a: IntegerMatrix) -> tuple[AlgebraicNumber, int]:
    """Largest real eigenvalue and its multiplicity in the characteristic polynomial."""
    best, mult = None, 0
    for f, m in factor_over_Q(char_poly(a)):
        roots = AlgebraicNumber.real_roots(f)
        if roots and (best is None or compare(roots[-1], best) > 0):
            best, mult = roots[-1], m
    if best is None:
        raise NotPrimitive("no real eigenvalue")
    return best, mult


def _strictly_dominates(a: IntegerMatrix, lam: AlgebraicNumber) -> bool:
    """True iff lam exceeds the modulus of every other eigenvalue of ``a``.

    lam^2 must be a simple root of the product polynomial (roots z_i z_j)
    and its largest real root: any competitor z with |z| >= lam would
    contribute z*conj(z) >= lam^2 or repeat lam^2.
    """
    p = char_poly(a)
    r = product_polynomial(p, p)
    k = NumberField(lam)
    sq = k.gen() ** 2

    def ev(poly: IntPolynomial, x: FieldElement) -> FieldElement:
        acc = k.zero()
        for c in reversed(poly.coeffs):
            acc = acc * x + c
        return acc

    if not ev(r, sq).is_zero():
        return False
    if ev(r.derivative(), sq).is_zero():
        return False
    top_lo, _ = isolate_real_roots(squarefree_part(r))[-1]
    return (sq - top_lo).sign() > 0


def _pf_of_block(b: IntegerMatrix) -> tuple[AlgebraicNumber, NumberField, list[FieldElement]]:
    lam, _ = _dominant_root(b)
    k = NumberField(lam)
    l = k.gen()
    rows = [[k(b[i, j]) - (l if i == j else 0) for j in range(b.n)] for i in range(b.n)]
    return lam, k, _kernel_vector(rows, k)


def pf_eigendata(a: IntegerMatrix) -> PFData:
    """Perron-Frobenius eigenvalue and eigenvector, exact over K = Q(lambda).

    Nonnegative input must be primitive or telescope to identical primitive
    blocks. Input with negative entries (a GL(n, Z) conjugate of such a
    matrix) is accepted when its largest real eigenvalue is simple and
    strictly dominant.
    """
    if a.is_nonnegative():
        t = telescope(a)
        if t is None or not is_primitive(t.block):
            raise NotPrimitive("matrix is neither primitive nor a union of identical primitive blocks")
        lam, k, vb = _pf_of_block(t.block)
        v = [None] * a.n
        for comp in t.components:
            for pos, idx in enumerate(comp):
                v[idx] = vb[pos]
        return PFData(lam, k, tuple(v), t.copies)
    lam, mult = _dominant_root(a)
    if mult != 1 or compare(lam, 0) <= 0 or not _strictly_dominates(a, lam):
        raise NegativeEntry("negative entries and no simple strictly dominant positive eigenvalue")
    k = NumberField(lam)
    l = k.gen()
    rows = [[k(a[i, j]) - (l if i == j else 0) for j in range(a.n)] for i in range(a.n)]
    return PFData(lam, k, tuple(_kernel_vector(rows, k)), 1)


def residual(a: IntegerMatrix, pf: PFData) -> list[FieldElement]:
    """A v - lambda v, which must vanish identically."""
    l = pf.lam_element()
    v = pf.eigenvector
    return [sum((v[j] * a[i, j] for j in range(a.n)), pf.field.zero()) - l * v[i] for i in range(a.n)]


# ---------------------------------------------------------------------------
# Trace module

@dataclass(frozen=True)
class TraceModule:
    field: NumberField
    lattice: RationalLattice
    mode: str = "eigenvector"
    stabilized: bool = True
    iterations: int = 0

    @property
    def rank(self) -> int:
        return self.lattice.rank

    def elements(self) -> list[FieldElement]:
        return [self.field(row) for row in self.lattice.basis]

    def scaled(self, x: FieldElement) -> TraceModule:
        return TraceModule(self.field, lattice_times(self.field, self.lattice, x), self.mode, self.stabilized)

    def __contains__(self, x: FieldElement) -> bool:
        return x.coords in self.lattice


def lattice_times(k: NumberField, lat: RationalLattice, x: FieldElement) -> RationalLattice:
    return hnf([(k(row) * x).coords for row in lat.basis])


def trace_module(pf: PFData, mode: str = "eigenvector", cap: int = LIMIT_ITERATION_CAP,
                 strict: bool = False) -> TraceModule:
    """Z-span of the eigenvector coordinates, or (``mode="limit"``) the union of
    lambda^-k times that span, iterated until it stops growing."""
    k = pf.field
    base = hnf([v.coords for v in pf.eigenvector])
    if mode == "eigenvector":
        return TraceModule(k, base, mode)
    if mode != "limit":
        raise ValueError(f"unknown trace-module mode {mode!r}")
    inv = pf.lam_element().inverse()
    cur = base
    for i in range(1, cap + 1):
        nxt = lattice_times(k, cur, inv)
        if nxt == cur:
            return TraceModule(k, cur, mode, True, i)
        cur = nxt
    partial = TraceModule(k, cur, mode, False, cap)
    if strict:
        raise IterationCapExceeded(f"limit module did not stabilize in {cap} iterations", partial)
    return partial


# ---------------------------------------------------------------------------
# Order unit and scale

def unit_trace(af: StationaryAF, pf: PFData) -> FieldElement:
    return sum((v * d for v, d in zip(pf.eigenvector, af.unit)), pf.field.zero())


@dataclass(frozen=True)
class ScaleSample:
    """Elements x of the trace module, rescaled so tau(u) = 1, with 0 <= x <= 1."""

    elements: tuple[FieldElement, ...]
    coefficient_bound: int
    lattice: RationalLattice = field(repr=False, default=None)


def _by_value(x: FieldElement, y: FieldElement) -> int:
    return (x - y).sign()


def scale_sample(af: StationaryAF, pf: PFData, bound: int) -> ScaleSample:
    k = pf.field
    tu = unit_trace(af, pf)
    if tu.sign() <= 0:
        raise ValueError("order unit must have positive trace")
    module = trace_module(pf).lattice
    normalized = lattice_times(k, module, tu.inverse())
    basis = [k(row) for row in normalized.basis]
    one = k.one()
    keep = []
    for coeffs in product(range(-bound, bound + 1), repeat=len(basis)):
        x = sum((b * c for b, c in zip(basis, coeffs)), k.zero())
        if x.sign() >= 0 and (one - x).sign() >= 0:
            keep.append(x)
    if one not in keep:
        # the order unit always belongs to the scale, whatever the bound
        keep.append(one)
    keep.sort(key=cmp_to_key(_by_value))
    return ScaleSample(tuple(keep), bound, normalized)


# ---------------------------------------------------------------------------
# Tensor products and stabilization

def tensor(af1: StationaryAF, af2: StationaryAF) -> StationaryAF:
    return StationaryAF(kronecker(af1.matrix, af2.matrix), kronecker_vector(af1.unit, af2.unit))


def stabilize(af: StationaryAF, k: int) -> StationaryAF:
    """Tensor with M_{2^k}(C): same matrix, order unit scaled by 2^k."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return StationaryAF(af.matrix, tuple(x * 2**k for x in af.unit))


def lambda_is_multiplicative(a: IntegerMatrix, b: IntegerMatrix) -> bool:
    """lambda(A (x) B) equals lambda(A) * lambda(B) as algebraic numbers."""
    lab = pf_eigendata(kronecker(a, b)).lam
    prod = multiply(pf_eigendata(a).lam, pf_eigendata(b).lam)
    return lab.minpoly == prod.minpoly and compare(lab, prod) == 0

