"""Integer matrices and Z-lattices in Q^d.

Lattices are kept in row-style Hermite normal form so that equal lattices
have identical bases and dataclass equality is lattice equality.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from .errors import EmptyInput, NegativeEntry, NotUnimodular
from .exact import IntPolynomial, Number, integer_det


@dataclass(frozen=True)
class IntegerMatrix:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise ValueError("matrix must be square and nonempty")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def identity(cls, n: int) -> IntegerMatrix:
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def parse(cls, text: str) -> IntegerMatrix:
        """Parse the "a b; c d" row format."""
        rows = []
        for chunk in text.strip().split(";"):
            chunk = chunk.strip()
            if not chunk:
                raise ValueError("empty row in matrix text")
            rows.append(tuple(int(tok) for tok in chunk.replace(",", " ").split()))
        widths = {len(r) for r in rows}
        if len(widths) != 1:
            raise ValueError("ragged rows in matrix text")
        return cls(tuple(rows))

    def format(self) -> str:
        return "; ".join(" ".join(str(x) for x in r) for r in self.rows)

    def __str__(self) -> str:
        return self.format()

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __matmul__(self, other: IntegerMatrix) -> IntegerMatrix:
        cols = list(zip(*other.rows))
        return IntegerMatrix(tuple(tuple(sum(a * b for a, b in zip(r, c)) for c in cols) for r in self.rows))

    def __pow__(self, k: int) -> IntegerMatrix:
        out = IntegerMatrix.identity(self.n)
        base = self
        while k:
            if k & 1:
                out = out @ base
            base = base @ base
            k >>= 1
        return out

    def transpose(self) -> IntegerMatrix:
        return IntegerMatrix(tuple(zip(*self.rows)))

    def is_nonnegative(self) -> bool:
        return all(x >= 0 for r in self.rows for x in r)

    def is_identity(self) -> bool:
        return self == IntegerMatrix.identity(self.n)

    def det(self) -> int:
        return integer_det(self.rows)

    def apply(self, v: Sequence) -> list:
        return [sum(a * x for a, x in zip(r, v)) for r in self.rows]


def is_primitive(a: IntegerMatrix) -> bool:
    """Some power of ``a`` is strictly positive (checked at the Wielandt exponent)."""
    if not a.is_nonnegative():
        raise NegativeEntry("primitivity is defined for nonnegative matrices")
    n = a.n
    full = (1 << n) - 1
    # boolean pattern as row bitmasks
    pat = [sum(1 << j for j in range(n) if a[i, j]) for i in range(n)]

    def bmul(x, y):
        out = []
        for row in x:
            acc = 0
            j = 0
            while row:
                if row & 1:
                    acc |= y[j]
                row >>= 1
                j += 1
            out.append(acc)
        return out

    k = n * n - 2 * n + 2
    result = None
    base = pat
    while k:
        if k & 1:
            result = base if result is None else bmul(result, base)
        base = bmul(base, base)
        k >>= 1
    return all(r == full for r in result)


def char_poly(a: IntegerMatrix) -> IntPolynomial:
    """det(xI - A) by Faddeev-LeVerrier; every division is exact over Z."""
    n = a.n
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    m = [[0] * n for _ in range(n)]
    rows = a.rows
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{n-k+1} I, with M_0 = 0
        am = [[sum(rows[i][t] * m[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        for i in range(n):
            am[i][i] += coeffs[n - k + 1]
        m = am
        tr = sum(sum(rows[i][t] * m[t][i] for t in range(n)) for i in range(n))
        assert tr % k == 0
        coeffs[n - k] = -tr // k
    return IntPolynomial(tuple(coeffs))


def kronecker(a: IntegerMatrix, b: IntegerMatrix) -> IntegerMatrix:
    rows = []
    for ra in a.rows:
        for rb in b.rows:
            rows.append(tuple(x * y for x in ra for y in rb))
    return IntegerMatrix(tuple(rows))


def kronecker_vector(u: Sequence[int], v: Sequence[int]) -> tuple[int, ...]:
    return tuple(x * y for x in u for y in v)


def unimodular_inverse(u: IntegerMatrix) -> IntegerMatrix:
    d = u.det()
    if abs(d) != 1:
        raise NotUnimodular(f"det = {d}")
    inv = rational_inverse(u.rows)
    return IntegerMatrix(tuple(tuple(int(x) for x in r) for r in inv))


def gl_conjugate(a: IntegerMatrix, u: IntegerMatrix) -> IntegerMatrix:
    """U A U^-1 for unimodular U."""
    return u @ a @ unimodular_inverse(u)


def rational_inverse(m: Sequence[Sequence[Number]]) -> list[list[Fraction]]:
    n = len(m)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for k in range(n):
        piv = next((i for i in range(k, n) if aug[i][k] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        aug[k], aug[piv] = aug[piv], aug[k]
        p = aug[k][k]
        aug[k] = [x / p for x in aug[k]]
        for i in range(n):
            if i != k and aug[i][k] != 0:
                f = aug[i][k]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[k])]
    return [row[n:] for row in aug]


# ---------------------------------------------------------------------------
# Lattices

def _integer_hnf(rows: list[list[int]], ncols: int) -> list[list[int]]:
    """Row-style Hermite normal form; zero rows dropped."""
    a = [list(r) for r in rows if any(r)]
    out = []
    col = 0
    while a and col < ncols:
        nz = [r for r in a if r[col] != 0]
        rest = [r for r in a if r[col] == 0]
        if not nz:
            col += 1
            continue
        while len(nz) > 1:
            nz.sort(key=lambda r: abs(r[col]))
            piv = nz[0]
            nxt = [piv]
            for r in nz[1:]:
                q = r[col] // piv[col]
                r = [x - q * y for x, y in zip(r, piv)]
                if r[col] != 0:
                    nxt.append(r)
                elif any(r):
                    rest.append(r)
            nz = nxt
        piv = nz[0]
        if piv[col] < 0:
            piv = [-x for x in piv]
        out.append(piv)
        a = rest
        col += 1
    # reduce entries above each pivot into [0, pivot)
    for i, row in enumerate(out):
        c = next(j for j, x in enumerate(row) if x)
        for k in range(i):
            q = out[k][c] // row[c]
            if q:
                out[k] = [x - q * y for x, y in zip(out[k], row)]
    return out


@dataclass(frozen=True)
class RationalLattice:
    """Z-span of rational vectors, stored by its canonical HNF basis."""

    ambient_dim: int
    basis: tuple[tuple[Fraction, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.basis)

    def is_full_rank(self) -> bool:
        return self.rank == self.ambient_dim

    def covolume(self) -> Fraction:
        if not self.is_full_rank():
            raise ValueError("covolume of a rank-deficient lattice")
        out = Fraction(1)
        for i, row in enumerate(self.basis):
            out *= row[i]
        return out

    def coordinates(self, v: Sequence[Number]) -> list[Fraction] | None:
        """Rational coordinates of v in the basis, or None if v is outside the span."""
        rem = [Fraction(x) for x in v]
        coords = []
        for row in self.basis:
            c = next(j for j, x in enumerate(row) if x)
            q = rem[c] / row[c]
            coords.append(q)
            rem = [x - q * y for x, y in zip(rem, row)]
        if any(rem):
            return None
        return coords

    def __contains__(self, v) -> bool:
        coords = self.coordinates(v)
        return coords is not None and all(c.denominator == 1 for c in coords)

    def contains_lattice(self, other: RationalLattice) -> bool:
        return all(v in self for v in other.basis)

    def __add__(self, other: RationalLattice) -> RationalLattice:
        return hnf(self.basis + other.basis)

    def scaled(self, c: Number) -> RationalLattice:
        return hnf([[c * x for x in row] for row in self.basis])

    def transformed(self, t: Sequence[Sequence[Number]]) -> RationalLattice:
        """Image under the row-vector map v -> v T."""
        return hnf([[sum(v[k] * t[k][j] for k in range(len(v))) for j in range(len(t[0]))] for v in self.basis])

    def vectors(self) -> list[list[Fraction]]:
        return [list(r) for r in self.basis]


def hnf(generators: Iterable[Sequence[Number]]) -> RationalLattice:
    gens = [[Fraction(x) for x in g] for g in generators]
    if not gens or not any(any(g) for g in gens):
        raise EmptyInput("need at least one nonzero generator")
    dim = len(gens[0])
    if any(len(g) != dim for g in gens):
        raise ValueError("generators of different lengths")
    den = lcm(*(x.denominator for g in gens for x in g))
    ints = [[int(x * den) for x in g] for g in gens]
    red = _integer_hnf(ints, dim)
    return RationalLattice(dim, tuple(tuple(Fraction(x, den) for x in r) for r in red))


def dual_lattice(lat: RationalLattice) -> RationalLattice:
    """{c : <c, b> in Z for every basis vector b} for a full-rank lattice."""
    if not lat.is_full_rank():
        raise ValueError("dual of a rank-deficient lattice")
    inv = rational_inverse(lat.basis)
    # rows of (B^-1)^T
    return hnf([list(col) for col in zip(*inv)])
