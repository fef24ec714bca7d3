"""Exact arithmetic: integer polynomials, real-root isolation, algebraic numbers.

Rationals are :class:`fractions.Fraction`. Polynomials are stored lowest
degree first. No floating point is used in any decision procedure.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import gcd, isqrt, lcm
from typing import Iterable, Sequence, Union

from .errors import DegreeUnsupported

Rational = Fraction
Number = Union[int, Fraction]

FACTOR_DEGREE_CAP = 8


# ---------------------------------------------------------------------------
# Coefficient-list helpers (lists of Fractions, lowest degree first)

def _trim(c: list) -> list:
    while c and c[-1] == 0:
        c.pop()
    return c


def _qsub(a, b):
    n = max(len(a), len(b))
    out = [Fraction(0)] * n
    for i, x in enumerate(a):
        out[i] += x
    for i, x in enumerate(b):
        out[i] -= x
    return _trim(out)


def _qmul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _qdivmod(a, b):
    b = _trim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = [Fraction(x) for x in a]
    _trim(r)
    if len(r) < len(b):
        return [], r
    q = [Fraction(0)] * (len(r) - len(b) + 1)
    lb = b[-1]
    while len(r) >= len(b):
        k = len(r) - len(b)
        c = r[-1] / lb
        q[k] = c
        for i, y in enumerate(b):
            r[i + k] -= c * y
        r.pop()
        _trim(r)
    return _trim(q), r


def _qmonic(a):
    return [x / a[-1] for x in a] if a else []


def _qgcd(a, b):
    a, b = _trim([Fraction(x) for x in a]), _trim([Fraction(x) for x in b])
    while b:
        a, b = b, _qdivmod(a, b)[1]
    return _qmonic(a)


def _qderiv(a):
    return _trim([Fraction(i) * a[i] for i in range(1, len(a))])


def _to_integer_coeffs(c, normalize_sign: bool) -> tuple[int, ...]:
    """Clear denominators and content; scale only by a positive constant
    unless ``normalize_sign`` asks for a positive leading coefficient."""
    c = _trim([Fraction(x) for x in c])
    if not c:
        return ()
    den = lcm(*(x.denominator for x in c))
    ints = [int(x * den) for x in c]
    g = 0
    for v in ints:
        g = gcd(g, v)
    ints = [v // g for v in ints]
    if normalize_sign and ints[-1] < 0:
        ints = [-v for v in ints]
    return tuple(ints)


def _interval_mul(a_lo, a_hi, b_lo, b_hi):
    ps = (a_lo * b_lo, a_lo * b_hi, a_hi * b_lo, a_hi * b_hi)
    return min(ps), max(ps)


def _interval_eval(coeffs, lo, hi):
    """Enclosure of a polynomial's range over [lo, hi] by interval Horner."""
    acc_lo = acc_hi = Fraction(0)
    for c in reversed(coeffs):
        acc_lo, acc_hi = _interval_mul(acc_lo, acc_hi, lo, hi)
        acc_lo += c
        acc_hi += c
    return acc_lo, acc_hi


# ---------------------------------------------------------------------------
# Integer polynomials

@dataclass(frozen=True)
class IntPolynomial:
    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = [int(x) for x in self.coeffs]
        for x in self.coeffs:
            if isinstance(x, Fraction) and x.denominator != 1:
                raise ValueError(f"non-integer coefficient {x}")
        object.__setattr__(self, "coeffs", tuple(_trim(c)))

    @classmethod
    def x(cls) -> IntPolynomial:
        return cls((0, 1))

    @classmethod
    def constant(cls, c: int) -> IntPolynomial:
        return cls((c,))

    @classmethod
    def from_rationals(cls, coeffs: Iterable[Number]) -> IntPolynomial:
        """Primitive integer polynomial with positive leading coefficient
        proportional to the given rational coefficients."""
        return cls(_to_integer_coeffs(list(coeffs), normalize_sign=True))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g

    def primitive(self) -> IntPolynomial:
        return IntPolynomial.from_rationals(self.coeffs)

    def is_primitive(self) -> bool:
        return self.content() == 1

    def derivative(self) -> IntPolynomial:
        return IntPolynomial(tuple(i * self.coeffs[i] for i in range(1, len(self.coeffs))))

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return IntPolynomial(tuple(x + y for x, y in zip(a, b)))

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        return self + (-other)

    def __mul__(self, other: IntPolynomial) -> IntPolynomial:
        if isinstance(other, int):
            return IntPolynomial(tuple(other * c for c in self.coeffs))
        return IntPolynomial(tuple(int(x) for x in _qmul(self.coeffs, other.coeffs)))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> IntPolynomial:
        out = IntPolynomial((1,))
        for _ in range(k):
            out = out * self
        return out

    def exact_quotient(self, other: IntPolynomial) -> IntPolynomial | None:
        """self / other if the division is exact over Z, else None."""
        q, r = _qdivmod(self.coeffs, other.coeffs)
        if r or any(x.denominator != 1 for x in q):
            return None
        return IntPolynomial(tuple(int(x) for x in q))

    def __str__(self) -> str:
        return format_polynomial(self.coeffs)


def format_polynomial(coeffs: Sequence[Number], var: str = "x") -> str:
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = Fraction(coeffs[k])
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        terms.append((sign, body))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


# ---------------------------------------------------------------------------
# Factorization over Q

def squarefree_decomposition(p: IntPolynomial) -> list[tuple[IntPolynomial, int]]:
    """Yun's algorithm; returns the nonconstant squarefree parts with multiplicity."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    f = [Fraction(c) for c in p.coeffs]
    out = []
    df = _qderiv(f)
    a = _qgcd(f, df)
    b = _qdivmod(f, a)[0]
    c = _qdivmod(df, a)[0]
    d = _qsub(c, _qderiv(b))
    i = 1
    while len(b) > 1:
        a = _qgcd(b, d)
        if len(a) > 1:
            out.append((IntPolynomial.from_rationals(a), i))
        b = _qdivmod(b, a)[0]
        c = _qdivmod(d, a)[0]
        d = _qsub(c, _qderiv(b))
        i += 1
    return out


def squarefree_part(p: IntPolynomial) -> IntPolynomial:
    out = IntPolynomial((1,))
    for f, _ in squarefree_decomposition(p):
        out = out * f
    return out.primitive()


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def rational_roots(p: IntPolynomial) -> list[Fraction]:
    """All distinct rational roots, sorted."""
    coeffs = list(p.primitive().coeffs)
    roots = set()
    while coeffs and coeffs[0] == 0:
        roots.add(Fraction(0))
        coeffs.pop(0)
    if len(coeffs) <= 1:
        return sorted(roots)
    q = IntPolynomial(tuple(coeffs))
    for num in _divisors(coeffs[0]):
        for den in _divisors(coeffs[-1]):
            for r in (Fraction(num, den), Fraction(-num, den)):
                if r not in roots and q(r) == 0:
                    roots.add(r)
    return sorted(roots)


def _interpolate(xs: Sequence[int], ys: Sequence[int]) -> list[Fraction]:
    """Coefficients of the unique polynomial of degree < len(xs) through the points."""
    n = len(xs)
    dd = [Fraction(y) for y in ys]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j])
    coeffs = [dd[-1]]
    for i in range(n - 2, -1, -1):
        # coeffs <- coeffs * (x - xs[i]) + dd[i]
        shifted = [Fraction(0)] + coeffs
        for k in range(len(coeffs)):
            shifted[k] -= xs[i] * coeffs[k]
        shifted[0] += dd[i]
        coeffs = shifted
    return _trim(coeffs)


def _kronecker_split(f: IntPolynomial) -> IntPolynomial | None:
    """A proper factor of f found by Kronecker's interpolation search, or None
    if f is irreducible."""
    n = f.degree
    candidates = [x for x in range(-8, 9) if f(x) != 0]
    candidates.sort(key=lambda x: (len(_divisors(f(x))), abs(x), x))
    for s in range(1, n // 2 + 1):
        xs = candidates[: s + 1]
        choices = []
        for i, x in enumerate(xs):
            ds = _divisors(f(x))
            choices.append(ds if i == 0 else ds + [-d for d in ds])
        for ys in product(*choices):
            g = _interpolate(xs, ys)
            if len(g) != s + 1 or any(c.denominator != 1 for c in g):
                continue
            cand = IntPolynomial(tuple(int(c) for c in g))
            if f.leading % cand.leading:
                continue
            if f.exact_quotient(cand) is not None:
                return cand.primitive()
    return None


def _irreducible_pieces(f: IntPolynomial) -> list[IntPolynomial]:
    if f.degree <= 1:
        return [f.primitive()]
    g = _kronecker_split(f)
    if g is None:
        return [f.primitive()]
    h = f.exact_quotient(g)
    return _irreducible_pieces(g) + _irreducible_pieces(h)


def _factor_key(f: IntPolynomial):
    return (f.degree, f.coeffs)


def factor_over_Q(p: IntPolynomial) -> list[tuple[IntPolynomial, int]]:
    """Irreducible factorization over Q up to a rational constant.

    Squarefree decomposition, then rational-root stripping, then Kronecker's
    method on what remains (at most degree 8 per squarefree remainder).
    """
    if p.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    mults: dict[IntPolynomial, int] = {}
    for part, mult in squarefree_decomposition(p):
        rest = part
        for r in rational_roots(part):
            lin = IntPolynomial.from_rationals((-r, 1))
            rest = rest.exact_quotient(lin)
            mults[lin] = mults.get(lin, 0) + mult
        rest = rest.primitive()
        if rest.degree >= 1:
            if rest.degree > FACTOR_DEGREE_CAP:
                raise DegreeUnsupported(
                    f"irreducible-candidate search of degree {rest.degree} exceeds "
                    f"the cap of {FACTOR_DEGREE_CAP}"
                )
            for f in _irreducible_pieces(rest):
                mults[f] = mults.get(f, 0) + mult
    return sorted(mults.items(), key=lambda kv: _factor_key(kv[0]))


@lru_cache(maxsize=None)
def is_irreducible(p: IntPolynomial) -> bool:
    if p.degree < 1:
        return False
    fs = factor_over_Q(p)
    return len(fs) == 1 and fs[0][1] == 1


# ---------------------------------------------------------------------------
# Sturm sequences and real roots

@lru_cache(maxsize=None)
def sturm_sequence(p: IntPolynomial) -> tuple[IntPolynomial, ...]:
    """Sturm chain p, p', -rem(...), each rescaled by a positive constant."""
    seq = [p, IntPolynomial(_to_integer_coeffs(p.derivative().coeffs, False))]
    while seq[-1].degree > 0:
        r = _qdivmod(seq[-2].coeffs, seq[-1].coeffs)[1]
        if not r:
            break
        seq.append(IntPolynomial(_to_integer_coeffs([-c for c in r], False)))
    return tuple(seq)


def _variations(values) -> int:
    signs = [v > 0 for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _variations_at(seq, x) -> int:
    return _variations([q(x) for q in seq])


def _variations_at_infinity(seq, positive: bool) -> int:
    vals = []
    for q in seq:
        s = q.leading
        if not positive and q.degree % 2:
            s = -s
        vals.append(s)
    return _variations(vals)


def count_real_roots(p: IntPolynomial, lo: Number | None = None, hi: Number | None = None) -> int:
    """Distinct real roots of p in (lo, hi]; None means the corresponding infinity."""
    seq = sturm_sequence(p)
    v_lo = _variations_at_infinity(seq, False) if lo is None else _variations_at(seq, lo)
    v_hi = _variations_at_infinity(seq, True) if hi is None else _variations_at(seq, hi)
    return v_lo - v_hi


def root_bound(p: IntPolynomial) -> int:
    """Integer B with every complex root of p strictly inside |z| < B."""
    lead = abs(p.leading)
    m = max((abs(c) for c in p.coeffs[:-1]), default=0)
    return 1 + -(-m // lead)


def _split_point(p: IntPolynomial, lo: Fraction, hi: Fraction) -> Fraction:
    for k in (2, 3, 5, 7, 11, 13):
        for j in range(1, k):
            mid = lo + (hi - lo) * j / k
            if p(mid) != 0:
                return mid
    raise AssertionError("no root-free split point found")


def isolate_real_roots(p: IntPolynomial) -> list[tuple[Fraction, Fraction]]:
    """Sorted, disjoint rational intervals (lo, hi), each holding exactly one
    real root of p; endpoints are never roots. p should be squarefree."""
    if p.degree < 1:
        return []
    seq = sturm_sequence(p)
    b = Fraction(root_bound(p))
    out: list[tuple[Fraction, Fraction]] = []

    def rec(lo, hi, v_lo, v_hi):
        n = v_lo - v_hi
        if n == 0:
            return
        if n == 1:
            out.append((lo, hi))
            return
        mid = _split_point(p, lo, hi)
        v_mid = _variations_at(seq, mid)
        rec(lo, mid, v_lo, v_mid)
        rec(mid, hi, v_mid, v_hi)

    rec(-b, b, _variations_at(seq, -b), _variations_at(seq, b))
    return out


def is_totally_real(minpoly: IntPolynomial) -> bool:
    return count_real_roots(minpoly) == minpoly.degree


# ---------------------------------------------------------------------------
# Algebraic numbers

def _sep_bound(p: IntPolynomial) -> Fraction:
    """Rational lower bound on the distance between distinct roots of a
    squarefree integer polynomial (Mahler, with |disc| >= 1)."""
    d = p.degree
    if d < 2:
        return Fraction(1)
    norm2 = sum(c * c for c in p.coeffs)
    norm_up = isqrt(norm2)
    if norm_up * norm_up < norm2:
        norm_up += 1
    dpow = d ** (d + 2)
    dpow_up = isqrt(dpow)
    if dpow_up * dpow_up < dpow:
        dpow_up += 1
    return Fraction(1, dpow_up * norm_up ** (d - 1))


@dataclass(frozen=True, eq=False)
class AlgebraicNumber:
    """A real algebraic number: irreducible primitive minimal polynomial plus
    an isolating interval (lo, hi) with rational, non-root endpoints."""

    minpoly: IntPolynomial
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        p = self.minpoly
        if not (p.leading > 0 and p.is_primitive()):
            raise ValueError("minimal polynomial must be primitive with positive leading coefficient")
        if not self.lo < self.hi:
            raise ValueError("empty isolating interval")
        if p(self.lo) == 0 or p(self.hi) == 0:
            raise ValueError("interval endpoint is a root")
        if not is_irreducible(p):
            raise ValueError(f"{p} is not irreducible over Q")
        if count_real_roots(p, self.lo, self.hi) != 1:
            raise ValueError("interval does not isolate exactly one root")

    @classmethod
    def from_rational(cls, r: Number) -> AlgebraicNumber:
        r = Fraction(r)
        return cls(IntPolynomial.from_rationals((-r, 1)), r - 1, r + 1)

    @classmethod
    def real_roots(cls, p: IntPolynomial) -> list[AlgebraicNumber]:
        """All real roots of an irreducible polynomial, ascending."""
        p = p.primitive()
        return [cls(p, lo, hi) for lo, hi in isolate_real_roots(p)]

    @property
    def degree(self) -> int:
        return self.minpoly.degree

    def is_rational(self) -> bool:
        return self.minpoly.degree == 1

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("not a rational number")
        c0, c1 = self.minpoly.coeffs
        return Fraction(-c0, c1)

    def width(self) -> Fraction:
        return self.hi - self.lo

    def refine(self) -> AlgebraicNumber:
        """Halve the isolating interval."""
        if self.is_rational():
            v = self.as_rational()
            return AlgebraicNumber(self.minpoly, (self.lo + v) / 2, (self.hi + v) / 2)
        p = self.minpoly
        mid = (self.lo + self.hi) / 2
        if (p(self.lo) > 0) != (p(mid) > 0):
            return AlgebraicNumber(p, self.lo, mid)
        return AlgebraicNumber(p, mid, self.hi)

    def refined(self, width: Number) -> AlgebraicNumber:
        a = self
        while a.width() >= width:
            a = a.refine()
        return a

    def __float__(self) -> float:
        if self.is_rational():
            return float(self.as_rational())
        a = self.refined(Fraction(1, 2**60))
        return float((a.lo + a.hi) / 2)

    def __repr__(self) -> str:
        return f"AlgebraicNumber({self.minpoly}, [{self.lo}, {self.hi}])"

    def __eq__(self, other) -> bool:
        if not isinstance(other, (AlgebraicNumber, int, Fraction)):
            return NotImplemented
        return compare(self, other) == 0

    def __hash__(self) -> int:
        return hash(self.minpoly)

    def __lt__(self, other) -> bool:
        return compare(self, other) < 0

    def __le__(self, other) -> bool:
        return compare(self, other) <= 0

    def __gt__(self, other) -> bool:
        return compare(self, other) > 0

    def __ge__(self, other) -> bool:
        return compare(self, other) >= 0


def _cmp_alg_rational(a: AlgebraicNumber, r: Fraction) -> int:
    if a.is_rational():
        v = a.as_rational()
        return (v > r) - (v < r)
    while True:
        if r <= a.lo:
            return 1
        if r >= a.hi:
            return -1
        a = a.refine()


def compare(a: AlgebraicNumber | Number, b: AlgebraicNumber | Number) -> int:
    """Exact three-way comparison: -1 (less), 0 (equal), 1 (greater)."""
    if not isinstance(a, AlgebraicNumber) and not isinstance(b, AlgebraicNumber):
        a, b = Fraction(a), Fraction(b)
        return (a > b) - (a < b)
    if not isinstance(a, AlgebraicNumber):
        return -_cmp_alg_rational(b, Fraction(a))
    if not isinstance(b, AlgebraicNumber):
        return _cmp_alg_rational(a, Fraction(b))
    if a.is_rational():
        return -_cmp_alg_rational(b, a.as_rational())
    if b.is_rational():
        return _cmp_alg_rational(a, b.as_rational())
    if a.minpoly == b.minpoly:
        # Same polynomial: refine below the root gap; overlap then means equal.
        half_gap = _sep_bound(a.minpoly) / 2
        a, b = a.refined(half_gap), b.refined(half_gap)
        if a.hi <= b.lo:
            return -1
        if b.hi <= a.lo:
            return 1
        return 0
    # Distinct irreducible polynomials share no root.
    while True:
        if a.hi <= b.lo:
            return -1
        if b.hi <= a.lo:
            return 1
        if a.width() >= b.width():
            a = a.refine()
        else:
            b = b.refine()


# ---------------------------------------------------------------------------
# Products of algebraic numbers

def integer_det(m: Sequence[Sequence[int]]) -> int:
    """Bareiss fraction-free determinant."""
    a = [list(row) for row in m]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def _sylvester(f: Sequence[int], g: Sequence[int]) -> list[list[int]]:
    """Sylvester matrix for formal degrees len(f)-1 and len(g)-1 (lowest first)."""
    m, n = len(f) - 1, len(g) - 1
    size = m + n
    rows = []
    fr, gr = list(reversed(f)), list(reversed(g))
    for i in range(n):
        rows.append([0] * i + fr + [0] * (size - i - len(fr)))
    for i in range(m):
        rows.append([0] * i + gr + [0] * (size - i - len(gr)))
    return rows


def product_polynomial(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    """Integer polynomial whose roots are all products alpha*beta with
    p(alpha) = 0 and q(beta) = 0: Res_y(p(y), y^deg(q) * q(x/y))."""
    m, n = p.degree, q.degree
    total = m * n
    xs = list(range(total + 1))
    ys = []
    for t in xs:
        # y^n q(t/y) = sum_j q_j t^j y^(n-j)
        qt = [q.coeffs[n - k] * t ** (n - k) for k in range(n + 1)]
        ys.append(integer_det(_sylvester(list(p.coeffs), qt)))
    coeffs = _interpolate(xs, ys)
    return IntPolynomial(tuple(int(c) for c in coeffs))


def multiply(a: AlgebraicNumber, b: AlgebraicNumber) -> AlgebraicNumber:
    """The product a*b as an algebraic number, located exactly."""
    if a.is_rational() and b.is_rational():
        return AlgebraicNumber.from_rational(a.as_rational() * b.as_rational())
    s = squarefree_part(product_polynomial(a.minpoly, b.minpoly))
    while True:
        lo, hi = _interval_mul(a.lo, a.hi, b.lo, b.hi)
        if lo < hi and s(lo) != 0 and s(hi) != 0 and count_real_roots(s, lo, hi) == 1:
            break
        a, b = a.refine(), b.refine()
    for f, _ in factor_over_Q(s):
        if count_real_roots(f, lo, hi) == 1:
            return AlgebraicNumber(f, lo, hi)
    raise AssertionError("product root not located")


# ---------------------------------------------------------------------------
# Number fields Q(alpha) with a fixed real embedding

class NumberField:
    """Q(alpha) for a real algebraic number alpha, power basis 1, alpha, ..."""

    __slots__ = ("minpoly", "root", "degree", "_fine_root")

    def __init__(self, root: AlgebraicNumber):
        self.root = root
        self.minpoly = root.minpoly
        self.degree = root.minpoly.degree
        self._fine_root = root.refined(Fraction(1, 2**64))

    @classmethod
    def rationals(cls) -> NumberField:
        return cls(AlgebraicNumber(IntPolynomial((0, 1)), -1, 1))

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, NumberField):
            return NotImplemented
        return self.minpoly == other.minpoly and compare(self.root, other.root) == 0

    def __hash__(self) -> int:
        return hash(self.minpoly)

    def __repr__(self) -> str:
        return f"NumberField({self.root!r})"

    def __call__(self, coords: Iterable[Number] | Number) -> FieldElement:
        if isinstance(coords, (int, Fraction)):
            coords = [coords]
        c = [Fraction(x) for x in coords]
        if len(c) > self.degree:
            c = _reduce_mod(c, self.minpoly.coeffs)
        c += [Fraction(0)] * (self.degree - len(c))
        return FieldElement(self, tuple(c))

    def zero(self) -> FieldElement:
        return self(0)

    def one(self) -> FieldElement:
        return self(1)

    def gen(self) -> FieldElement:
        if self.degree == 1:
            return self(self.root.as_rational())
        return self([0, 1])


def _reduce_mod(c, m):
    return _qdivmod(c, m)[1]


@dataclass(frozen=True)
class FieldElement:
    """Element of a NumberField as rational coordinates over its power basis."""

    field: NumberField
    coords: tuple[Fraction, ...]

    def _coerce(self, other) -> FieldElement:
        if isinstance(other, FieldElement):
            if other.field is not self.field and other.field != self.field:
                raise ValueError("elements of different fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.field, tuple(x + y for x, y in zip(self.coords, o.coords)))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, tuple(-x for x in self.coords))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self.field(_reduce_mod(_qmul(list(self.coords), list(o.coords)), self.field.minpoly.coeffs))

    __rmul__ = __mul__

    def inverse(self) -> FieldElement:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero field element")
        # extended Euclid: s*g + t*m = 1
        m = [Fraction(c) for c in self.field.minpoly.coeffs]
        r0, r1 = m, _trim(list(self.coords))
        s0, s1 = [], [Fraction(1)]
        while len(r1) > 1:
            q, r = _qdivmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _qsub(s0, _qmul(q, s1))
        inv = [x / r1[0] for x in s1]
        return self.field(_reduce_mod(inv, m))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = self.field.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def is_zero(self) -> bool:
        return not any(self.coords)

    def is_rational(self) -> bool:
        return not any(self.coords[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("element is irrational")
        return self.coords[0]

    def enclosure(self, root: AlgebraicNumber | None = None) -> tuple[Fraction, Fraction]:
        r = root or self.field._fine_root
        return _interval_eval(self.coords, r.lo, r.hi)

    def sign(self) -> int:
        """Sign of the image under the field's real embedding."""
        if self.is_zero():
            return 0
        if self.is_rational():
            c = self.coords[0]
            return (c > 0) - (c < 0)
        r = self.field._fine_root
        while True:
            lo, hi = _interval_eval(self.coords, r.lo, r.hi)
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            r = r.refine()

    def approximate(self, width: Number) -> tuple[Fraction, Fraction]:
        """Rational enclosure of the embedded value no wider than ``width``."""
        if self.is_rational():
            v = self.coords[0]
            return v, v
        r = self.field._fine_root
        while True:
            lo, hi = _interval_eval(self.coords, r.lo, r.hi)
            if hi - lo <= width:
                return lo, hi
            r = r.refine()

    def floor(self) -> int:
        if self.is_rational():
            c = self.coords[0]
            return c.numerator // c.denominator
        r = self.field._fine_root
        while True:
            lo, hi = _interval_eval(self.coords, r.lo, r.hi)
            f = lo.numerator // lo.denominator
            if hi < f + 1 and lo > f:
                return f
            r = r.refine()

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __float__(self) -> float:
        lo, hi = self.approximate(Fraction(1, 2**60))
        return float((lo + hi) / 2)

    def multiplication_matrix(self) -> list[list[Fraction]]:
        """Row k holds the coordinates of self * alpha^k."""
        rows = []
        cur = self
        g = self.field([0, 1]) if self.field.degree > 1 else None
        for _ in range(self.field.degree):
            rows.append(list(cur.coords))
            if g is not None:
                cur = cur * g
        return rows

    def norm(self) -> Fraction:
        return rational_det(self.multiplication_matrix())

    def to_string(self, symbol: str = "a") -> str:
        return format_polynomial(self.coords, symbol)

    def __str__(self) -> str:
        return self.to_string()

    def __repr__(self) -> str:
        return f"FieldElement({self.to_string()})"


def rational_det(m: Sequence[Sequence[Number]]) -> Fraction:
    a = [[Fraction(x) for x in row] for row in m]
    n = len(a)
    det = Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            det = -det
        det *= a[k][k]
        for i in range(k + 1, n):
            f = a[i][k] / a[k][k]
            if f:
                for j in range(k, n):
                    a[i][j] -= f * a[k][j]
    return det


def decimal_approximation(x: AlgebraicNumber | FieldElement, digits: int) -> tuple[str, Fraction]:
    """Decimal string rounded to ``digits`` places plus a certified error bound."""
    width = Fraction(1, 10**digits)
    if isinstance(x, AlgebraicNumber):
        if x.is_rational():
            lo = hi = x.as_rational()
        else:
            a = x.refined(width)
            lo, hi = a.lo, a.hi
    else:
        lo, hi = x.approximate(width)
    mid = (lo + hi) / 2
    scaled = mid * 10**digits
    rounded = (scaled.numerator * 2 + scaled.denominator) // (2 * scaled.denominator)
    approx = Fraction(rounded, 10**digits)
    bound = (hi - lo) / 2 + abs(mid - approx)
    sign = "-" if rounded < 0 else ""
    whole, frac = divmod(abs(rounded), 10**digits)
    text = f"{sign}{whole}.{frac:0{digits}d}" if digits > 0 else f"{sign}{whole}"
    return text, bound
