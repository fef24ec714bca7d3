"""Minkowski's question-mark function and the torsion group it attaches to
the scale of a stationary AF-algebra.

    ?([0; a1, a2, ...]) = sum_k (-1)^(k+1) * 2^(1 - (a1 + ... + ak))

Rationals give finite sums (dyadic values). Eventually periodic expansions
give a geometric tail that is summed in closed form, so quadratic
irrationals map to exact non-dyadic rationals.
"""
from __future__ import annotations

from fractions import Fraction

from .af_core import PFData, StationaryAF, pf_eigendata, scale_sample
from .brauer import QZ, TorsionSubgroup
from .contfrac import ContinuedFraction, cf_of_quadratic, cf_of_rational, quadratic_surd
from .errors import DegreeUnsupported, OutOfDomain
from .exact import FieldElement


def question_mark(cf: ContinuedFraction) -> Fraction:
    if cf.integer_part == 1 and not cf.preperiod and not cf.period:
        return Fraction(1)
    if cf.integer_part != 0:
        raise OutOfDomain(f"{cf} is outside [0, 1]")
    total = Fraction(0)
    k = s = 0
    for a in cf.preperiod:
        k += 1
        s += a
        total += (-1) ** (k + 1) * Fraction(2) ** (1 - s)
    if cf.period:
        # an even-length block keeps the alternating signs aligned
        block = cf.period if len(cf.period) % 2 == 0 else cf.period * 2
        block_sum = Fraction(0)
        t = 0
        for j, a in enumerate(block, 1):
            t += a
            block_sum += (-1) ** (k + j + 1) * Fraction(2) ** (1 - s - t)
        total += block_sum / (1 - Fraction(1, 2**t))
    return total


def continued_fraction_of(x: FieldElement) -> ContinuedFraction:
    """Expansion of a scale value: rational, or quadratic irrational in (0, 1)."""
    if x.is_rational():
        return cf_of_rational(x.as_rational())
    return cf_of_quadratic(*quadratic_surd(x))


def minkowski_generators(af: StationaryAF, bound: int, non_dyadic_only: bool = False,
                         pf: PFData | None = None) -> tuple[tuple[QZ, ...], TorsionSubgroup]:
    """Question-mark images (mod 1) of the sampled scale and the subgroup of
    Q/Z they generate."""
    pf = pf or pf_eigendata(af.matrix)
    if pf.field_degree > 2:
        raise DegreeUnsupported("exact question-mark images need a field of degree <= 2")
    sample = scale_sample(af, pf, bound)
    images = {QZ(question_mark(continued_fraction_of(x))) for x in sample.elements}
    if non_dyadic_only:
        images = {y for y in images if not y.is_dyadic()}
    images = tuple(sorted(images))
    return images, TorsionSubgroup.generated_by(images)
