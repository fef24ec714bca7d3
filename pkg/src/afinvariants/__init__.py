"""Exact invariants of stationary AF-algebras: Perron-Frobenius data, trace
modules, Handelman triples, Morita queries and question-mark images."""
from .af_core import (
    PFData,
    StationaryAF,
    TraceModule,
    lambda_is_multiplicative,
    pf_eigendata,
    scale_sample,
    stabilize,
    telescope,
    tensor,
    trace_module,
)
from .brauer import QZ, BrauerClass, TorsionSubgroup, brauer_add, brauer_from_generator
from .contfrac import ContinuedFraction, cf_of_quadratic, cf_of_rational, quadratic_cf
from .exact import AlgebraicNumber, FieldElement, IntPolynomial, NumberField, factor_over_Q, multiply
from .handelman import (
    ClassStatus,
    HandelmanTriple,
    IdealClassWitness,
    Order,
    Verdict,
    endomorphism_ring,
    handelman_triple,
    ideal_class_equal,
    morita_equivalent,
)
from .lattice import IntegerMatrix, RationalLattice, char_poly, gl_conjugate, hnf, is_primitive, kronecker
from .minkowski import minkowski_generators, question_mark

__version__ = "0.1.0"
