"""Exact arithmetic around the quadratic form a² + ab + b².

Construction and verification of coprime positive solutions of
a² + ab + b² = pⁿ (Eisenstein powers, a coupled recurrence, and an
elementary mod-7 ascent), the two-family parametrization of
x² + xy + y² = z², and integer-distance circle embeddings over Q(√3)
with exact Ptolemy verification and SVG output.
"""

from .errors import (
    ConstructionFailed,
    Degenerate,
    EisenError,
    InvalidParams,
    InvariantViolation,
    NonDivisible,
    NoRepresentation,
    NotConcyclic,
    NotRepresentable,
)
from .ring import EisensteinInt, form_value
from .solvers import (
    FormPair,
    Method,
    PositivePair,
    SolutionPair,
    ascend,
    base_solution,
    brute_force_solutions,
    corollary_solutions,
    descent_step,
    eisenstein_solution,
    normalize_positive,
    recurrence_solution,
    second_order_check,
    solution_table,
)
from .triples import (
    CoverageReport,
    Origin,
    ParamPair,
    Triple,
    brute_force_triples,
    enumerate_triples,
    m_triple,
    n_triple,
    verify_parametrization,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "EisenError",
    "NoRepresentation",
    "InvariantViolation",
    "Degenerate",
    "InvalidParams",
    "NonDivisible",
    "NotRepresentable",
    "ConstructionFailed",
    "NotConcyclic",
    "EisensteinInt",
    "form_value",
    "Method",
    "SolutionPair",
    "PositivePair",
    "FormPair",
    "base_solution",
    "eisenstein_solution",
    "recurrence_solution",
    "solution_table",
    "second_order_check",
    "normalize_positive",
    "descent_step",
    "ascend",
    "corollary_solutions",
    "brute_force_solutions",
    "Origin",
    "ParamPair",
    "Triple",
    "CoverageReport",
    "m_triple",
    "n_triple",
    "enumerate_triples",
    "brute_force_triples",
    "verify_parametrization",
]
