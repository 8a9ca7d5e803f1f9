"""Exact local algebra toolkit for algebroid curves: weighted initial
forms, intersection multiplicities, value semigroups and irreducibility
certificates over Q, F_p and simple extensions."""

from .decide import (
    Certificate,
    DecisionReport,
    assert_preconditions,
    decide_irreducible,
    value_semigroup,
    verify_certificate,
)
from .errors import (
    AlgebroidError,
    AllInfinite,
    CertificateSearchFailed,
    ContextViolation,
    DivisionByZero,
    FieldMismatch,
    InfinitePivot,
    InfiniteWeight,
    NonRadicalSuspected,
    NotPrimitive,
    NotPrime,
    ParseError,
    SolverLimitation,
    TruncationExhausted,
    UnequalBase,
    UnitIdeal,
    WrongDimension,
    ZeroPoly,
)
from .groebner import (
    IdealHandle,
    buchberger,
    contains_monomial,
    eliminate,
    ideal_membership,
    krull_dimension,
    radical_membership,
)
from .localalg import base_weights, initial_ideal, intersection_number
from .parametric import (
    ExceptionalValue,
    ParametricOrder,
    Verdict,
    choose_pivot,
    free_basis,
    mult_matrix,
    parametric_intersection,
    parametric_test,
)
from .polyring import INF, Poly, RingCtx, in_w, ord_w, parse_poly
from .sagbi import (
    Parametrization,
    TruncSeries,
    local_reduce,
    sagbi_check,
    sagbi_complete,
)
from .scalars import GF, QQ, FieldSpec, Scalar, univariate_roots
from .semigroups import (
    SemigroupSpec,
    conductor,
    gcd_weights,
    membership,
    prim_generators,
)

__all__ = [
    "AlgebroidError",
    "AllInfinite",
    "Certificate",
    "CertificateSearchFailed",
    "ContextViolation",
    "DecisionReport",
    "DivisionByZero",
    "ExceptionalValue",
    "FieldMismatch",
    "FieldSpec",
    "GF",
    "IdealHandle",
    "INF",
    "InfinitePivot",
    "InfiniteWeight",
    "NonRadicalSuspected",
    "NotPrimitive",
    "NotPrime",
    "ParametricOrder",
    "Parametrization",
    "ParseError",
    "Poly",
    "QQ",
    "RingCtx",
    "Scalar",
    "SemigroupSpec",
    "SolverLimitation",
    "TruncSeries",
    "TruncationExhausted",
    "UnequalBase",
    "UnitIdeal",
    "Verdict",
    "WrongDimension",
    "ZeroPoly",
    "assert_preconditions",
    "base_weights",
    "buchberger",
    "choose_pivot",
    "conductor",
    "contains_monomial",
    "decide_irreducible",
    "eliminate",
    "free_basis",
    "gcd_weights",
    "ideal_membership",
    "in_w",
    "initial_ideal",
    "intersection_number",
    "krull_dimension",
    "local_reduce",
    "membership",
    "mult_matrix",
    "ord_w",
    "parametric_intersection",
    "parametric_test",
    "parse_poly",
    "prim_generators",
    "radical_membership",
    "sagbi_check",
    "sagbi_complete",
    "univariate_roots",
    "value_semigroup",
    "verify_certificate",
]
