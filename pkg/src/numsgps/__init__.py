"""Numerical semigroups, relative ideals, and the numerical duplication.

The package computes the classical invariants of numerical semigroups
(Frobenius number, genus, type, pseudo-Frobenius numbers, Apery sets), does
exact arithmetic with relative ideals and their canonical duality, builds
the numerical duplication and n-tuplication with closed-form invariants,
characterizes when a duplication is almost symmetric, and checks all of it
against brute-force oracles over exhaustive desk-scale enumerations.
"""

from .duplication import (
    AdmissibleEntry,
    AlmostSymmetryCheck,
    DuplicationInput,
    almost_symmetric_type,
    construct_prescribed_type,
    duplicate,
    duplication_canonical_membership,
    enumerate_admissible,
    is_almost_symmetric_duplication,
    n_tuplicate,
    predicted_frobenius,
    predicted_genus,
    predicted_type,
    prescribed_type_ideals,
)
from .enumeration import (
    enumerate_ideals,
    enumerate_semigroups,
    semigroup_counts_by_genus,
    semigroups_of_genus_bruteforce,
)
from .errors import (
    BaseMismatch,
    BNotMember,
    BNotOddMember,
    CapacityExceeded,
    EmptyGenerators,
    GcdCondition,
    GcdNotOne,
    IdealNotInS,
    NaturalsUnsupported,
    NotAlmostSymmetric,
    NotAnIdeal,
    NotClosed,
    NotMember,
    NumericalSemigroupError,
    RelaxedConditionFails,
    TypeEven,
    TypeOutOfRange,
)
from .ideals import (
    RelativeIdeal,
    as_ideal,
    canonical_ideal,
    closure_violation,
    conductor_ideal,
    difference,
    dual,
    ideal_generated_by,
    intersect,
    is_canonical,
    is_semigroup_set,
    is_subset,
    maximal_ideal,
    minimal_shift_into,
    n_fold,
    setminus_elements,
    setminus_size,
    sum_ideals,
)
from .semigroup import AperyData, NumericalSemigroup
from .verify import (
    CheckResult,
    OracleInvariants,
    SweepSummary,
    VerificationReport,
    n_tuplication_reports,
    oracle_invariants,
    smallest_odd_members,
    summarize_reports,
    verify_all,
)

__version__ = "0.1.0"

__all__ = [
    "AdmissibleEntry",
    "AlmostSymmetryCheck",
    "AperyData",
    "BaseMismatch",
    "BNotMember",
    "BNotOddMember",
    "CapacityExceeded",
    "CheckResult",
    "DuplicationInput",
    "EmptyGenerators",
    "GcdCondition",
    "GcdNotOne",
    "IdealNotInS",
    "NaturalsUnsupported",
    "NotAlmostSymmetric",
    "NotAnIdeal",
    "NotClosed",
    "NotMember",
    "NumericalSemigroup",
    "NumericalSemigroupError",
    "OracleInvariants",
    "RelativeIdeal",
    "RelaxedConditionFails",
    "SweepSummary",
    "TypeEven",
    "TypeOutOfRange",
    "VerificationReport",
    "almost_symmetric_type",
    "as_ideal",
    "canonical_ideal",
    "closure_violation",
    "conductor_ideal",
    "construct_prescribed_type",
    "difference",
    "dual",
    "duplicate",
    "duplication_canonical_membership",
    "enumerate_admissible",
    "enumerate_ideals",
    "enumerate_semigroups",
    "ideal_generated_by",
    "intersect",
    "is_almost_symmetric_duplication",
    "is_canonical",
    "is_semigroup_set",
    "is_subset",
    "maximal_ideal",
    "minimal_shift_into",
    "n_fold",
    "n_tuplicate",
    "n_tuplication_reports",
    "oracle_invariants",
    "predicted_frobenius",
    "predicted_genus",
    "predicted_type",
    "prescribed_type_ideals",
    "semigroup_counts_by_genus",
    "semigroups_of_genus_bruteforce",
    "setminus_elements",
    "setminus_size",
    "smallest_odd_members",
    "sum_ideals",
    "summarize_reports",
    "verify_all",
]
