"""The numerical duplication of a semigroup along one of its ideals.

Doubling the semigroup gives the even part; doubling an ideal E and shifting
by an odd member b gives the odd part.  The result is again a numerical
semigroup whose halving quotient recovers the original, and its Frobenius
number, genus and type have closed forms in terms of S, E and b alone.  The
almost symmetric duplications are exactly those whose normalized ideal sits
between the dual of M - M and the canonical ideal with a dual that is itself
a numerical semigroup; their type is odd and can be prescribed.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd

from .errors import (
    BaseMismatch,
    BNotMember,
    BNotOddMember,
    CapacityExceeded,
    GcdCondition,
    IdealNotInS,
    NaturalsUnsupported,
    NotAlmostSymmetric,
    RelaxedConditionFails,
    TypeEven,
    TypeOutOfRange,
)
from .ideals import (
    RelativeIdeal,
    as_ideal,
    canonical_ideal,
    closure_violation,
    difference,
    dual,
    intersect,
    is_subset,
    maximal_ideal,
    minimal_shift_into,
    setminus_elements,
    setminus_size,
    sum_ideals,
)
from .semigroup import NumericalSemigroup

__all__ = [
    "AdmissibleEntry",
    "AlmostSymmetryCheck",
    "DuplicationInput",
    "almost_symmetric_type",
    "construct_prescribed_type",
    "duplicate",
    "duplication_canonical_membership",
    "enumerate_admissible",
    "is_almost_symmetric_duplication",
    "n_tuplicate",
    "predicted_frobenius",
    "predicted_genus",
    "predicted_type",
    "prescribed_type_ideals",
]

SUBSET_GUARD_BITS = 20  # refuse admissible enumerations past 2**20 subsets


@dataclass(frozen=True)
class DuplicationInput:
    """A validated duplication instance.

    Strict mode requires the ideal inside the semigroup; relaxed mode only
    requires b + E + E inside it (enough for the result to be closed, but
    outside the scope of the invariant formulas).
    """

    base: NumericalSemigroup
    ideal: RelativeIdeal
    b: int
    mode: str = "strict"

    def __post_init__(self):
        if self.ideal.base != self.base:
            raise BaseMismatch("ideal does not live over the duplicated semigroup")
        if self.b % 2 == 0 or not self.base.contains(self.b):
            raise BNotOddMember(self.b)
        if self.mode == "strict":
            escaped = setminus_elements(self.ideal, as_ideal(self.base))
            if escaped:
                raise IdealNotInS(escaped[0])
        elif self.mode == "relaxed":
            shifted = sum_ideals(self.ideal, self.ideal).translate(self.b)
            escaped = setminus_elements(shifted, as_ideal(self.base))
            if escaped:
                raise RelaxedConditionFails(escaped[0])
        else:
            raise ValueError(f"unknown mode {self.mode!r}")


def duplicate(inp: DuplicationInput) -> NumericalSemigroup:
    """Expand the duplication: even members are doubled members of S, odd
    members are doubled members of E shifted by b.  The result is rebuilt
    through the gap constructor, which re-validates closure."""
    base, ideal, b = inp.base, inp.ideal, inp.b

    def member(x):
        if x % 2 == 0:
            return base.contains(x // 2)
        return ideal.contains((x - b) // 2)

    hi = max(2 * ideal.frobenius + b, 2 * base.frobenius, 0)
    return NumericalSemigroup.from_gaps(
        x for x in range(1, hi + 1) if not member(x)
    )


def predicted_frobenius(inp: DuplicationInput) -> int:
    return 2 * inp.ideal.frobenius + inp.b


def predicted_genus(inp: DuplicationInput) -> int:
    return inp.base.genus + inp.ideal.genus + inp.ideal.min_elt + (inp.b - 1) // 2


def _require_ideal_in(base: NumericalSemigroup, ideal: RelativeIdeal):
    if ideal.base != base:
        raise BaseMismatch("ideal does not live over this semigroup")
    escaped = setminus_elements(ideal, as_ideal(base))
    if escaped:
        raise IdealNotInS(escaped[0])


def predicted_type(base: NumericalSemigroup, ideal: RelativeIdeal) -> int:
    """Closed form for the duplication type; independent of the odd offset."""
    _require_ideal_in(base, ideal)
    maxi = maximal_ideal(base)
    stable = difference(maxi, maxi)
    even_part = setminus_size(
        intersect(stable, difference(ideal, ideal)), as_ideal(base)
    )
    odd_part = setminus_size(difference(ideal, maxi), ideal)
    return even_part + odd_part


def duplication_canonical_membership(inp: DuplicationInput, z: int) -> bool:
    """Membership of z in the canonical ideal of the duplication, decided
    without expanding it: reflect z through the duplication frobenius and
    test the half against S (even case) or E (odd case)."""
    a = 2 * inp.ideal.frobenius + inp.b - z
    if a % 2 == 0:
        return not inp.base.contains(a // 2)
    return not inp.ideal.contains((a - inp.b) // 2)


# ----------------------------------------------------------------------
# almost symmetry


@dataclass(frozen=True)
class AlmostSymmetryCheck:
    """Outcome of the almost-symmetry characterization, with the normalized
    ideal, its canonical dual, and a witness when a clause fails."""

    holds: bool
    normalized: RelativeIdeal
    dual_ideal: RelativeIdeal
    failed_clause: str | None = None
    witness: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.holds


def is_almost_symmetric_duplication(
    base: NumericalSemigroup, ideal: RelativeIdeal
) -> AlmostSymmetryCheck:
    """Decide whether every duplication along this ideal is almost
    symmetric: the normalized ideal must contain the dual of M - M, sit
    inside the canonical ideal, and have a dual closed under addition."""
    _require_ideal_in(base, ideal)
    maxi = maximal_ideal(base)
    lower = dual(difference(maxi, maxi))
    norm = ideal.normalized()
    norm_dual = dual(norm)

    missing = setminus_elements(lower, norm)
    if missing:
        return AlmostSymmetryCheck(False, norm, norm_dual, "lower-bound", (missing[0],))
    escaped = setminus_elements(norm, canonical_ideal(base))
    if escaped:
        return AlmostSymmetryCheck(False, norm, norm_dual, "upper-bound", (escaped[0],))
    witness = closure_violation(norm_dual)
    if witness is not None:
        return AlmostSymmetryCheck(False, norm, norm_dual, "dual-not-closed", witness)
    return AlmostSymmetryCheck(True, norm, norm_dual)


def almost_symmetric_type(base: NumericalSemigroup, ideal: RelativeIdeal) -> int:
    """Type of an almost symmetric duplication.  Three equivalent counts are
    evaluated and must agree; the result is odd."""
    check = is_almost_symmetric_duplication(base, ideal)
    if not check:
        raise NotAlmostSymmetric(check.failed_clause, check.witness)
    maxi = maximal_ideal(base)
    via_ideal = 2 * setminus_size(difference(ideal, maxi), ideal) - 1
    via_dual = 2 * setminus_size(check.dual_ideal, as_ideal(base)) + 1
    via_gap_count = 2 * setminus_size(canonical_ideal(base), check.normalized) + 1
    assert via_ideal == via_dual == via_gap_count
    return via_dual


# ----------------------------------------------------------------------
# enumeration of admissible ideals


@dataclass(frozen=True)
class AdmissibleEntry:
    """One normalized ideal between the dual of M - M and the canonical
    ideal, with its dual, whether the dual is a numerical semigroup, and the
    duplication type when it is."""

    normalized: RelativeIdeal
    dual_ideal: RelativeIdeal
    is_semigroup: bool
    duplication_type: int | None


def _ordered_subsets(items):
    """Subsets ordered by size, then by their complement: the empty set
    first, the full set last, and within a size the subset missing the
    smallest elements first."""
    items = sorted(items)
    subsets = [
        combo
        for r in range(len(items) + 1)
        for combo in itertools.combinations(items, r)
    ]
    subsets.sort(key=lambda sub: (len(sub), tuple(x for x in items if x not in sub)))
    return subsets


def enumerate_admissible(base: NumericalSemigroup) -> list[AdmissibleEntry]:
    """All normalized ideals between the dual of M - M and the canonical
    ideal: the lower bound plus a stability-filtered subset of the finite
    difference."""
    if base.is_naturals:
        raise NaturalsUnsupported("enumerate_admissible")
    canon = canonical_ideal(base)
    maxi = maximal_ideal(base)
    lower = dual(difference(maxi, maxi))
    extras = setminus_elements(canon, lower)
    if len(extras) > SUBSET_GUARD_BITS:
        raise CapacityExceeded(
            f"{2 ** len(extras)} candidate subsets exceed the enumeration guard"
        )
    entries = []
    for subset in _ordered_subsets(extras):
        chosen = set(subset)
        lo = min(chosen, default=lower.min_elt)
        try:
            norm = RelativeIdeal.from_predicate(
                base,
                min(lo, lower.min_elt),
                base.frobenius + 1,
                lambda x: lower.contains(x) or x in chosen,
            )
        except NotAnIdeal:
            continue  # subset not stable under the semigroup action
        norm_dual = dual(norm)
        closed = norm_dual.is_numerical_semigroup()
        typ = 2 * setminus_size(canon, norm) + 1 if closed else None
        entries.append(AdmissibleEntry(norm, norm_dual, closed, typ))
    return entries


# ----------------------------------------------------------------------
# prescribed type


def _prescribed_normalized(base: NumericalSemigroup, x: int) -> RelativeIdeal:
    if x % 2 == 0:
        raise TypeEven(x)
    t = base.type()
    if not 1 <= x <= 2 * t + 1:
        raise TypeOutOfRange(x, 2 * t + 1)
    m = (x - 1) // 2
    pf = base.pseudo_frobenius()
    biggest = set(pf[-m:]) if m else set()
    # adjoining the m biggest pseudo-Frobenius numbers keeps the set closed,
    # because a sum of two of them is either a member or a bigger one
    enlarged = RelativeIdeal.from_predicate(
        base,
        0,
        base.frobenius + 1,
        lambda y: base.contains(y) or y in biggest,
    )
    return dual(enlarged)


def prescribed_type_ideals(base: NumericalSemigroup, x: int):
    """Unbounded stream of distinct ideals inside the semigroup whose
    duplications are almost symmetric of type exactly x: every valid shift
    of one fixed normalized ideal."""
    norm = _prescribed_normalized(base, x)
    whole = as_ideal(base)
    z = 0
    while True:
        shifted = norm.translate(z)
        if is_subset(shifted, whole):
            yield shifted
        z += 1


def construct_prescribed_type(
    base: NumericalSemigroup, x: int, shift: int | None = None
) -> RelativeIdeal:
    """One ideal realizing duplication type x; the minimal in-semigroup
    shift unless a caller shift is supplied."""
    norm = _prescribed_normalized(base, x)
    if shift is None:
        shift = minimal_shift_into(norm)
    result = norm.translate(shift)
    escaped = setminus_elements(result, as_ideal(base))
    if escaped:
        raise IdealNotInS(escaped[0])
    return result


# ----------------------------------------------------------------------
# n-tuplication


def n_tuplicate(
    base: NumericalSemigroup, ideal: RelativeIdeal, b: int, n: int
) -> NumericalSemigroup:
    """Scale the semigroup and the fold powers of the ideal by n, shifting
    the k-th power by k*b.  Coprimality of b and n spreads the parts over
    all residues, so the union is cofinite; closure is re-validated by the
    gap constructor."""
    if n < 2:
        raise ValueError("the scaling factor must be at least 2")
    if b <= 0 or not base.contains(b):
        raise BNotMember(b)
    if gcd(b, n) != 1:
        raise GcdCondition(b, n)
    _require_ideal_in(base, ideal)

    powers = [as_ideal(base)]
    for _ in range(1, n):
        powers.append(sum_ideals(powers[-1], ideal) if len(powers) > 1 else ideal)
    part_of_residue = {(k * b) % n: k for k in range(n)}

    def member(x):
        k = part_of_residue[x % n]
        return powers[k].contains((x - k * b) // n)

    hi = max(max(n * powers[k].frobenius + k * b for k in range(n)), 0)
    return NumericalSemigroup.from_gaps(
        x for x in range(1, hi + 1) if not member(x)
    )
