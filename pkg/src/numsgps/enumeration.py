"""Exhaustive desk-scale enumeration of semigroups and normalized ideals.

Semigroups are walked genus by genus down the standard tree: the children of
S are obtained by removing one minimal generator larger than the Frobenius
number, which reaches every numerical semigroup exactly once.  A slower
subset-filter construction is kept alongside as an independent oracle.
"""

from __future__ import annotations

import itertools

from .errors import CapacityExceeded, NaturalsUnsupported, NotAnIdeal, NotClosed
from .ideals import RelativeIdeal, canonical_ideal, conductor_ideal, setminus_elements
from .semigroup import NumericalSemigroup

__all__ = [
    "enumerate_ideals",
    "enumerate_semigroups",
    "normalized_ideal_candidates",
    "semigroup_counts_by_genus",
    "semigroups_of_genus_bruteforce",
]

GENUS_GUARD = 12  # keeps a full sweep within desk scale


def enumerate_semigroups(max_genus: int, guard: int = GENUS_GUARD):
    """Every numerical semigroup of genus at most max_genus, exactly once,
    ordered by genus and then lexicographically by gap set."""
    if max_genus < 0:
        raise ValueError("max_genus must be non-negative")
    if max_genus > guard:
        raise CapacityExceeded(f"genus bound {max_genus} exceeds the guard {guard}")
    level = [NumericalSemigroup.naturals()]
    yield from level
    for _ in range(max_genus):
        children = []
        for sg in level:
            f = sg.frobenius
            for gen in sg.min_generators:
                if gen > f:
                    children.append(NumericalSemigroup.from_gaps(sg.gaps + (gen,)))
        children.sort(key=lambda sg: sg.gaps)
        yield from children
        level = children


def semigroup_counts_by_genus(max_genus: int) -> list[int]:
    """Number of semigroups at each genus from 0 to max_genus."""
    counts = [0] * (max_genus + 1)
    for sg in enumerate_semigroups(max_genus):
        counts[sg.genus] += 1
    return counts


def semigroups_of_genus_bruteforce(genus: int) -> list[NumericalSemigroup]:
    """Independent oracle: filter every genus-sized gap subset of
    [1, 2*genus - 1] (the Frobenius number never exceeds 2*genus - 1) for
    closure of the complement."""
    if genus == 0:
        return [NumericalSemigroup.naturals()]
    found = []
    for combo in itertools.combinations(range(1, 2 * genus), genus):
        try:
            found.append(NumericalSemigroup.from_gaps(combo))
        except NotClosed:
            continue
    found.sort(key=lambda sg: sg.gaps)
    return found


def normalized_ideal_candidates(base: NumericalSemigroup, max_extra: int = 20):
    """Candidate element sets for normalized ideals: the conductor ray plus
    each subset of the canonical ideal's finite head, ordered by size and
    then by complement.  Not yet filtered for stability."""
    if base.is_naturals:
        raise NaturalsUnsupported("normalized ideal enumeration")
    extras = setminus_elements(canonical_ideal(base), conductor_ideal(base))
    if len(extras) > max_extra:
        raise CapacityExceeded(
            f"{len(extras)} head elements exceed the allowed {max_extra}"
        )
    subsets = [
        combo
        for r in range(len(extras) + 1)
        for combo in itertools.combinations(extras, r)
    ]
    subsets.sort(key=lambda sub: (len(sub), tuple(x for x in extras if x not in sub)))
    return subsets


def build_normalized_ideal(base: NumericalSemigroup, extra_elements) -> RelativeIdeal:
    """The conductor ray plus the given elements, validated as an ideal."""
    chosen = set(extra_elements)
    lo = min(chosen, default=base.conductor)
    return RelativeIdeal.from_predicate(
        base,
        min(lo, base.conductor),
        base.conductor,
        lambda x: x >= base.conductor or x in chosen,
    )


def enumerate_ideals(base: NumericalSemigroup, max_extra: int = 20):
    """Every normalized relative ideal of the semigroup: all stable sets
    between the conductor ray and the canonical ideal."""
    for subset in normalized_ideal_candidates(base, max_extra):
        try:
            yield build_normalized_ideal(base, subset)
        except NotAnIdeal:
            continue
