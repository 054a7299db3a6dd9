"""Relative ideals of a numerical semigroup and their duality calculus.

A relative ideal E of S is a set of integers with S + E inside E, bounded
below, and containing every integer past its own Frobenius number f(E) (the
largest integer missing from E).  It is stored as its minimum plus a
membership window over [min, f(E)+1]; the window is tight, so equal ideals
have equal representations.

Every operation reduces the infinite definition to a finite scan over a
window that provably contains all the undecided values.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import (
    BaseMismatch,
    EmptyGenerators,
    NaturalsUnsupported,
    NotAnIdeal,
)
from .semigroup import NumericalSemigroup

__all__ = [
    "RelativeIdeal",
    "as_ideal",
    "canonical_ideal",
    "closure_violation",
    "conductor_ideal",
    "difference",
    "dual",
    "ideal_generated_by",
    "intersect",
    "is_canonical",
    "is_semigroup_set",
    "is_subset",
    "maximal_ideal",
    "minimal_shift_into",
    "n_fold",
    "setminus_elements",
    "setminus_size",
    "sum_ideals",
]


@dataclass(frozen=True)
class RelativeIdeal:
    base: NumericalSemigroup
    min_elt: int
    window: tuple[bool, ...]  # membership over [min_elt, frobenius + 1]

    def __post_init__(self):
        w = self.window
        if not w or not w[0] or not w[-1]:
            raise NotAnIdeal("window must run from the minimum to frobenius + 1")
        if len(w) >= 2 and w[-2]:
            raise NotAnIdeal("the ideal frobenius must be a non-member")
        top = self.min_elt + len(w) - 1
        for e in self.elements():
            for s in range(1, top - e + 1):
                if self.base.contains(s) and not self.contains(e + s):
                    raise NotAnIdeal(f"{e} + {s} = {e + s} escapes the set")

    # ------------------------------------------------------------------

    @classmethod
    def from_predicate(cls, base, lo, hi, pred) -> RelativeIdeal:
        """Build from a membership predicate that is exact on [lo, hi],
        false below lo and true above hi."""
        flags = [bool(pred(x)) for x in range(lo, hi + 1)]
        try:
            first = flags.index(True)
        except ValueError:
            raise NotAnIdeal("no members found in the scan window")
        last_gap = None
        for i in range(len(flags) - 1, first, -1):
            if not flags[i]:
                last_gap = lo + i
                break
        if last_gap is None:
            return cls(base, lo + first, (True,))
        if last_gap + 1 > hi:
            raise ValueError("scan window too small: top entry is a non-member")
        return cls(base, lo + first, tuple(flags[first : last_gap - lo + 2]))

    # ------------------------------------------------------------------

    @property
    def frobenius(self) -> int:
        """Largest integer not in the ideal (min - 1 for an upward ray)."""
        return self.min_elt + len(self.window) - 2

    @property
    def genus(self) -> int:
        """Non-members between the minimum and the ideal frobenius."""
        return sum(1 for v in self.window[:-1] if not v)

    def contains(self, x: int) -> bool:
        if x < self.min_elt:
            return False
        i = x - self.min_elt
        if i >= len(self.window):
            return True
        return self.window[i]

    __contains__ = contains

    def elements(self) -> list[int]:
        """Members inside the stored window, i.e. up to frobenius + 1."""
        return [self.min_elt + i for i, v in enumerate(self.window) if v]

    def elements_upto(self, hi: int):
        """All members in [min_elt, hi]."""
        for i, v in enumerate(self.window):
            x = self.min_elt + i
            if x > hi:
                return
            if v:
                yield x
        yield from range(self.min_elt + len(self.window), hi + 1)

    # ------------------------------------------------------------------

    def translate(self, x: int) -> RelativeIdeal:
        return RelativeIdeal(self.base, self.min_elt + x, self.window)

    def normalized(self) -> RelativeIdeal:
        """The unique translate whose frobenius matches the base semigroup's."""
        return self.translate(self.base.frobenius - self.frobenius)

    def is_numerical_semigroup(self) -> bool:
        return closure_violation(self) is None

    def __add__(self, other):
        if isinstance(other, int):
            return self.translate(other)
        return sum_ideals(self, other)

    def __sub__(self, other):
        if isinstance(other, int):
            return self.translate(-other)
        return difference(self, other)

    def __le__(self, other) -> bool:
        return is_subset(self, other)

    def __str__(self) -> str:
        prefix = ",".join(str(x) for x in self.elements())
        return "{" + prefix + ",→}"

    def __repr__(self) -> str:
        return f"RelativeIdeal(min={self.min_elt}, elements={self.elements()})"


# ----------------------------------------------------------------------
# construction from a semigroup


def _require_same_base(e: RelativeIdeal, f: RelativeIdeal):
    if e.base != f.base:
        raise BaseMismatch("ideals live over different semigroups")


def ideal_generated_by(base: NumericalSemigroup, elems) -> RelativeIdeal:
    """Smallest relative ideal containing ``elems``: the union of the
    translates elem + S."""
    elems = sorted({int(t) for t in elems})
    if not elems:
        raise EmptyGenerators("an ideal needs at least one generator")
    lo = elems[0]
    hi = elems[0] + base.conductor
    return RelativeIdeal.from_predicate(
        base, lo, hi, lambda x: any(base.contains(x - t) for t in elems)
    )


@lru_cache(maxsize=None)
def as_ideal(base: NumericalSemigroup) -> RelativeIdeal:
    """The semigroup itself, viewed as a relative ideal over itself."""
    return RelativeIdeal(base, 0, base.small_members)


@lru_cache(maxsize=None)
def maximal_ideal(base: NumericalSemigroup) -> RelativeIdeal:
    """The nonzero members."""
    if base.is_naturals:
        raise NaturalsUnsupported("maximal_ideal")
    return RelativeIdeal.from_predicate(
        base,
        base.multiplicity,
        base.conductor,
        lambda x: x >= 1 and base.contains(x),
    )


def conductor_ideal(base: NumericalSemigroup) -> RelativeIdeal:
    """Everything from the conductor onward."""
    return RelativeIdeal(base, base.conductor, (True,))


@lru_cache(maxsize=None)
def canonical_ideal(base: NumericalSemigroup) -> RelativeIdeal:
    """The standard canonical ideal: x belongs iff frobenius - x is a gap."""
    f = base.frobenius
    return RelativeIdeal.from_predicate(
        base, 0, f + 1, lambda x: not base.contains(f - x)
    )


# ----------------------------------------------------------------------
# arithmetic


def sum_ideals(e: RelativeIdeal, f: RelativeIdeal) -> RelativeIdeal:
    """Element-wise sumset."""
    _require_same_base(e, f)
    lo = e.min_elt + f.min_elt
    hi = min(e.frobenius + f.min_elt, f.frobenius + e.min_elt) + 1

    def pred(x):
        return any(e.contains(x - t) for t in f.elements_upto(x - e.min_elt))

    return RelativeIdeal.from_predicate(e.base, lo, hi, pred)


def n_fold(e: RelativeIdeal, n: int) -> RelativeIdeal:
    """n-fold sumset, with the 0-fold sum being the base semigroup."""
    if n < 0:
        raise ValueError("fold count must be non-negative")
    acc = as_ideal(e.base)
    for _ in range(n):
        acc = sum_ideals(acc, e)
    return acc


def difference(e: RelativeIdeal, f: RelativeIdeal) -> RelativeIdeal:
    """The ideal of z with z + F inside E.

    Below min(E) - min(F) the shift by min(F) already escapes E; above
    frobenius(E) - min(F) every shifted element clears frobenius(E); in
    between the definition is checked verbatim.
    """
    _require_same_base(e, f)
    lo = e.min_elt - f.min_elt
    hi = e.frobenius - f.min_elt + 1

    def pred(z):
        return all(e.contains(z + u) for u in f.elements_upto(e.frobenius - z))

    return RelativeIdeal.from_predicate(e.base, lo, hi, pred)


def intersect(e: RelativeIdeal, f: RelativeIdeal) -> RelativeIdeal:
    _require_same_base(e, f)
    lo = max(e.min_elt, f.min_elt)
    hi = max(e.frobenius, f.frobenius) + 1
    return RelativeIdeal.from_predicate(
        e.base, lo, hi, lambda x: e.contains(x) and f.contains(x)
    )


def dual(e: RelativeIdeal) -> RelativeIdeal:
    """The canonical dual K(S) - E, computed by the reflection rule:
    x belongs iff frobenius(S) - x is outside E."""
    base = e.base
    f = base.frobenius
    result = RelativeIdeal.from_predicate(
        base,
        f - e.frobenius,
        f - e.min_elt + 1,
        lambda x: not e.contains(f - x),
    )
    if __debug__:
        # the reflection rule must agree with the raw ideal difference
        assert result == difference(canonical_ideal(base), e)
    return result


def is_canonical(e: RelativeIdeal) -> bool:
    return e.normalized() == canonical_ideal(e.base)


# ----------------------------------------------------------------------
# comparisons and counts


def is_subset(e: RelativeIdeal, f: RelativeIdeal) -> bool:
    _require_same_base(e, f)
    hi = max(e.frobenius, f.frobenius) + 1
    return all(f.contains(x) for x in e.elements_upto(hi))


def setminus_elements(e: RelativeIdeal, f: RelativeIdeal) -> list[int]:
    """Members of E missing from F; finite since F owns everything past its
    frobenius."""
    return [x for x in e.elements_upto(f.frobenius) if not f.contains(x)]


def setminus_size(e: RelativeIdeal, f: RelativeIdeal) -> int:
    return len(setminus_elements(e, f))


def closure_violation(e: RelativeIdeal):
    """A witness that E is not a numerical semigroup (None if it is one):
    a negative minimum, a missing zero, or a pair summing out of the set."""
    if e.min_elt < 0:
        return (e.min_elt,)
    if not e.contains(0):
        return (0,)
    small = [x for x in e.elements() if x <= e.frobenius]
    for i, a in enumerate(small):
        for b in small[i:]:
            if a + b <= e.frobenius and not e.contains(a + b):
                return (a, b)
    return None


def is_semigroup_set(e: RelativeIdeal) -> bool:
    return e.is_numerical_semigroup()


def minimal_shift_into(e: RelativeIdeal) -> int:
    """Smallest non-negative z such that E + z lands inside the base
    semigroup; z = conductor - min(E) always works, so the scan is bounded."""
    base = e.base
    whole = as_ideal(base)
    for z in range(base.conductor - min(e.min_elt, 0) + 1):
        if is_subset(e.translate(z), whole):
            return z
    raise AssertionError("unreachable: the conductor shift always lands inside")
