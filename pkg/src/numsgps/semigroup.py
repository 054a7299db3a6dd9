"""Numerical semigroups and their classical invariants.

A numerical semigroup is a subset of the non-negative integers containing 0,
closed under addition, with finite complement.  The missing elements are its
gaps, the largest gap is the Frobenius number, and the gap count is the
genus.  A semigroup is stored as a membership table over [0, c], where the
conductor c is the least integer from which every integer onward is a member;
every definition used here stabilizes past the conductor, so all scans are
finite.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import gcd

from .errors import EmptyGenerators, GcdNotOne, NaturalsUnsupported, NotClosed, NotMember

__all__ = ["AperyData", "NumericalSemigroup"]


@dataclass(frozen=True)
class AperyData:
    """Residue-class minima of a semigroup modulo a nonzero member.

    ``elements[i]`` is the least member congruent to i mod ``modulus``;
    ``maximal_flags[i]`` records maximality for the order "w below w' iff
    w' - w is a member".
    """

    modulus: int
    elements: tuple[int, ...]
    maximal_flags: tuple[bool, ...]

    def maximal_elements(self) -> tuple[int, ...]:
        return tuple(w for w, flag in zip(self.elements, self.maximal_flags) if flag)


@dataclass(frozen=True)
class NumericalSemigroup:
    """Immutable numerical semigroup in membership-table normal form."""

    conductor: int
    small_members: tuple[bool, ...]  # membership over [0, conductor]

    def __post_init__(self):
        c = self.conductor
        table = self.small_members
        if c < 0 or len(table) != c + 1:
            raise ValueError("membership table must cover [0, conductor]")
        if not table[0]:
            raise ValueError("0 must be a member")
        if not table[c]:
            raise ValueError("the conductor must be a member")
        if c > 0 and table[c - 1]:
            raise ValueError("conductor - 1 must be a gap")

    # ------------------------------------------------------------------
    # construction

    @classmethod
    def naturals(cls) -> NumericalSemigroup:
        return cls(0, (True,))

    @classmethod
    def _from_table(cls, table) -> NumericalSemigroup:
        """Build from a membership table whose tail (everything at or past
        len(table)) is implicitly inside.  Closure is the caller's burden."""
        table = [bool(v) for v in table]
        last_gap = -1
        for x, member in enumerate(table):
            if not member:
                last_gap = x
        c = last_gap + 1
        return cls(c, tuple(table[:c]) + (True,))

    @classmethod
    def from_generators(cls, gens) -> NumericalSemigroup:
        """Smallest numerical semigroup containing ``gens``.

        Membership is sieved by dynamic programming; the window is grown
        until it shows a run of multiplicity-many consecutive members, which
        certifies everything past the run start.
        """
        gens = sorted({int(g) for g in gens})
        if not gens:
            raise EmptyGenerators("at least one generator is required")
        if gens[0] <= 0:
            raise ValueError("generators must be positive")
        common = 0
        for g in gens:
            common = gcd(common, g)
        if common != 1:
            raise GcdNotOne(gens, common)

        mult = gens[0]
        bound = gens[-1] * mult + gens[-1]
        while True:
            table = bytearray(bound + 1)
            table[0] = 1
            for x in range(gens[0], bound + 1):
                for g in gens:
                    if g <= x and table[x - g]:
                        table[x] = 1
                        break
            run = 0
            start = None
            for x in range(bound + 1):
                run = run + 1 if table[x] else 0
                if run == mult:
                    start = x - mult + 1
                    break
            if start is not None:
                last_gap = -1
                for x in range(start):
                    if not table[x]:
                        last_gap = x
                c = last_gap + 1
                return cls(c, tuple(bool(table[x]) for x in range(c + 1)))
            bound *= 2

    @classmethod
    def from_gaps(cls, gaps) -> NumericalSemigroup:
        """The semigroup whose complement is exactly ``gaps``; rejects gap
        sets whose complement is not closed under addition."""
        gap_set = {int(x) for x in gaps}
        if any(x <= 0 for x in gap_set):
            raise ValueError("gaps must be positive integers")
        if not gap_set:
            return cls.naturals()
        top = max(gap_set)
        for h in sorted(gap_set):
            for a in range(1, h // 2 + 1):
                if a not in gap_set and (h - a) not in gap_set:
                    raise NotClosed(a, h - a)
        c = top + 1
        return cls(c, tuple(x not in gap_set for x in range(c + 1)))

    # ------------------------------------------------------------------
    # membership and basic invariants

    def contains(self, x: int) -> bool:
        if x < 0:
            return False
        if x >= self.conductor:
            return True
        return self.small_members[x]

    __contains__ = contains

    def members_upto(self, hi: int):
        """All members in [0, hi]."""
        return (x for x in range(hi + 1) if self.contains(x))

    @property
    def is_naturals(self) -> bool:
        return self.conductor == 0

    @property
    def frobenius(self) -> int:
        return self.conductor - 1

    @cached_property
    def genus(self) -> int:
        return sum(1 for x in range(self.conductor) if not self.small_members[x])

    @cached_property
    def gaps(self) -> tuple[int, ...]:
        return tuple(x for x in range(self.conductor) if not self.small_members[x])

    @cached_property
    def multiplicity(self) -> int:
        if self.is_naturals:
            return 1
        return next(x for x in range(1, self.conductor + 1) if self.contains(x))

    @cached_property
    def min_generators(self) -> tuple[int, ...]:
        """Members of M that are not sums of two members of M.  Any member at
        or past conductor + multiplicity splits off a copy of the
        multiplicity, so the scan window is provably complete."""
        if self.is_naturals:
            return (1,)
        mult = self.multiplicity
        members = [x for x in range(mult, self.conductor + mult) if self.contains(x)]
        gens = []
        for x in members:
            if not any(self.contains(x - y) for y in members if mult <= y <= x - mult):
                gens.append(x)
        return tuple(gens)

    # ------------------------------------------------------------------
    # the classical invariants

    def pseudo_frobenius(self) -> tuple[int, ...]:
        """Gaps x such that x plus any nonzero member lands in the semigroup."""
        if self.is_naturals:
            raise NaturalsUnsupported("pseudo_frobenius")
        nonzero = [s for s in range(1, self.conductor + 1) if self.contains(s)]
        return tuple(
            x for x in self.gaps if all(self.contains(x + s) for s in nonzero)
        )

    def type(self) -> int:
        return len(self.pseudo_frobenius())

    def second_type_gaps(self) -> tuple[int, ...]:
        """Gaps y whose reflection frobenius - y is also a gap."""
        if self.is_naturals:
            raise NaturalsUnsupported("second_type_gaps")
        f = self.frobenius
        return tuple(y for y in self.gaps if not self.contains(f - y))

    def is_symmetric(self) -> bool:
        """True iff frobenius + 1 = 2 * genus; cross-checked against the
        reflection criterion on [0, frobenius]."""
        f = self.frobenius
        by_count = f + 1 == 2 * self.genus
        by_reflection = all(
            self.contains(z) != self.contains(f - z) for z in range(f + 1)
        )
        assert by_count == by_reflection
        return by_count

    def is_almost_symmetric(self) -> bool:
        """True iff every second-type gap is pseudo-Frobenius; cross-checked
        against canonical-ideal stability (K + M inside M), both routes
        computed from the membership table alone."""
        if self.is_naturals:
            raise NaturalsUnsupported("is_almost_symmetric")
        f = self.frobenius
        by_gaps = set(self.second_type_gaps()) | {f} == set(self.pseudo_frobenius())

        canonical_small = [x for x in range(f + 1) if not self.contains(f - x)]
        nonzero = [s for s in range(1, self.conductor + 1) if self.contains(s)]
        by_duality = all(self.contains(k + s) for k in canonical_small for s in nonzero)
        assert by_gaps == by_duality
        return by_gaps

    def is_pseudo_symmetric(self) -> bool:
        return self.is_almost_symmetric() and self.type() == 2

    # ------------------------------------------------------------------
    # Apery structure

    def apery_set(self, n: int) -> AperyData:
        """Least member in each residue class mod n, with maximality flags."""
        if n <= 0 or not self.contains(n):
            raise NotMember(n)
        elements = []
        for i in range(n):
            s = i
            while not self.contains(s):
                s += n
            elements.append(s)
        flags = []
        for i, w in enumerate(elements):
            above = any(j != i and self.contains(elements[j] - w) for j in range(n))
            flags.append(not above)
        return AperyData(n, tuple(elements), tuple(flags))

    def apery_pairwise_condition(self, n: int) -> bool:
        """No two maximal residue-class minima (repetition allowed) sum to a
        maximal one shifted by n."""
        maxima = self.apery_set(n).maximal_elements()
        return all(
            wi + wj != wk + n for wi in maxima for wj in maxima for wk in maxima
        )

    # ------------------------------------------------------------------
    # quotients

    def quotient(self, n: int) -> NumericalSemigroup:
        """The semigroup of x with n*x a member."""
        if n < 1:
            raise ValueError("quotient divisor must be at least 1")
        bound = -(-self.conductor // n)
        return NumericalSemigroup._from_table(
            [self.contains(n * x) for x in range(bound + 1)]
        )

    # ------------------------------------------------------------------

    def __str__(self) -> str:
        prefix = ",".join(
            str(x) for x in range(self.conductor + 1) if self.contains(x)
        )
        return "{" + prefix + ",→}"

    def __repr__(self) -> str:
        return f"NumericalSemigroup(gaps={list(self.gaps)})"
