"""Exception types raised by the package."""


class NumericalSemigroupError(Exception):
    """Base class for every domain error raised by this package."""


class GcdNotOne(NumericalSemigroupError):
    """Generators with gcd > 1 would leave an infinite complement."""

    def __init__(self, gens, common):
        super().__init__(f"gcd of generators {sorted(gens)} is {common}, not 1")
        self.gcd = common


class NotClosed(NumericalSemigroupError):
    """A candidate member set that is not closed under addition."""

    def __init__(self, a, b):
        super().__init__(f"not closed under addition: {a} + {b} = {a + b} is missing")
        self.witness = (a, b)


class NaturalsUnsupported(NumericalSemigroupError):
    """Operation whose defining set is empty or convention-dependent when
    the semigroup is all of the naturals."""

    def __init__(self, operation):
        super().__init__(f"{operation} is not defined here for the full set of naturals")


class NotMember(NumericalSemigroupError):
    """An element that was required to lie in the semigroup does not."""

    def __init__(self, value):
        super().__init__(f"{value} is not a nonzero member of the semigroup")
        self.value = value


class EmptyGenerators(NumericalSemigroupError):
    """An ideal needs at least one generator."""


class BaseMismatch(NumericalSemigroupError):
    """Two relative ideals over different semigroups cannot be combined."""


class NotAnIdeal(NumericalSemigroupError):
    """A candidate set that is not stable under adding semigroup elements."""


class BNotOddMember(NumericalSemigroupError):
    """The duplication offset must be an odd member of the semigroup."""

    def __init__(self, b):
        super().__init__(f"offset {b} must be an odd member of the semigroup")
        self.b = b


class BNotMember(NumericalSemigroupError):
    """The tuplication offset must be a positive member of the semigroup."""

    def __init__(self, b):
        super().__init__(f"offset {b} must be a positive member of the semigroup")
        self.b = b


class GcdCondition(NumericalSemigroupError):
    """The tuplication offset must be coprime to the scaling factor."""

    def __init__(self, b, n):
        super().__init__(f"offset {b} must be coprime to {n}")


class IdealNotInS(NumericalSemigroupError):
    """Strict duplication requires the ideal to be contained in the semigroup."""

    def __init__(self, witness=None):
        detail = f" (element {witness} escapes)" if witness is not None else ""
        super().__init__(f"ideal is not contained in the semigroup{detail}")
        self.witness = witness


class RelaxedConditionFails(NumericalSemigroupError):
    """Relaxed duplication requires b + E + E inside the semigroup."""

    def __init__(self, witness=None):
        detail = f" (element {witness} escapes)" if witness is not None else ""
        super().__init__(f"b + E + E is not contained in the semigroup{detail}")
        self.witness = witness


class NotAlmostSymmetric(NumericalSemigroupError):
    """The duplication is not almost symmetric, so the odd-type formulas do not apply."""

    def __init__(self, clause, witness):
        super().__init__(f"duplication is not almost symmetric: {clause} fails at {witness}")
        self.clause = clause
        self.witness = witness


class TypeOutOfRange(NumericalSemigroupError):
    """Requested type outside the achievable odd range."""

    def __init__(self, x, upper):
        super().__init__(f"type {x} is outside the achievable range [1, {upper}]")


class TypeEven(NumericalSemigroupError):
    """An almost symmetric duplication always has odd type."""

    def __init__(self, x):
        super().__init__(f"type {x} is even; an almost symmetric duplication has odd type")


class CapacityExceeded(NumericalSemigroupError):
    """An enumeration would exceed the configured desk-scale bounds."""
