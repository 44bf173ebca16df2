class ToolkitError(Exception):
    """Base exception for the TVZ toolkit."""
    pass


class ConfigurationError(ToolkitError):
    """Configuration related errors."""
    pass


class UsageError(ToolkitError):
    """Command-line usage errors (bad or missing flags)."""
    pass


class DomainError(ToolkitError):
    """A mathematical precondition was violated."""
    pass


# field

class NonPrime(DomainError):
    """Characteristic is not a prime number."""
    pass


class NoIrreducibleFound(DomainError):
    """No monic irreducible polynomial of the requested degree was found."""
    pass


class BudgetExceeded(DomainError):
    """An enumeration would exceed its configured size budget."""

    def __init__(self, what: str, size: int, limit: int):
        self.what = what
        self.size = size
        self.limit = limit
        super().__init__(f"{what}: size {size} exceeds budget {limit}")


class DivisionByZero(DomainError, ZeroDivisionError):
    """Inversion of the zero element."""
    pass


class SpecMismatch(DomainError):
    """Operands belong to different fields."""
    pass


class EvenCharUnsupported(DomainError):
    """Operation requires odd characteristic."""
    pass


# code

class LengthMismatch(DomainError):
    """Words of different lengths (or fields) were compared."""
    pass


class ZeroDimensional(DomainError):
    """Operation needs a code of dimension at least one."""
    pass


class RankDeficient(DomainError):
    """Generator rows are linearly dependent."""
    pass


class DuplicateEvaluationPoint(DomainError):
    """Evaluation points must be pairwise distinct."""
    pass


class KOutOfRange(DomainError):
    """Dimension outside 1 <= k <= n <= q."""
    pass


class DNotExact(DomainError):
    """Check requires an exact minimum distance."""
    pass


# bounds

class BoundDomainError(DomainError, ValueError):
    """Argument outside the domain of an asymptotic bound."""
    pass


class TVZUndefined(DomainError):
    """The TVZ line is undefined or vacuous for this q."""
    pass


# elliptic

class SingularCurve(DomainError):
    """4A^3 + 27B^2 vanishes."""
    pass


class BadCharacteristic(DomainError):
    """Characteristic 2 and 3 are not supported."""
    pass


class PointNotOnCurve(DomainError):
    """Point does not satisfy the curve equation."""
    pass


class SingularInput(DomainError):
    """2-isogeny data with b = 0 or a^2 = 4b."""
    pass


# agcode

class DegreeTooLarge(DomainError):
    """deg G must be smaller than the code length."""
    pass


class DuplicatePoint(DomainError):
    """Evaluation points must be distinct."""
    pass


class PointAtInfinityInEvalSet(DomainError):
    """The divisor point cannot be an evaluation point."""
    pass


class InconsistentRamification(DomainError):
    """Riemann-Hurwitz data does not produce a valid genus."""
    pass


# modular

class NotPrime(DomainError):
    """Argument must be prime."""
    pass


class EllTooSmall(DomainError):
    """The level must be a prime larger than 3."""
    pass


class EqualPrimes(DomainError):
    """The level must differ from the characteristic."""
    pass


class CongruenceViolation(DomainError):
    """The level is not congruent to 11 mod 12."""
    pass
