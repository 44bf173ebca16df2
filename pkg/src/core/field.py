"""
Exact arithmetic in small finite fields GF(p^m).

Elements are dense coefficient vectors of polynomials modulo a fixed monic
irreducible of degree m. The modulus is the lexicographically smallest monic
irreducible (coefficients compared low-to-high), so every field spec, and every
serialized element, is reproducible without external tables.
"""
import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
from sympy import isprime
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_irreducible_p

from ..models.config import FIELD_BUDGET
from ..utils.logging_utils import get_logger
from ..models.exceptions import (
    BudgetExceeded,
    DivisionByZero,
    EvenCharUnsupported,
    NoIrreducibleFound,
    NonPrime,
    SpecMismatch,
)

logger = get_logger(__name__)

MAX_EXTENSION_DEGREE = 4
SQRT_SCAN_LIMIT = 2 ** 12

Coercible = Union["FieldElement", int]


@dataclass(frozen=True)
class FieldSpec:
    """GF(p^m) given by a monic degree-m modulus over F_p (coefficients low-to-high)."""
    p: int
    m: int
    modulus: Tuple[int, ...]

    @property
    def q(self) -> int:
        return self.p ** self.m

    def order(self) -> int:
        return self.q

    def zero(self) -> "FieldElement":
        return FieldElement(self, (0,) * self.m)

    def one(self) -> "FieldElement":
        return FieldElement(self, (1,) + (0,) * (self.m - 1))

    def element(self, value: Union[int, Sequence[int], "FieldElement"]) -> "FieldElement":
        """
        Build an element of this field.

        Args:
            value: an integer (embedded through the prime subfield), a coefficient
                sequence of length at most m (low-to-high), or an element of this field

        Returns:
            Canonical FieldElement
        """
        if isinstance(value, FieldElement):
            if value.spec != self:
                raise SpecMismatch(f"element of {value.spec.describe()} used in {self.describe()}")
            return value
        if isinstance(value, (int, np.integer)):
            return FieldElement(self, (int(value) % self.p,) + (0,) * (self.m - 1))
        coeffs = [int(c) % self.p for c in value]
        if len(coeffs) > self.m:
            raise SpecMismatch(f"{len(coeffs)} coefficients given for a degree-{self.m} field")
        coeffs.extend([0] * (self.m - len(coeffs)))
        return FieldElement(self, tuple(coeffs))

    def from_int(self, code: int) -> "FieldElement":
        """Element at position `code` of the enumeration order."""
        coeffs = []
        for _ in range(self.m):
            code, digit = divmod(code, self.p)
            coeffs.append(digit)
        return FieldElement(self, tuple(coeffs))

    def describe(self) -> str:
        return f"GF({self.p}^{self.m})"

    def serialize(self) -> str:
        return f"q={self.p}^{self.m};mod=" + ",".join(str(c) for c in self.modulus)

    def is_canonical(self) -> bool:
        """True when the modulus is the one field_build picks for (p, m)."""
        return _build_cached(self.p, self.m).modulus == self.modulus


@dataclass(frozen=True)
class FieldElement:
    """Element of GF(p^m); coefficients always reduced mod p."""
    spec: FieldSpec
    coeffs: Tuple[int, ...]

    def _coerce(self, other: Coercible) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.spec != self.spec:
                raise SpecMismatch(
                    f"cannot combine {self.spec.describe()} with {other.spec.describe()}"
                )
            return other
        if isinstance(other, (int, np.integer)):
            return self.spec.element(int(other))
        return NotImplemented

    def __add__(self, other: Coercible) -> "FieldElement":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.spec.p
        return FieldElement(self.spec, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __sub__(self, other: Coercible) -> "FieldElement":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.spec.p
        return FieldElement(self.spec, tuple((a - b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other: Coercible) -> "FieldElement":
        return (-self) + other

    def __neg__(self) -> "FieldElement":
        p = self.spec.p
        return FieldElement(self.spec, tuple((-a) % p for a in self.coeffs))

    def __mul__(self, other: Coercible) -> "FieldElement":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.spec, _poly_mulmod(self.spec, self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __truediv__(self, other: Coercible) -> "FieldElement":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inv()

    def __rtruediv__(self, other: Coercible) -> "FieldElement":
        return self.spec.element(other) * self.inv()

    def __pow__(self, exponent: int) -> "FieldElement":
        return power(self, exponent)

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def inv(self) -> "FieldElement":
        if self.is_zero():
            raise DivisionByZero(f"inverse of 0 in {self.spec.describe()}")
        if self.spec.m == 1:
            return FieldElement(self.spec, (pow(self.coeffs[0], -1, self.spec.p),))
        return power(self, self.spec.q - 2)

    def to_int(self) -> int:
        """Position of this element in the enumeration order."""
        code = 0
        for c in reversed(self.coeffs):
            code = code * self.spec.p + c
        return code

    def is_prime_subfield(self) -> bool:
        return not any(self.coeffs[1:])

    def serialize(self) -> str:
        return ",".join(str(c) for c in self.coeffs)

    def __str__(self) -> str:
        return self.serialize()

    def __repr__(self) -> str:
        return f"FieldElement({self.serialize()} in {self.spec.describe()})"


def _poly_mulmod(spec: FieldSpec, a: Tuple[int, ...], b: Tuple[int, ...]) -> Tuple[int, ...]:
    p, m = spec.p, spec.m
    if m == 1:
        return ((a[0] * b[0]) % p,)
    prod = [0] * (2 * m - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] += ai * bj
    modulus = spec.modulus
    for deg in range(2 * m - 2, m - 1, -1):
        c = prod[deg] % p
        if c:
            shift = deg - m
            for i in range(m):
                prod[shift + i] -= c * modulus[i]
        prod[deg] = 0
    return tuple(c % p for c in prod[:m])


def _is_irreducible(p: int, coeffs_low_to_high: Sequence[int]) -> bool:
    return bool(gf_irreducible_p([ZZ(c) for c in reversed(coeffs_low_to_high)], p, ZZ))


def field_build(p: int, m: int = 1, budget: int = FIELD_BUDGET) -> FieldSpec:
    """
    Build GF(p^m) with the lexicographically smallest monic irreducible modulus.

    Args:
        p: prime characteristic
        m: extension degree, 1 <= m <= 4
        budget: maximum field order allowed

    Returns:
        FieldSpec

    Raises:
        NonPrime: if p is not prime
        BudgetExceeded: if p^m exceeds the budget or m > 4
        NoIrreducibleFound: if no irreducible polynomial of degree m exists (m < 1)
    """
    if not isinstance(p, int) or p < 2 or not isprime(p):
        raise NonPrime(f"characteristic {p} is not prime")
    if m < 1:
        raise NoIrreducibleFound(f"extension degree must be at least 1, got {m}")
    if m > MAX_EXTENSION_DEGREE:
        raise BudgetExceeded("extension degree", m, MAX_EXTENSION_DEGREE)
    if p ** m > budget:
        raise BudgetExceeded("field order", p ** m, budget)
    return _build_cached(p, m)


@lru_cache(maxsize=None)
def _build_cached(p: int, m: int) -> FieldSpec:
    for low in itertools.product(range(p), repeat=m):
        candidate = tuple(low) + (1,)
        if _is_irreducible(p, candidate):
            logger.debug(f"GF({p}^{m}) modulus {candidate}")
            return FieldSpec(p=p, m=m, modulus=candidate)
    raise NoIrreducibleFound(f"no monic irreducible of degree {m} over F_{p}")


def parse_field_spec(text: str, budget: int = FIELD_BUDGET) -> FieldSpec:
    """Inverse of FieldSpec.serialize; also accepts a bare order such as '49'."""
    text = text.strip()
    try:
        if ";" not in text:
            return field_from_order(int(text.removeprefix("q=")), budget=budget)
        head, _, mod = text.partition(";")
        base, _, exp = head.removeprefix("q=").partition("^")
        p, m = int(base), int(exp or 1)
        modulus = tuple(int(c) for c in mod.removeprefix("mod=").split(","))
    except ValueError:
        raise SpecMismatch(f"malformed field spec {text!r}")
    if not isprime(p):
        raise NonPrime(f"characteristic {p} is not prime")
    if len(modulus) != m + 1 or modulus[-1] != 1:
        raise NoIrreducibleFound(f"modulus {modulus} is not monic of degree {m}")
    if not _is_irreducible(p, modulus):
        raise NoIrreducibleFound(f"modulus {modulus} is reducible over F_{p}")
    if p ** m > budget:
        raise BudgetExceeded("field order", p ** m, budget)
    return FieldSpec(p=p, m=m, modulus=modulus)


def parse_element(spec: FieldSpec, text: str) -> FieldElement:
    try:
        coeffs = [int(c) for c in text.strip().split(",")]
    except ValueError:
        raise SpecMismatch(f"malformed element {text!r}")
    return spec.element(coeffs)


def field_from_order(q: int, budget: int = FIELD_BUDGET) -> FieldSpec:
    """Build the field of order q = p^m."""
    if q < 2:
        raise NonPrime(f"{q} is not a prime power")
    if q > budget:
        raise BudgetExceeded("field order", q, budget)
    for p in range(2, q + 1):
        if q % p == 0:
            break
    m, rest = 0, q
    while rest % p == 0:
        rest //= p
        m += 1
    if rest != 1:
        raise NonPrime(f"{q} is not a prime power")
    return field_build(p, m, budget=budget)


def power(a: FieldElement, exponent: int) -> FieldElement:
    """Square-and-multiply exponentiation; negative exponents go through inv."""
    if exponent < 0:
        return power(a.inv(), -exponent)
    result = a.spec.one()
    base = a
    while exponent:
        if exponent & 1:
            result = result * base
        base = base * base
        exponent >>= 1
    return result


def frobenius(a: FieldElement) -> FieldElement:
    return power(a, a.spec.p)


def enumerate_field(spec: FieldSpec, budget: int = FIELD_BUDGET) -> List[FieldElement]:
    """
    All elements of the field, coefficients counted low-to-high (0, 1, ..., p-1, x, 1+x, ...).

    Raises:
        BudgetExceeded: if the field order exceeds the budget
    """
    if spec.q > budget:
        raise BudgetExceeded("field enumeration", spec.q, budget)
    return list(_elements(spec))


@lru_cache(maxsize=64)
def _elements(spec: FieldSpec) -> Tuple[FieldElement, ...]:
    return tuple(spec.from_int(code) for code in range(spec.q))


def _require_odd(spec: FieldSpec) -> None:
    if spec.p == 2:
        raise EvenCharUnsupported(f"square roots in {spec.describe()} are not supported")


def is_square(a: FieldElement) -> bool:
    """Euler's criterion: a = 0 or a^((q-1)/2) = 1."""
    _require_odd(a.spec)
    if a.is_zero():
        return True
    return power(a, (a.spec.q - 1) // 2) == a.spec.one()


def sqrt(a: FieldElement) -> Optional[FieldElement]:
    """A square root of a, or None when a is a non-square."""
    spec = a.spec
    _require_odd(spec)
    if spec.q <= SQRT_SCAN_LIMIT:
        roots = square_roots(spec).get(a.to_int())
        return roots[0] if roots else None
    if not is_square(a):
        return None
    return _tonelli_shanks(a)


def _tonelli_shanks(a: FieldElement) -> FieldElement:
    spec = a.spec
    if a.is_zero():
        return a
    one = spec.one()
    t, s = spec.q - 1, 0
    while t % 2 == 0:
        t //= 2
        s += 1
    z = next(
        spec.from_int(code) for code in range(2, spec.q)
        if power(spec.from_int(code), (spec.q - 1) // 2) != one
    )
    c = power(z, t)
    x = power(a, (t + 1) // 2)
    b = power(a, t)
    while b != one:
        i, b2 = 0, b
        while b2 != one:
            b2 = b2 * b2
            i += 1
        g = power(c, 2 ** (s - i - 1))
        x = x * g
        c = g * g
        b = b * c
        s = i
    return x


@lru_cache(maxsize=64)
def square_roots(spec: FieldSpec) -> Dict[int, Tuple[FieldElement, ...]]:
    """Map element code -> its square roots, in enumeration order of the roots."""
    _require_odd(spec)
    table: Dict[int, List[FieldElement]] = {}
    for y in _elements(spec):
        table.setdefault((y * y).to_int(), []).append(y)
    return {code: tuple(roots) for code, roots in table.items()}


# Vectorized helpers: elements as rows of coefficients, codes as base-p integers.

@lru_cache(maxsize=64)
def coefficient_array(spec: FieldSpec) -> np.ndarray:
    """(q, m) array whose row i holds the coefficients of element i."""
    codes = np.arange(spec.q, dtype=np.int64)[:, None]
    weights = spec.p ** np.arange(spec.m, dtype=np.int64)
    table = (codes // weights) % spec.p
    table.setflags(write=False)
    return table


def codes_of(spec: FieldSpec, coeffs: np.ndarray) -> np.ndarray:
    """Element codes of a (..., m) coefficient array."""
    weights = spec.p ** np.arange(spec.m, dtype=np.int64)
    return (coeffs % spec.p) @ weights


def multiplication_matrix(a: FieldElement) -> np.ndarray:
    """m x m matrix M over F_p with coeffs(a*x) = M @ coeffs(x)."""
    spec = a.spec
    columns = []
    basis = spec.one()
    x = spec.element([0, 1]) if spec.m > 1 else spec.one()
    for _ in range(spec.m):
        columns.append((a * basis).coeffs)
        basis = basis * x
    return np.array(columns, dtype=np.int64).T


@lru_cache(maxsize=64)
def square_character(spec: FieldSpec) -> np.ndarray:
    """Quadratic character indexed by element code: 0 at zero, 1 on squares, -1 otherwise."""
    _require_odd(spec)
    chi = np.full(spec.q, -1, dtype=np.int64)
    chi[list(square_roots(spec).keys())] = 1
    chi[0] = 0
    chi.setflags(write=False)
    return chi
