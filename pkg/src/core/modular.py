"""
Arithmetic behind A(p^2) >= p - 1: genus and ramification of X0(ell) -> X0(1),
supersingular j-invariants over F_{p^2}, and the points-to-genus ratio table.
"""
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Dict, List, Sequence

from sympy import isprime

from ..models.config import POINT_BUDGET
from ..models.entities import FibreBound, IharaRow, X0Data
from ..models.exceptions import (
    BadCharacteristic,
    BudgetExceeded,
    CongruenceViolation,
    EllTooSmall,
    EqualPrimes,
    InconsistentRamification,
    NotPrime,
)
from ..utils.logging_utils import get_logger
from .agcode import riemann_hurwitz_genus
from .elliptic import curve_from_j, is_supersingular
from .field import FieldElement, field_build

logger = get_logger(__name__)

MAX_SCAN_PRIME = 100

# floor(p/12) correction per p mod 12
_SUPERSINGULAR_OFFSET = {1: 0, 5: 1, 7: 1, 11: 2}


def _require_level(ell: int) -> None:
    if not isprime(ell):
        raise NotPrime(f"level {ell} is not prime")
    if ell <= 3:
        raise EllTooSmall(f"level must be a prime > 3, got {ell}")


def _require_characteristic(p: int) -> None:
    if not isprime(p):
        raise NotPrime(f"characteristic {p} is not prime")
    if p < 5:
        raise BadCharacteristic(f"characteristic must be >= 5, got {p}")


def genus_x0(ell: int) -> int:
    """Genus of X0(ell) for a prime ell > 3, by ell mod 12."""
    _require_level(ell)
    residue = ell % 12
    if residue == 1:
        return (ell - 1) // 12 - 1
    if residue == 5:
        return (ell - 5) // 12
    if residue == 7:
        return (ell - 7) // 12
    return (ell + 1) // 12


def x0_ramification(ell: int) -> X0Data:
    """
    Ramification of the degree ell + 1 map X0(ell) -> X0(1).

    Above j = 1728 the order-4 automorphism fixes two lines of E[ell] when
    ell = 1 mod 4 (two unramified points), otherwise none; the remaining lines
    pair up into index-2 points. Above j = 0 the same holds with order 6,
    ell mod 3 and index 3. The two cusps carry indices (ell, 1).
    """
    _require_level(ell)
    degree = ell + 1
    if ell % 4 == 1:
        nu2, unramified_i = (ell - 1) // 2, 2
    else:
        nu2, unramified_i = (ell + 1) // 2, 0
    if ell % 3 == 1:
        nu3, unramified_rho = (ell - 1) // 3, 2
    else:
        nu3, unramified_rho = (ell + 1) // 3, 0

    genus = riemann_hurwitz_genus(degree, 0, [2] * nu2 + [3] * nu3 + [ell])
    expected = genus_x0(ell)
    if genus != expected:
        raise InconsistentRamification(
            f"Riemann-Hurwitz gives genus {genus} for X0({ell}), closed form gives {expected}"
        )
    return X0Data(
        ell=ell,
        genus=genus,
        degree=degree,
        nu2=nu2,
        nu3=nu3,
        unramified_over_i=unramified_i,
        unramified_over_rho=unramified_rho,
        cusp_indices=(ell, 1),
    )


def expected_supersingular_count(p: int) -> int:
    _require_characteristic(p)
    return p // 12 + _SUPERSINGULAR_OFFSET[p % 12]


def _scan_chunk(p: int, start: int, stop: int) -> List[int]:
    field = field_build(p, 2)
    return [
        code for code in range(start, stop)
        if is_supersingular(curve_from_j(field, field.from_int(code)), budget=POINT_BUDGET)
    ]


def supersingular_j_invariants(p: int, workers: int = 1) -> List[FieldElement]:
    """
    Every j in F_{p^2} whose curves are supersingular, in enumeration order.

    Raises:
        NotPrime / BadCharacteristic: unless p is a prime >= 5
        BudgetExceeded: for p > 100
    """
    _require_characteristic(p)
    if p > MAX_SCAN_PRIME:
        raise BudgetExceeded("supersingular scan prime", p, MAX_SCAN_PRIME)
    field = field_build(p, 2)
    q = field.q
    if workers <= 1:
        codes = _scan_chunk(p, 0, q)
    else:
        bounds = [q * i // workers for i in range(workers + 1)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = pool.map(_scan_chunk, [p] * workers, bounds[:-1], bounds[1:])
            codes = sorted(code for chunk in chunks for code in chunk)
    logger.debug(f"p={p}: {len(codes)} supersingular j-invariants among {q}")
    return [field.from_int(code) for code in codes]


def count_supersingular_classes(p: int, workers: int = 1) -> int:
    """Number of supersingular j-invariants, found by brute force over F_{p^2}."""
    return len(supersingular_j_invariants(p, workers))


def special_j_pattern(p: int, workers: int = 1) -> Dict[str, bool]:
    """Which of j = 0 and j = 1728 turn up supersingular in the scan."""
    field = field_build(p, 2)
    found = set(supersingular_j_invariants(p, workers))
    return {"j0": field.zero() in found, "j1728": field.element(1728) in found}


def ss_lower_bound(p: int, ell: int) -> Fraction:
    """(ell + 1)(p - 1)/12, exact."""
    _require_characteristic(p)
    _require_level(ell)
    if p == ell:
        raise EqualPrimes(f"level and characteristic are both {p}")
    return Fraction((ell + 1) * (p - 1), 12)


def _require_eleven_mod_twelve(ell: int) -> None:
    if ell % 12 != 11:
        raise CongruenceViolation(f"level {ell} is not 11 mod 12")


def fibre_lower_bound(p: int, ell: int, workers: int = 1) -> FibreBound:
    """
    Supersingular F_{p^2}-points of X0(ell) counted over each supersingular j:
    ell + 1 above a generic j, (ell + 1)/3 above j = 0, (ell + 1)/2 above j = 1728.
    """
    ss_lower_bound(p, ell)
    _require_eleven_mod_twelve(ell)
    field = field_build(p, 2)
    js = set(supersingular_j_invariants(p, workers))
    j0 = field.zero() in js
    j1728 = field.element(1728) in js
    generic = len(js) - int(j0) - int(j1728)
    total = Fraction(generic * (ell + 1))
    if j0:
        total += Fraction(ell + 1, 3)
    if j1728:
        total += Fraction(ell + 1, 2)
    return FibreBound(
        p=p, ell=ell, generic_classes=generic,
        j0_supersingular=j0, j1728_supersingular=j1728, total=total,
    )


def ihara_table(p: int, ells: Sequence[int]) -> List[IharaRow]:
    """
    Rows (ell, g_ell, (ell + 1)(p - 1)/12, ratio) for levels ell = 11 mod 12.

    Every ratio is exactly p - 1.
    """
    rows = []
    for ell in ells:
        bound = ss_lower_bound(p, ell)
        _require_eleven_mod_twelve(ell)
        genus = genus_x0(ell)
        rows.append(IharaRow(
            p=p, ell=ell, genus=genus, lower_bound=bound,
            ratio=bound / genus, upper_ceiling=p + 1,
        ))
    return rows


def levels_eleven_mod_twelve(count: int, exclude: int = 0) -> List[int]:
    """The first `count` primes ell = 11 mod 12, skipping `exclude`."""
    levels, ell = [], 11
    while len(levels) < count:
        if isprime(ell) and ell != exclude:
            levels.append(ell)
        ell += 12
    return levels
