"""
Evaluation (AG) codes from one-point Riemann-Roch spaces on P^1 and elliptic
curves, plus the genus, Weil and Riemann-Hurwitz calculators.

On P^1, L(m P_inf) is spanned by 1, x, ..., x^m. On an elliptic curve x and y
have pole orders 2 and 3 at O_E, so L(m O_E) is spanned by the monomials
x^i y^j with 2i + 3j <= m and j <= 1.
"""
import math
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple, Union

from ..models.config import CODE_BUDGET
from ..models.entities import AGCodeParams, CodeParams, RRBasis
from ..utils.logging_utils import get_logger
from ..models.exceptions import (
    DegreeTooLarge,
    DomainError,
    DuplicatePoint,
    InconsistentRamification,
    PointAtInfinityInEvalSet,
    PointNotOnCurve,
)
from .elliptic import Affine, Infinity, WeierstrassCurve, affine_points
from .field import FieldElement, FieldSpec, enumerate_field
from .linear_code import LinearCode, min_distance_bruteforce

logger = get_logger(__name__)


@dataclass(frozen=True)
class ProjectiveLine:
    field: FieldSpec


Carrier = Union[ProjectiveLine, WeierstrassCurve]
EvalPoint = Union[FieldElement, Affine]


def carrier_genus(carrier: Carrier) -> int:
    return 0 if isinstance(carrier, ProjectiveLine) else 1


@dataclass(frozen=True)
class OnePointDivisor:
    """m P_inf on P^1, or m O_E on an elliptic curve."""
    carrier: Carrier
    m: int

    def __post_init__(self):
        if self.m < 0:
            raise DomainError(f"divisor multiplicity must be non-negative, got {self.m}")

    @property
    def degree(self) -> int:
        return self.m

    @property
    def genus(self) -> int:
        return carrier_genus(self.carrier)

    @property
    def field(self) -> FieldSpec:
        return self.carrier.field


@dataclass(frozen=True)
class EvalConfig:
    """Ordered, pairwise distinct affine evaluation points."""
    points: Tuple[EvalPoint, ...]

    def __post_init__(self):
        if any(isinstance(P, Infinity) for P in self.points):
            raise PointAtInfinityInEvalSet("the divisor point cannot be evaluated")
        if len(set(self.points)) != len(self.points):
            raise DuplicatePoint("evaluation points must be distinct")

    @property
    def n(self) -> int:
        return len(self.points)


def rr_basis(divisor: OnePointDivisor) -> RRBasis:
    """Monomial basis of L(G), ordered by pole order."""
    m = divisor.m
    if divisor.genus == 0:
        return RRBasis(monomials=tuple((i, 0) for i in range(m + 1)), pole_orders=tuple(range(m + 1)))
    monomials = sorted(
        ((i, j) for j in (0, 1) for i in range((m - 3 * j) // 2 + 1) if 2 * i + 3 * j <= m),
        key=lambda ij: 2 * ij[0] + 3 * ij[1],
    )
    return RRBasis(
        monomials=tuple(monomials),
        pole_orders=tuple(2 * i + 3 * j for i, j in monomials),
    )


def default_eval_config(divisor: OnePointDivisor) -> EvalConfig:
    """Every affine rational point of the carrier, x then y in field order."""
    if isinstance(divisor.carrier, ProjectiveLine):
        return EvalConfig(points=tuple(enumerate_field(divisor.field)))
    return EvalConfig(points=tuple(affine_points(divisor.carrier)))


def _check_points(divisor: OnePointDivisor, config: EvalConfig) -> None:
    carrier = divisor.carrier
    for P in config.points:
        if isinstance(carrier, ProjectiveLine):
            if not isinstance(P, FieldElement) or P.spec != carrier.field:
                raise PointNotOnCurve(f"{P} is not an affine point of P^1 over {carrier.field.describe()}")
        elif not isinstance(P, Affine) or not carrier.contains(P):
            raise PointNotOnCurve(f"{P} is not on {carrier}")


def _evaluate(monomial: Tuple[int, int], P: EvalPoint) -> FieldElement:
    i, j = monomial
    if isinstance(P, FieldElement):
        return P ** i
    return P.x ** i * P.y ** j


def ag_code(divisor: OnePointDivisor, config: Optional[EvalConfig] = None) -> LinearCode:
    """
    C_L(X, P, G): basis functions of L(G) evaluated at the points.

    Raises:
        DegreeTooLarge: if deg G >= n
        DuplicatePoint / PointAtInfinityInEvalSet: from the evaluation config
        PointNotOnCurve: if a point is not on the carrier
    """
    config = config or default_eval_config(divisor)
    if divisor.degree >= config.n:
        raise DegreeTooLarge(f"deg G = {divisor.degree} must be smaller than n = {config.n}")
    _check_points(divisor, config)
    basis = rr_basis(divisor)
    rows = [tuple(_evaluate(mono, P) for P in config.points) for mono in basis.monomials]
    logger.debug(f"AG code: n={config.n}, dim L(G)={basis.dim}, g={divisor.genus}")
    return LinearCode.from_rows(divisor.field, rows)


def ag_params(
    divisor: OnePointDivisor,
    config: Optional[EvalConfig] = None,
    budget: int = CODE_BUDGET,
    exhaustive: bool = True,
) -> AGCodeParams:
    """
    k by rank; d exact by enumeration when q^k fits the budget, else n - deg G.
    """
    code = ag_code(divisor, config)
    if exhaustive and code.q ** code.k <= budget:
        d, d_exact = min_distance_bruteforce(code, budget), True
    else:
        d, d_exact = code.n - divisor.degree, False
    params = CodeParams(n=code.n, k=code.k, d=d, q=code.q, d_exact=d_exact)
    return AGCodeParams(params=params, genus=divisor.genus, degree=divisor.degree)


def singleton_defect(params: CodeParams) -> int:
    """n + 1 - (k + d); at most g for evaluation codes with exact d."""
    return params.singleton_defect


def elliptic_code_table(
    curve: WeierstrassCurve, m_values: Sequence[int], budget: int = CODE_BUDGET
) -> List[AGCodeParams]:
    config = EvalConfig(points=tuple(affine_points(curve)))
    return [ag_params(OnePointDivisor(curve, m), config, budget) for m in m_values]


def genus_smooth_plane(d: int) -> int:
    if d < 1:
        raise DomainError(f"plane curve degree must be positive, got {d}")
    return (d - 1) * (d - 2) // 2


def weil_bound(q: int, g: int) -> int:
    """floor(q + 1 + 2g sqrt(q)), exact in integers."""
    if g < 0:
        raise DomainError(f"genus must be non-negative, got {g}")
    if q < 2:
        raise DomainError(f"field order must be at least 2, got {q}")
    return q + 1 + math.isqrt(4 * g * g * q)


def riemann_hurwitz_genus(degree: int, g_base: int, ram: Sequence[int]) -> int:
    """
    Solve 2g_X - 2 = deg * (2g_Y - 2) + sum(e - 1) for g_X.

    Raises:
        InconsistentRamification: bad inputs, odd right-hand side or negative genus
    """
    if degree < 1 or g_base < 0:
        raise InconsistentRamification(f"need degree >= 1 and g_base >= 0, got {degree}, {g_base}")
    bad = [e for e in ram if e < 2 or e > degree]
    if bad:
        raise InconsistentRamification(f"ramification indices {bad} outside [2, {degree}]")
    rhs = degree * (2 * g_base - 2) + sum(e - 1 for e in ram)
    if rhs % 2 or rhs < -2:
        raise InconsistentRamification(f"2g - 2 = {rhs} gives no valid genus")
    return (rhs + 2) // 2
