from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Tuple

from .exceptions import DomainError


@dataclass(frozen=True)
class CodeParams:
    """Parameters [n, k, d]_q of a linear code; d is exact or a lower bound."""
    n: int
    k: int
    d: int
    q: int
    d_exact: bool = True

    def __post_init__(self):
        if not 1 <= self.d <= self.n:
            raise DomainError(f"minimum distance {self.d} outside [1, {self.n}]")
        if not 0 <= self.k <= self.n:
            raise DomainError(f"dimension {self.k} outside [0, {self.n}]")

    @property
    def rate(self) -> Fraction:
        return Fraction(self.k, self.n)

    @property
    def relative_distance(self) -> Fraction:
        return Fraction(self.d, self.n)

    @property
    def singleton_defect(self) -> int:
        """n + 1 - (k + d); non-negative for every real code with exact d."""
        return self.n + 1 - self.k - self.d

    def describe(self) -> str:
        relation = "=" if self.d_exact else ">="
        return f"[{self.n}, {self.k}, d {relation} {self.d}]_{self.q}"


@dataclass(frozen=True)
class ChannelSpec:
    """q-ary symmetric channel with symbol error probability p_err."""
    q: int
    p_err: float
    seed: int

    def __post_init__(self):
        if self.q < 2:
            raise DomainError(f"alphabet size must be at least 2, got {self.q}")
        if not 0.0 <= self.p_err <= 1.0 - 1.0 / self.q + 1e-12:
            raise DomainError(f"p_err={self.p_err} outside [0, 1 - 1/{self.q}]")


@dataclass(frozen=True)
class BoundPoint:
    """One row of the (delta, R) landscape; all rates clamped to [0, 1]."""
    delta: float
    r_singleton: float
    r_plotkin: float
    r_gv: float
    r_tvz: float
    gv_defined: bool = True


@dataclass(frozen=True)
class CrossoverReport:
    """Where the TVZ line beats the GV curve for one q."""
    q: int
    beats: bool
    interval: Optional[Tuple[float, float]]
    max_gap: float
    argmax_delta: float
    tvz_intercept: Fraction
    ihara_lower: int
    ihara_upper: int


@dataclass(frozen=True)
class GroupStructure:
    """E(F_q) isomorphic to Z/n1 x Z/n2 with n1 | n2."""
    n1: int
    n2: int

    @property
    def order(self) -> int:
        return self.n1 * self.n2


@dataclass(frozen=True)
class RRBasis:
    """Monomial basis x^i y^j of a one-point Riemann-Roch space (j = 0 on P^1)."""
    monomials: Tuple[Tuple[int, int], ...]
    pole_orders: Tuple[int, ...] = field(default=())

    @property
    def dim(self) -> int:
        return len(self.monomials)


@dataclass(frozen=True)
class AGCodeParams:
    """Parameters of an evaluation code together with its guaranteed bounds."""
    params: CodeParams
    genus: int
    degree: int

    @property
    def k_bound(self) -> int:
        return self.degree + 1 - self.genus

    @property
    def d_bound(self) -> int:
        return self.params.n - self.degree


@dataclass(frozen=True)
class X0Data:
    """Ramification profile of X0(ell) -> X0(1)."""
    ell: int
    genus: int
    degree: int
    nu2: int
    nu3: int
    unramified_over_i: int
    unramified_over_rho: int
    cusp_indices: Tuple[int, int]


@dataclass(frozen=True)
class IharaRow:
    """One row of the genus / supersingular-point ratio table."""
    p: int
    ell: int
    genus: int
    lower_bound: Fraction
    ratio: Fraction
    upper_ceiling: int


@dataclass(frozen=True)
class FibreBound:
    """Supersingular points of X0(ell) over F_{p^2}, counted fibre by fibre."""
    p: int
    ell: int
    generic_classes: int
    j0_supersingular: bool
    j1728_supersingular: bool
    total: Fraction
