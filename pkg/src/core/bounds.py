"""Asymptotic (delta, R) landscape: entropy, GV curve, Singleton/Plotkin/TVZ lines."""
import math
from fractions import Fraction
from typing import List, Optional, Tuple

import numpy as np
from sympy import isprime

from ..models.entities import BoundPoint, CrossoverReport
from ..utils.logging_utils import get_logger
from ..models.exceptions import BoundDomainError, TVZUndefined

logger = get_logger(__name__)

GRID_POINTS = 10_000
TOLERANCE = 1e-9


def entropy_q(q: int, x: float) -> float:
    """
    q-ary entropy x*log_q(q-1) - x*log_q(x) - (1-x)*log_q(1-x).

    Raises:
        BoundDomainError: if q < 2 or x is outside [0, 1]
    """
    if q < 2:
        raise BoundDomainError(f"alphabet size must be at least 2, got {q}")
    if not 0.0 <= x <= 1.0:
        raise BoundDomainError(f"entropy argument {x} outside [0, 1]")
    log_q = math.log(q)
    if x == 0.0:
        return 0.0
    if x == 1.0:
        return math.log(q - 1) / log_q
    return (x * math.log(q - 1) - x * math.log(x) - (1.0 - x) * math.log(1.0 - x)) / log_q


def _entropy_array(q: int, x: np.ndarray) -> np.ndarray:
    inner = np.clip(x, 1e-300, 1.0 - 1e-16)
    value = (x * math.log(q - 1) - x * np.log(inner) - (1.0 - x) * np.log1p(-inner)) / math.log(q)
    return np.where(x == 0.0, 0.0, value)


def _clamp(value: float) -> float:
    return min(1.0, max(0.0, value))


def gv_rate(q: int, delta: float, table_mode: bool = False) -> float:
    """
    Gilbert-Varshamov rate 1 - H_q(delta), clamped to [0, 1].

    Beyond delta = 1 - 1/q the curve is undefined: strict mode raises,
    table mode returns 0.
    """
    if q < 2:
        raise BoundDomainError(f"alphabet size must be at least 2, got {q}")
    if delta > 1.0 - 1.0 / q:
        if table_mode:
            return 0.0
        raise BoundDomainError(f"GV bound undefined for delta={delta} > 1 - 1/{q}")
    return _clamp(1.0 - entropy_q(q, delta))


def singleton_line(delta: float) -> float:
    return max(0.0, 1.0 - delta)


def plotkin_line(q: int, delta: float) -> float:
    return max(0.0, 1.0 - 1.0 / q - delta)


def prime_square_root(q: int) -> Optional[int]:
    """
    p when q = p^2 for a prime p, else None.

    Raises:
        BoundDomainError: if q < 2
    """
    if q < 2:
        raise BoundDomainError(f"alphabet size must be at least 2, got {q}")
    root = math.isqrt(q)
    if root * root == q and isprime(root):
        return root
    return None


def tvz_denominator(q: int) -> float:
    """sqrt(q) - 1, the Ihara lower bound for prime squares."""
    if q <= 4:
        raise TVZUndefined(f"sqrt(q) - 1 <= 1 for q={q}: the TVZ line is vacuous")
    root = prime_square_root(q)
    if root is None:
        logger.warning(f"q={q} is not the square of a prime; TVZ line evaluated with sqrt(q) - 1")
        return math.sqrt(q) - 1.0
    return float(root - 1)


def tvz_intercept(q: int) -> Fraction:
    """Exact 1 - 1/(p - 1) for q = p^2."""
    root = prime_square_root(q)
    if root is None or root <= 2:
        raise TVZUndefined(f"exact TVZ intercept needs q = p^2 with p >= 3, got q={q}")
    return 1 - Fraction(1, root - 1)


def tvz_line(q: int, delta: float) -> float:
    return max(0.0, 1.0 - 1.0 / tvz_denominator(q) - delta)


def ag_line(gamma: float, delta: float) -> float:
    """Rate reached by AG families whose points-to-genus ratio tends to gamma."""
    if gamma <= 0:
        raise BoundDomainError(f"gamma must be positive, got {gamma}")
    return max(0.0, 1.0 - 1.0 / gamma - delta)


def _gap(q: int, delta: float) -> float:
    return tvz_line(q, delta) - gv_rate(q, delta)


def _bisect(q: int, lo: float, hi: float) -> float:
    """Sign change of tvz - gv in [lo, hi]."""
    f_lo = _gap(q, lo) > 0
    while hi - lo > TOLERANCE:
        mid = 0.5 * (lo + hi)
        if (_gap(q, mid) > 0) == f_lo:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def tvz_beats_gv(q: int, grid_points: int = GRID_POINTS) -> CrossoverReport:
    """
    Scan (0, 1 - 1/q) for deltas where the TVZ line lies above the GV curve.

    Raises:
        TVZUndefined: unless q is the square of a prime p >= 3
        BoundDomainError: if q < 2
    """
    root = prime_square_root(q)
    if root is None or q < 9:
        raise TVZUndefined(f"crossover needs q = p^2 with p >= 3, got q={q}")
    top = 1.0 - 1.0 / q
    deltas = top * np.arange(1, grid_points + 1) / (grid_points + 1)
    denominator = tvz_denominator(q)
    tvz = np.maximum(0.0, 1.0 - 1.0 / denominator - deltas)
    gv = np.clip(1.0 - _entropy_array(q, deltas), 0.0, 1.0)
    gaps = tvz - gv

    best = int(np.argmax(gaps))
    max_gap = float(gaps[best])
    beats = max_gap > TOLERANCE
    interval: Optional[Tuple[float, float]] = None
    if beats:
        positive = gaps > 0
        inside = np.flatnonzero(positive)
        first, last = int(inside[0]), int(inside[-1])
        lo = _bisect(q, float(deltas[first - 1]), float(deltas[first])) if first > 0 else 0.0
        hi = _bisect(q, float(deltas[last]), float(deltas[last + 1])) if last + 1 < grid_points else top
        interval = (lo, hi)
    logger.debug(f"q={q}: max gap {max_gap:.3e} at delta={deltas[best]:.6f}")

    return CrossoverReport(
        q=q,
        beats=beats,
        interval=interval,
        max_gap=max_gap,
        argmax_delta=float(deltas[best]),
        tvz_intercept=tvz_intercept(q),
        ihara_lower=root - 1,
        ihara_upper=root + 1,
    )


def _table_denominator(q: int) -> Optional[float]:
    try:
        return tvz_denominator(q)
    except TVZUndefined:
        return None


def bound_point(q: int, delta: float, denominator: Optional[float] = None) -> BoundPoint:
    r_tvz = max(0.0, 1.0 - 1.0 / denominator - delta) if denominator is not None else 0.0
    return BoundPoint(
        delta=delta,
        r_singleton=singleton_line(delta),
        r_plotkin=plotkin_line(q, delta),
        r_gv=gv_rate(q, delta, table_mode=True),
        r_tvz=r_tvz,
        gv_defined=delta <= 1.0 - 1.0 / q,
    )


def bound_table(q: int, samples: int) -> List[BoundPoint]:
    """All four bounds on a uniform grid of `samples` deltas covering [0, 1]."""
    if samples < 2:
        raise BoundDomainError(f"need at least 2 samples, got {samples}")
    if q < 2:
        raise BoundDomainError(f"alphabet size must be at least 2, got {q}")
    denominator = _table_denominator(q)
    return [bound_point(q, i / (samples - 1), denominator) for i in range(samples)]
