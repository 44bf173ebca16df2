import logging
from typing import List, Optional

from ..core.elliptic import (
    ECPoint,
    WeierstrassCurve,
    count_points,
    enumerate_points,
    frobenius_trace,
    group_structure,
    is_supersingular,
    j_invariant,
    m_torsion_count,
    parse_curve,
)
from ..core.field import FieldElement
from ..models.config import ToolkitConfig
from ..models.entities import GroupStructure
from ..models.exceptions import DomainError
from ..utils.logging_utils import get_logger


class CurveService:
    """Service for elliptic curves given as E[q=..;A=..;B=..] strings."""

    def __init__(self, config: ToolkitConfig, logger: Optional[logging.Logger] = None):
        self.config = config
        self.logger = logger or get_logger(__name__)

    def parse(self, curve_spec: str) -> WeierstrassCurve:
        try:
            return parse_curve(curve_spec)
        except DomainError as e:
            self.logger.error(f"Invalid curve {curve_spec!r}: {e}")
            raise

    def points(self, curve: WeierstrassCurve) -> List[ECPoint]:
        """
        Every rational point, O first.

        Args:
            curve: Parsed curve

        Returns:
            Points in enumeration order
        """
        try:
            self.logger.info(f"Enumerating points of {curve}")
            return enumerate_points(curve, budget=self.config.point_budget)
        except DomainError as e:
            self.logger.error(f"Point enumeration failed: {e}")
            raise

    def count(self, curve: WeierstrassCurve) -> int:
        try:
            return count_points(curve, budget=self.config.point_budget)
        except DomainError as e:
            self.logger.error(f"Point counting failed: {e}")
            raise

    def group(self, curve: WeierstrassCurve) -> GroupStructure:
        try:
            self.logger.info(f"Computing group structure of {curve}")
            return group_structure(curve, budget=self.config.group_budget)
        except DomainError as e:
            self.logger.error(f"Group structure failed: {e}")
            raise

    def j(self, curve: WeierstrassCurve) -> FieldElement:
        return j_invariant(curve)

    def trace(self, curve: WeierstrassCurve) -> int:
        try:
            return frobenius_trace(curve, budget=self.config.point_budget)
        except DomainError as e:
            self.logger.error(f"Trace computation failed: {e}")
            raise

    def supersingular(self, curve: WeierstrassCurve) -> bool:
        try:
            return is_supersingular(curve, budget=self.config.point_budget)
        except DomainError as e:
            self.logger.error(f"Supersingularity test failed: {e}")
            raise

    def torsion(self, curve: WeierstrassCurve, m: int) -> int:
        """Size of the rational m-torsion subgroup."""
        try:
            return m_torsion_count(curve, m, budget=self.config.group_budget)
        except DomainError as e:
            self.logger.error(f"Torsion census failed: {e}")
            raise
