import logging
from typing import Dict, List, Optional, Sequence

from ..core.field import FieldElement
from ..core.modular import (
    expected_supersingular_count,
    fibre_lower_bound,
    ihara_table,
    special_j_pattern,
    supersingular_j_invariants,
    x0_ramification,
)
from ..models.config import ToolkitConfig
from ..models.entities import FibreBound, IharaRow, X0Data
from ..models.exceptions import DomainError
from ..utils.logging_utils import get_logger


class ModularService:
    """Service for X0(ell) data, supersingular scans and the Ihara ratio table."""

    def __init__(self, config: ToolkitConfig, logger: Optional[logging.Logger] = None):
        """
        Initialize ModularService with shared config.

        Args:
            config: Toolkit configuration; `workers` sizes the j-scan pool
            logger: Optional logger instance
        """
        self.config = config
        self.logger = logger or get_logger(__name__)

    def x0(self, ell: int) -> X0Data:
        try:
            self.logger.info(f"Computing X0({ell}) data")
            return x0_ramification(ell)
        except DomainError as e:
            self.logger.error(f"X0 data failed: {e}")
            raise

    def supersingular(self, p: int) -> List[FieldElement]:
        """
        Supersingular j-invariants over F_{p^2}, by brute force.

        Args:
            p: Prime characteristic, 5 <= p <= 100

        Returns:
            Sorted list of j-invariants
        """
        try:
            self.logger.info(f"Scanning F_{p}^2 for supersingular j with {self.config.workers} worker(s)")
            js = supersingular_j_invariants(p, workers=self.config.workers)
            expected = expected_supersingular_count(p)
            if len(js) != expected:
                self.logger.warning(f"p={p}: found {len(js)} classes, closed form gives {expected}")
            return js
        except DomainError as e:
            self.logger.error(f"Supersingular scan failed: {e}")
            raise

    def expected_count(self, p: int) -> int:
        return expected_supersingular_count(p)

    def special_pattern(self, p: int) -> Dict[str, bool]:
        return special_j_pattern(p, workers=self.config.workers)

    def fibre(self, p: int, ell: int) -> FibreBound:
        """Supersingular points of X0(ell) over F_{p^2}, rebuilt from the j-scan."""
        try:
            self.logger.info(f"Rebuilding the fibre count for p={p}, ell={ell}")
            return fibre_lower_bound(p, ell, workers=self.config.workers)
        except DomainError as e:
            self.logger.error(f"Fibre count failed: {e}")
            raise

    def ihara(self, p: int, ells: Sequence[int]) -> List[IharaRow]:
        try:
            self.logger.info(f"Building Ihara table for p={p}, ells={list(ells)}")
            return ihara_table(p, ells)
        except DomainError as e:
            self.logger.error(f"Ihara table failed: {e}")
            raise
