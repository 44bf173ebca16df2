import logging
from typing import List, Optional

from ..core.bounds import bound_table, tvz_beats_gv
from ..models.config import ToolkitConfig
from ..models.entities import BoundPoint, CrossoverReport
from ..models.exceptions import DomainError
from ..utils.logging_utils import get_logger


class BoundsService:
    """Service for the asymptotic bound landscape."""

    def __init__(self, config: ToolkitConfig, logger: Optional[logging.Logger] = None):
        self.config = config
        self.logger = logger or get_logger(__name__)

    def table(self, q: int, samples: int) -> List[BoundPoint]:
        """
        Singleton, Plotkin, GV and TVZ rates on a uniform delta grid.

        Args:
            q: Alphabet size
            samples: Number of grid points on [0, 1]

        Returns:
            List of BoundPoint rows
        """
        try:
            self.logger.info(f"Tabulating bounds for q={q} on {samples} points")
            return bound_table(q, samples)
        except DomainError as e:
            self.logger.error(f"Bound table failed: {e}")
            raise

    def crossover(self, q: int) -> CrossoverReport:
        """Where, if anywhere, the TVZ line lies above the GV curve."""
        try:
            self.logger.info(f"Locating TVZ/GV crossover for q={q}")
            report = tvz_beats_gv(q)
            self.logger.info(f"q={q}: beats={report.beats}, max gap {report.max_gap:.3e}")
            return report
        except DomainError as e:
            self.logger.error(f"Crossover search failed: {e}")
            raise
