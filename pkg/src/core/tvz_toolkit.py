import logging
from typing import Optional

from ..models.config import Config, ToolkitConfig
from ..models.exceptions import ConfigurationError
from ..services.bounds_service import BoundsService
from ..services.coding_service import CodingService
from ..services.curve_service import CurveService
from ..services.modular_service import ModularService
from ..utils.logging_utils import get_logger


class TVZToolkit:
    """
    Entry point bundling the coding, bounds, curve and modular services.

    Features:
    - Environment-based budgets and seeds
    - Shared logger across services
    - Domain errors logged once per service call and re-raised
    """

    def __init__(self, config: Optional[ToolkitConfig] = None, logger: Optional[logging.Logger] = None):
        """
        Initialize the toolkit.

        Args:
            config: Toolkit configuration (loaded from TVZ_* variables if not provided)
            logger: Optional logger instance
        """
        self.logger = logger or get_logger(__name__)

        try:
            self.config = config or Config.get_toolkit_config()
        except ConfigurationError as e:
            self.logger.error(f"Configuration error: {e}")
            raise

        self.coding = CodingService(config=self.config, logger=self.logger)
        self.bounds = BoundsService(config=self.config, logger=self.logger)
        self.curves = CurveService(config=self.config, logger=self.logger)
        self.modular = ModularService(config=self.config, logger=self.logger)

        self.logger.debug(f"Initialized TVZToolkit with {self.config}")
