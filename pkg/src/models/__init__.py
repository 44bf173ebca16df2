from .config import OutputFormat, ToolkitConfig, Config
from .entities import (
    AGCodeParams,
    BoundPoint,
    ChannelSpec,
    CodeParams,
    CrossoverReport,
    FibreBound,
    GroupStructure,
    IharaRow,
    RRBasis,
    X0Data,
)
from .exceptions import ToolkitError, ConfigurationError, DomainError, UsageError, BudgetExceeded

__all__ = [
    'OutputFormat',
    'ToolkitConfig',
    'Config',
    'AGCodeParams',
    'BoundPoint',
    'ChannelSpec',
    'CodeParams',
    'CrossoverReport',
    'FibreBound',
    'GroupStructure',
    'IharaRow',
    'RRBasis',
    'X0Data',
    'ToolkitError',
    'ConfigurationError',
    'DomainError',
    'UsageError',
    'BudgetExceeded',
]
