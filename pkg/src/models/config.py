import os
from dataclasses import dataclass
from enum import Enum
from dotenv import load_dotenv

from .exceptions import ConfigurationError

# Load environment variables from .env file
load_dotenv()


# Built-in enumeration budgets; core functions default to these.
FIELD_BUDGET = 2 ** 20
CODE_BUDGET = 2 ** 24
DECODE_BUDGET = 2 ** 20
POINT_BUDGET = 2 ** 16
GROUP_BUDGET = 2 ** 12
DEFAULT_SEED = 20240601


class OutputFormat(Enum):
    """Supported output formats."""
    CSV = "csv"
    JSON = "json"


@dataclass(frozen=True)
class ToolkitConfig:
    """Budgets, parallelism and defaults shared by every service."""
    field_budget: int = FIELD_BUDGET
    code_budget: int = CODE_BUDGET
    decode_budget: int = DECODE_BUDGET
    point_budget: int = POINT_BUDGET
    group_budget: int = GROUP_BUDGET
    workers: int = 1
    seed: int = DEFAULT_SEED
    log_level: str = "WARNING"


class Config:
    """Configuration manager."""

    _INT_FIELDS = {
        'field_budget': 'TVZ_FIELD_BUDGET',
        'code_budget': 'TVZ_CODE_BUDGET',
        'decode_budget': 'TVZ_DECODE_BUDGET',
        'point_budget': 'TVZ_POINT_BUDGET',
        'group_budget': 'TVZ_GROUP_BUDGET',
        'workers': 'TVZ_WORKERS',
        'seed': 'TVZ_SEED',
    }

    @staticmethod
    def get_toolkit_config() -> ToolkitConfig:
        """Get toolkit configuration from TVZ_* environment variables."""
        values = {}
        invalid = []
        for field_name, env_name in Config._INT_FIELDS.items():
            raw = os.getenv(env_name)
            if raw is None or not raw.strip():
                continue
            try:
                values[field_name] = int(raw.strip(), 0)
            except ValueError:
                invalid.append(env_name)

        if invalid:
            raise ConfigurationError(f"Non-integer values for environment variables: {invalid}")

        non_positive = [Config._INT_FIELDS[k] for k, v in values.items() if v < (0 if k == 'seed' else 1)]
        if non_positive:
            raise ConfigurationError(f"Environment variables out of range: {non_positive}")

        log_level = os.getenv('TVZ_LOG_LEVEL') or os.getenv('LOG_LEVEL')
        if log_level:
            log_level = log_level.strip().upper()
            if log_level not in ('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL'):
                raise ConfigurationError(f"Invalid log level: {log_level}")
            values['log_level'] = log_level

        return ToolkitConfig(**values)
