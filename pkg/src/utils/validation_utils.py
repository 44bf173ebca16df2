from typing import List, Union

from ..models.config import OutputFormat

VALID_LOG_LEVELS = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]


def validate_output_format(output_format: Union[str, OutputFormat]) -> OutputFormat:
    """
    Validate and convert an output format string to the OutputFormat enum.

    Raises:
        ValueError: If the format is unknown
    """
    if isinstance(output_format, OutputFormat):
        return output_format
    try:
        return OutputFormat(str(output_format).lower())
    except ValueError:
        valid = [f.value for f in OutputFormat]
        raise ValueError(f"Invalid output format: {output_format}. Valid options: {valid}")


def parse_int_list(text: str, name: str = "list") -> List[int]:
    """
    Parse a comma-separated list of integers such as "11,23,47".

    Raises:
        ValueError: If the list is empty or an entry is not an integer
    """
    parts = [part.strip() for part in text.split(",")]
    if not text.strip() or any(not part for part in parts):
        raise ValueError(f"{name} must be a non-empty comma-separated list of integers")
    try:
        return [int(part) for part in parts]
    except ValueError:
        raise ValueError(f"{name} contains a non-integer entry: {text}")


def validate_log_level(log_level: str) -> str:
    """
    Validate a logging level name, case-insensitively.

    Raises:
        ValueError: If the level is unknown
    """
    if not isinstance(log_level, str):
        raise ValueError(f"log_level must be a string, got {type(log_level).__name__}")
    level = log_level.upper()
    if level not in VALID_LOG_LEVELS:
        raise ValueError(f"Invalid log level: {log_level}. Valid options: {VALID_LOG_LEVELS}")
    return level
