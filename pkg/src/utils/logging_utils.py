import logging
import os
import sys
from typing import Optional

LOGGER_NAME = 'tvz_toolkit'
DEFAULT_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


def setup_logging(
    log_level: str = "WARNING",
    log_format: Optional[str] = None,
    log_file: Optional[str] = None
) -> logging.Logger:
    """
    Setup structured logging for the toolkit.

    Logs go to stderr so that data written to stdout stays byte-identical
    between runs.

    Args:
        log_level: Logging level (DEBUG, INFO, WARNING, ERROR)
        log_format: Custom log format string
        log_file: Optional file path to write logs to

    Returns:
        Configured package logger
    """
    level = log_level.upper()

    if log_format is None:
        log_format = DEFAULT_FORMAT

    logger = logging.getLogger(LOGGER_NAME)

    # Clear existing handlers
    logger.handlers.clear()

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setFormatter(logging.Formatter(log_format))
    logger.addHandler(console_handler)

    if log_file:
        try:
            directory = os.path.dirname(log_file)
            if directory:
                os.makedirs(directory, exist_ok=True)

            file_handler = logging.FileHandler(log_file)
            file_handler.setFormatter(logging.Formatter(log_format))
            logger.addHandler(file_handler)

            logger.info(f"Logging to file: {log_file}")
        except OSError as e:
            logger.warning(f"Could not setup file logging: {e}")

    logger.setLevel(getattr(logging, level, logging.WARNING))
    logger.propagate = False

    return logger


def get_logger(name: str) -> logging.Logger:
    """
    Get a logger below the package logger.

    Args:
        name: Logger name (usually __name__; a leading 'src.' is dropped)

    Returns:
        Logger instance
    """
    return logging.getLogger(f'{LOGGER_NAME}.{name.removeprefix("src.")}')
