from .logging_utils import setup_logging, get_logger
from .validation_utils import validate_output_format, validate_log_level, parse_int_list
from .export_utils import export_to_json, export_to_csv, render_json, render_csv

__all__ = [
    'setup_logging',
    'get_logger',
    'validate_output_format',
    'validate_log_level',
    'parse_int_list',
    'export_to_json',
    'export_to_csv',
    'render_json',
    'render_csv'
]
