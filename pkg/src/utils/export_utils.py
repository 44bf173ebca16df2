import csv
import io
import json
import os
import sys
from typing import Any, Optional, Sequence


def render_json(data: Any) -> str:
    """
    Serialize to compact JSON with insertion-ordered keys.

    Args:
        data: JSON-compatible data (dicts, lists, str, int, float, bool, None)

    Returns:
        JSON text terminated by a newline
    """
    return json.dumps(data, separators=(",", ":"), ensure_ascii=False) + "\n"


def render_csv(rows: Sequence[Sequence[Any]]) -> str:
    """
    Serialize rows (header first) to CSV with '\\n' line endings.

    Args:
        rows: Table rows

    Returns:
        CSV text
    """
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerows(rows)
    return buffer.getvalue()


def write_output(text: str, file_path: Optional[str] = None) -> Optional[str]:
    """
    Write rendered output to a file or to stdout.

    Args:
        text: Rendered output
        file_path: Output file path; stdout when None

    Returns:
        Path to created file, or None for stdout
    """
    if file_path is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return None

    # Create directory if it doesn't exist
    directory = os.path.dirname(file_path)
    if directory:
        os.makedirs(directory, exist_ok=True)

    with open(file_path, "w", newline="", encoding="utf-8") as f:
        f.write(text)

    return file_path


def export_to_json(data: Any, file_path: Optional[str] = None) -> Optional[str]:
    return write_output(render_json(data), file_path)


def export_to_csv(rows: Sequence[Sequence[Any]], file_path: Optional[str] = None) -> Optional[str]:
    if not rows:
        raise ValueError("Data must be a non-empty table for CSV export")
    return write_output(render_csv(rows), file_path)


def read_csv_rows(file_path: str) -> list:
    """Read every row of a CSV file as lists of strings."""
    with open(file_path, newline="", encoding="utf-8") as f:
        return [row for row in csv.reader(f)]
