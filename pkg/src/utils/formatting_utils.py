from fractions import Fraction
from typing import Any, Dict, List, Sequence

from ..core.elliptic import ECPoint, WeierstrassCurve
from ..core.field import FieldElement
from ..models.entities import (
    AGCodeParams,
    BoundPoint,
    CodeParams,
    CrossoverReport,
    FibreBound,
    GroupStructure,
    IharaRow,
    X0Data,
)

FLOAT_DIGITS = 12

BOUND_TABLE_HEADER = ["delta", "singleton", "plotkin", "gv", "tvz"]
IHARA_HEADER = ["ell", "genus", "lower_bound", "ratio"]
CHANNEL_HEADER = ["trial", "weight"]


def format_float(value: float) -> str:
    """
    Format a float with 12 significant digits.

    Args:
        value: Float to format

    Returns:
        Dot-decimal string, never "-0"
    """
    text = format(float(value), f".{FLOAT_DIGITS}g")
    return "0" if text == "-0" else text


def rounded(value: float) -> float:
    """Float rounded to the printed precision, for JSON output."""
    return float(format_float(value))


def format_fraction(value: Fraction) -> str:
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def format_element(value: FieldElement) -> str:
    return value.serialize()


def format_point(point: ECPoint) -> str:
    return str(point)


def format_curve(curve: WeierstrassCurve) -> str:
    return curve.serialize()


def code_params_record(params: CodeParams) -> Dict[str, Any]:
    return {"n": params.n, "k": params.k, "d": params.d, "d_exact": params.d_exact}


def ag_params_record(ag: AGCodeParams) -> Dict[str, Any]:
    record = code_params_record(ag.params)
    record.update(
        {
            "g": ag.genus,
            "degG": ag.degree,
            "k_bound": ag.k_bound,
            "d_bound": ag.d_bound,
            "singleton_defect": ag.params.singleton_defect,
        }
    )
    return record


def crossover_record(report: CrossoverReport) -> Dict[str, Any]:
    interval = None
    if report.interval is not None:
        interval = [rounded(report.interval[0]), rounded(report.interval[1])]
    return {
        "q": report.q,
        "beats": report.beats,
        "interval": interval,
        "max_gap": rounded(report.max_gap),
        "argmax_delta": rounded(report.argmax_delta),
        "tvz_intercept": format_fraction(report.tvz_intercept),
        "ihara_lower": report.ihara_lower,
        "ihara_upper": report.ihara_upper,
    }


def bound_table_records(points: Sequence[BoundPoint]) -> List[Dict[str, Any]]:
    return [
        {
            "delta": rounded(point.delta),
            "singleton": rounded(point.r_singleton),
            "plotkin": rounded(point.r_plotkin),
            "gv": rounded(point.r_gv),
            "tvz": rounded(point.r_tvz),
        }
        for point in points
    ]


def group_record(structure: GroupStructure) -> Dict[str, Any]:
    return {"n1": structure.n1, "n2": structure.n2, "N": structure.order}


def x0_record(data: X0Data) -> Dict[str, Any]:
    return {
        "ell": data.ell,
        "genus": data.genus,
        "degree": data.degree,
        "nu2": data.nu2,
        "nu3": data.nu3,
        "unramified_over_i": data.unramified_over_i,
        "unramified_over_rho": data.unramified_over_rho,
        "cusp_indices": list(data.cusp_indices),
    }


def ihara_records(rows: Sequence[IharaRow]) -> List[Dict[str, Any]]:
    return [
        {
            "ell": row.ell,
            "genus": row.genus,
            "lower_bound": format_fraction(row.lower_bound),
            "ratio": format_fraction(row.ratio),
            "upper_ceiling": row.upper_ceiling,
        }
        for row in rows
    ]


def fibre_record(bound: FibreBound) -> Dict[str, Any]:
    return {
        "ell": bound.ell,
        "generic_classes": bound.generic_classes,
        "j0_supersingular": bound.j0_supersingular,
        "j1728_supersingular": bound.j1728_supersingular,
        "total": format_fraction(bound.total),
    }


def _cell(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return ""
    if isinstance(value, float):
        return format_float(value)
    if isinstance(value, (list, tuple)):
        return " ".join(_cell(v) for v in value)
    return str(value)


def record_table(record: Dict[str, Any]) -> List[List[str]]:
    """A single record as a two-row CSV table: keys, then values."""
    return [list(record.keys()), [_cell(v) for v in record.values()]]


def records_table(records: Sequence[Dict[str, Any]], header: Sequence[str]) -> List[List[str]]:
    return [list(header)] + [[_cell(record.get(key)) for key in header] for record in records]
