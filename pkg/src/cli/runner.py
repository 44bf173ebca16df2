"""
Command-line front door for the toolkit.

Every subcommand renders to CSV or JSON on stdout (or --out PATH). Exit codes:
0 on success, 2 for flag and configuration problems, 3 for domain errors.
"""
import argparse
import sys
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Optional, Sequence

from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    ValidationError,
    field_validator,
    model_validator,
)

from ..core.field import field_build
from ..core.tvz_toolkit import TVZToolkit
from ..models.config import Config, OutputFormat
from ..models.exceptions import ConfigurationError, DomainError, UsageError
from ..utils.export_utils import render_csv, render_json, write_output
from ..utils.formatting_utils import (
    BOUND_TABLE_HEADER,
    CHANNEL_HEADER,
    IHARA_HEADER,
    ag_params_record,
    bound_table_records,
    code_params_record,
    crossover_record,
    fibre_record,
    format_curve,
    format_element,
    format_point,
    group_record,
    ihara_records,
    record_table,
    records_table,
    x0_record,
)
from ..utils.logging_utils import setup_logging
from ..utils.validation_utils import parse_int_list, validate_log_level, validate_output_format

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DOMAIN = 3


class _Flags(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)


class BoundsFlags(_Flags):
    q: int = Field(ge=2)
    samples: int


class CrossoverFlags(_Flags):
    q: int = Field(ge=2)


class RSFlags(_Flags):
    q: int = Field(ge=2)
    n: int = Field(ge=1)
    k: int


class AGCodeFlags(_Flags):
    curve: Optional[str] = None
    line: Optional[int] = Field(default=None, ge=2)
    m: int
    exhaustive: bool = True

    @model_validator(mode="after")
    def _one_carrier(self):
        if (self.line is None) == (self.curve is None):
            raise ValueError("exactly one of --curve and --line is required")
        return self


class EllipticFlags(_Flags):
    curve: str
    query: str = "points"
    torsion: Optional[int] = Field(default=None, ge=1)


class SupersingularFlags(_Flags):
    p: int
    ell: Optional[int] = None


class X0Flags(_Flags):
    ell: int


class IharaFlags(_Flags):
    p: int
    ells: List[int]

    @field_validator("ells", mode="before")
    @classmethod
    def _parse_ells(cls, value):
        if isinstance(value, str):
            return parse_int_list(value, "--ells")
        return value


class ChannelFlags(_Flags):
    q: int = Field(ge=2)
    n: int = Field(ge=1)
    perr: float
    trials: int = Field(ge=1)
    seed: Optional[int] = Field(default=None, ge=0)


class FieldFlags(_Flags):
    p: int
    m: int = 1


FLAG_MODELS = {
    "bounds": BoundsFlags,
    "crossover": CrossoverFlags,
    "rs": RSFlags,
    "agcode": AGCodeFlags,
    "elliptic": EllipticFlags,
    "supersingular": SupersingularFlags,
    "x0": X0Flags,
    "ihara": IharaFlags,
    "channel": ChannelFlags,
    "field": FieldFlags,
}

DEFAULT_FORMATS = {
    "bounds": OutputFormat.CSV,
    "ihara": OutputFormat.CSV,
    "channel": OutputFormat.CSV,
}


class CommandSpec(BaseModel):
    """A validated invocation: subcommand, typed flags and output target."""
    model_config = ConfigDict(extra="forbid", frozen=True)

    subcommand: str
    flags: _Flags
    output_format: OutputFormat
    out: Optional[str] = None
    log_level: Optional[str] = None

    @field_validator("output_format", mode="before")
    @classmethod
    def _check_format(cls, value):
        return validate_output_format(value)

    @field_validator("log_level")
    @classmethod
    def _check_level(cls, value):
        return None if value is None else validate_log_level(value)


@dataclass(frozen=True)
class Rendered:
    """The same result shaped for both output formats."""
    json: Any
    csv: List[List[str]]


def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=[f.value for f in OutputFormat], default=None)
    common.add_argument("--out", default=None, help="write output to PATH instead of stdout")
    common.add_argument("--log-level", default=None, help="DEBUG, INFO, WARNING or ERROR")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_parser()
    parser = argparse.ArgumentParser(
        prog="tvz", description="Desk-scale algebraic-geometry coding toolkit"
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("bounds", parents=[common], help="Singleton/Plotkin/GV/TVZ table")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--samples", type=int, required=True)

    p = sub.add_parser("crossover", parents=[common], help="TVZ versus GV crossover")
    p.add_argument("--q", type=int, required=True)

    p = sub.add_parser("rs", parents=[common], help="Reed-Solomon parameters with exact d")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("agcode", parents=[common], help="one-point AG code parameters")
    p.add_argument("--curve", default=None, help="E[q=..;A=..;B=..]")
    p.add_argument("--line", type=int, default=None, metavar="Q", help="use P^1 over F_Q")
    p.add_argument("--m", type=int, required=True)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exhaustive", dest="exhaustive", action="store_true", default=True)
    mode.add_argument("--bound-only", dest="exhaustive", action="store_false")

    p = sub.add_parser("elliptic", parents=[common], help="points, group, j or supersingularity")
    p.add_argument("--curve", required=True, help="E[q=..;A=..;B=..]")
    query = p.add_mutually_exclusive_group()
    for name in ("points", "group", "j", "supersingular"):
        query.add_argument(f"--{name}", dest="query", action="store_const", const=name)
    query.add_argument("--torsion", type=int, default=None, metavar="M")

    p = sub.add_parser("supersingular", parents=[common], help="supersingular j over F_{p^2}")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--ell", type=int, default=None)

    p = sub.add_parser("x0", parents=[common], help="genus and ramification of X0(ell)")
    p.add_argument("--ell", type=int, required=True)

    p = sub.add_parser("ihara", parents=[common], help="ratio table for ell = 11 mod 12")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--ells", required=True, help="comma-separated primes")

    p = sub.add_parser("channel", parents=[common], help="q-ary symmetric channel weights")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--perr", type=float, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, default=None)

    p = sub.add_parser("field", parents=[common], help="field spec string for GF(p^m)")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--m", type=int, default=1)

    return parser


def command_spec(args: argparse.Namespace) -> CommandSpec:
    """
    Validate parsed arguments into a CommandSpec.

    Raises:
        ValidationError: if a flag value is malformed
    """
    model = FLAG_MODELS[args.subcommand]
    values = {name: getattr(args, name) for name in model.model_fields if hasattr(args, name)}
    if args.subcommand == "elliptic":
        values["query"] = "torsion" if args.torsion is not None else (args.query or "points")
    flags = model(**{k: v for k, v in values.items() if v is not None})
    return CommandSpec(
        subcommand=args.subcommand,
        flags=flags,
        output_format=args.format or DEFAULT_FORMATS.get(args.subcommand, OutputFormat.JSON),
        out=args.out,
        log_level=args.log_level,
    )


def _bounds(toolkit: TVZToolkit, flags: BoundsFlags) -> Rendered:
    records = bound_table_records(toolkit.bounds.table(flags.q, flags.samples))
    return Rendered(json=records, csv=records_table(records, BOUND_TABLE_HEADER))


def _crossover(toolkit: TVZToolkit, flags: CrossoverFlags) -> Rendered:
    record = crossover_record(toolkit.bounds.crossover(flags.q))
    return Rendered(json=record, csv=record_table(record))


def _rs(toolkit: TVZToolkit, flags: RSFlags) -> Rendered:
    record = code_params_record(toolkit.coding.rs_params(flags.q, flags.n, flags.k))
    return Rendered(json=record, csv=record_table(record))


def _agcode(toolkit: TVZToolkit, flags: AGCodeFlags) -> Rendered:
    if flags.curve is not None:
        result = toolkit.coding.ag_params(flags.curve, flags.m, exhaustive=flags.exhaustive)
    else:
        result = toolkit.coding.line_params(flags.line, flags.m, exhaustive=flags.exhaustive)
    record = ag_params_record(result)
    return Rendered(json=record, csv=record_table(record))


def _elliptic(toolkit: TVZToolkit, flags: EllipticFlags) -> Rendered:
    curves = toolkit.curves
    curve = curves.parse(flags.curve)
    if flags.query == "group":
        record = group_record(curves.group(curve))
        return Rendered(json=record, csv=record_table(record))
    if flags.query == "j":
        record = {"curve": format_curve(curve), "j": format_element(curves.j(curve))}
        return Rendered(json=record, csv=record_table(record))
    if flags.query == "supersingular":
        record = {
            "curve": format_curve(curve),
            "N": curves.count(curve),
            "trace": curves.trace(curve),
            "supersingular": curves.supersingular(curve),
        }
        return Rendered(json=record, csv=record_table(record))
    if flags.query == "torsion":
        record = {"curve": format_curve(curve), "m": flags.torsion, "count": curves.torsion(curve, flags.torsion)}
        return Rendered(json=record, csv=record_table(record))
    points = [format_point(P) for P in curves.points(curve)]
    record = {"curve": format_curve(curve), "N": len(points), "points": points}
    return Rendered(json=record, csv=[["point"]] + [[P] for P in points])


def _supersingular(toolkit: TVZToolkit, flags: SupersingularFlags) -> Rendered:
    modular = toolkit.modular
    js = modular.supersingular(flags.p)
    field = field_build(flags.p, 2)
    record: Dict[str, Any] = {
        "p": flags.p,
        "count": len(js),
        "expected": modular.expected_count(flags.p),
        "j0": field.zero() in js,
        "j1728": field.element(1728) in js,
        "j": [format_element(j) for j in js],
    }
    if flags.ell is not None:
        record["fibre"] = fibre_record(modular.fibre(flags.p, flags.ell))
    return Rendered(json=record, csv=[["j"]] + [[j] for j in record["j"]])


def _x0(toolkit: TVZToolkit, flags: X0Flags) -> Rendered:
    record = x0_record(toolkit.modular.x0(flags.ell))
    return Rendered(json=record, csv=record_table(record))


def _ihara(toolkit: TVZToolkit, flags: IharaFlags) -> Rendered:
    records = ihara_records(toolkit.modular.ihara(flags.p, flags.ells))
    return Rendered(json=records, csv=records_table(records, IHARA_HEADER))


def _channel(toolkit: TVZToolkit, flags: ChannelFlags) -> Rendered:
    rows = toolkit.coding.channel_weights(flags.q, flags.n, flags.perr, flags.trials, flags.seed)
    records = [{"trial": trial, "weight": weight} for trial, weight in rows]
    return Rendered(json=records, csv=records_table(records, CHANNEL_HEADER))


def _field(toolkit: TVZToolkit, flags: FieldFlags) -> Rendered:
    spec = field_build(flags.p, flags.m, budget=toolkit.config.field_budget)
    record = {"field": spec.describe(), "q": spec.q, "spec": spec.serialize()}
    return Rendered(json=record, csv=record_table(record))


HANDLERS: Dict[str, Callable[[TVZToolkit, Any], Rendered]] = {
    "bounds": _bounds,
    "crossover": _crossover,
    "rs": _rs,
    "agcode": _agcode,
    "elliptic": _elliptic,
    "supersingular": _supersingular,
    "x0": _x0,
    "ihara": _ihara,
    "channel": _channel,
    "field": _field,
}


def _validation_message(error: ValidationError) -> str:
    details = []
    for item in error.errors():
        where = ".".join(str(part) for part in item["loc"])
        details.append(f"{where}: {item['msg']}" if where else item["msg"])
    return "; ".join(details)


def _fail(message: str, code: int) -> int:
    sys.stderr.write(f"error: {message}\n")
    return code


def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    Parse, validate and execute one subcommand.

    Args:
        argv: Arguments without the program name (sys.argv[1:] when None)

    Returns:
        Exit status 0, 2 or 3
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    try:
        spec = command_spec(args)
        config = Config.get_toolkit_config()
    except ValidationError as e:
        return _fail(_validation_message(e), EXIT_USAGE)
    except (ConfigurationError, UsageError) as e:
        return _fail(str(e), EXIT_USAGE)

    logger = setup_logging(spec.log_level or config.log_level)
    toolkit = TVZToolkit(config=config, logger=logger)

    try:
        rendered = HANDLERS[spec.subcommand](toolkit, spec.flags)
    except DomainError as e:
        return _fail(str(e), EXIT_DOMAIN)

    text = render_json(rendered.json) if spec.output_format is OutputFormat.JSON else render_csv(rendered.csv)
    try:
        write_output(text, spec.out)
    except OSError as e:
        return _fail(f"cannot write {spec.out}: {e}", EXIT_USAGE)
    return EXIT_OK


def main() -> None:
    sys.exit(run())
