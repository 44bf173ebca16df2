import json

import pytest
from pydantic import ValidationError

from src.cli.runner import build_parser, command_spec, run
from src.models.config import OutputFormat


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_rs_json(capsys):
    code, out, _ = invoke(capsys, "rs", "--q", "7", "--n", "7", "--k", "3")
    assert code == 0
    assert out == '{"n":7,"k":3,"d":5,"d_exact":true}\n'


def test_rs_csv(capsys):
    code, out, _ = invoke(capsys, "rs", "--q", "7", "--n", "7", "--k", "3", "--format", "csv")
    assert code == 0
    assert out == "n,k,d,d_exact\n7,3,5,true\n"


def test_x0(capsys):
    code, out, _ = invoke(capsys, "x0", "--ell", "11")
    assert code == 0
    assert out.startswith('{"ell":11,"genus":1,')
    assert json.loads(out)["cusp_indices"] == [11, 1]


def test_ihara_defaults_to_csv(capsys):
    code, out, _ = invoke(capsys, "ihara", "--p", "7", "--ells", "11,23,47,59")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "ell,genus,lower_bound,ratio"
    assert lines[1] == "11,1,6/1,6/1"
    assert all(line.endswith(",6/1") for line in lines[1:])
    assert len(lines) == 5


def test_bounds_table(capsys):
    code, out, _ = invoke(capsys, "bounds", "--q", "49", "--samples", "3")
    assert code == 0
    assert out.splitlines() == [
        "delta,singleton,plotkin,gv,tvz",
        "0,1,0.979591836735,1,0.833333333333",
        out.splitlines()[2],
        "1,0,0,0,0",
    ]
    assert out.splitlines()[2].startswith("0.5,0.5,0.479591836735,")


def test_crossover(capsys):
    code, out, _ = invoke(capsys, "crossover", "--q", "49")
    record = json.loads(out)
    assert code == 0
    assert record["beats"] is True
    assert record["tvz_intercept"] == "5/6"
    assert len(record["interval"]) == 2
    code, out, _ = invoke(capsys, "crossover", "--q", "25")
    assert json.loads(out)["interval"] is None


def test_agcode(capsys):
    code, out, _ = invoke(capsys, "agcode", "--line", "7", "--m", "2")
    assert code == 0
    assert out == (
        '{"n":7,"k":3,"d":5,"d_exact":true,"g":0,"degG":2,'
        '"k_bound":3,"d_bound":5,"singleton_defect":0}\n'
    )
    code, out, _ = invoke(capsys, "agcode", "--curve", "E[q=7;A=1;B=1]", "--m", "2", "--bound-only")
    record = json.loads(out)
    assert (record["d"], record["d_exact"], record["g"], record["singleton_defect"]) == (2, False, 1, 1)


def test_agcode_needs_one_carrier(capsys):
    code, _, err = invoke(capsys, "agcode", "--m", "2")
    assert code == 2
    assert err.startswith("error:")
    code, _, _ = invoke(capsys, "agcode", "--line", "7", "--curve", "E[q=7;A=1;B=1]", "--m", "2")
    assert code == 2


def test_elliptic_queries(capsys):
    curve = "E[q=7;A=1;B=1]"
    _, out, _ = invoke(capsys, "elliptic", "--curve", curve)
    assert out == '{"curve":"E[q=7;A=1;B=1]","N":5,"points":["O","(0,1)","(0,6)","(2,2)","(2,5)"]}\n'
    _, out, _ = invoke(capsys, "elliptic", "--curve", curve, "--group")
    assert out == '{"n1":1,"n2":5,"N":5}\n'
    _, out, _ = invoke(capsys, "elliptic", "--curve", "E[q=5;A=1;B=1]", "--j")
    assert json.loads(out)["j"] == "2"
    _, out, _ = invoke(capsys, "elliptic", "--curve", "E[q=5;A=0;B=1]", "--supersingular")
    assert json.loads(out)["supersingular"] is True
    _, out, _ = invoke(capsys, "elliptic", "--curve", "E[q=5;A=1;B=0]", "--torsion", "2")
    assert json.loads(out)["count"] == 4


def test_elliptic_rejects_two_queries(capsys):
    code, _, _ = invoke(capsys, "elliptic", "--curve", "E[q=7;A=1;B=1]", "--group", "--j")
    assert code == 2
    code, _, _ = invoke(capsys, "elliptic", "--curve", "E[q=7;A=1;B=1]", "--torsion", "0")
    assert code == 2


def test_singular_curve_is_a_domain_error(capsys):
    code, out, err = invoke(capsys, "elliptic", "--curve", "E[q=7;A=0;B=0]")
    assert code == 3
    assert out == ""
    assert "error:" in err


def test_supersingular_with_fibre(capsys):
    code, out, _ = invoke(capsys, "supersingular", "--p", "11", "--ell", "23")
    record = json.loads(out)
    assert code == 0
    assert (record["count"], record["expected"], record["j0"], record["j1728"]) == (2, 2, True, True)
    assert record["j"] == ["0,0", "1,0"]
    assert record["fibre"]["total"] == "20/1"


def test_channel_csv(capsys):
    code, out, _ = invoke(capsys, "channel", "--q", "7", "--n", "10", "--perr", "0", "--trials", "3")
    assert code == 0
    assert out == "trial,weight\n0,0\n1,0\n2,0\n"


def test_channel_is_deterministic(capsys):
    argv = ["channel", "--q", "7", "--n", "50", "--perr", "0.3", "--trials", "20", "--seed", "4"]
    _, first, _ = invoke(capsys, *argv)
    _, second, _ = invoke(capsys, *argv)
    assert first == second


def test_channel_rejects_large_error_probability(capsys):
    code, _, _ = invoke(capsys, "channel", "--q", "7", "--n", "5", "--perr", "0.9", "--trials", "1")
    assert code == 3


def test_field(capsys):
    code, out, _ = invoke(capsys, "field", "--p", "7", "--m", "2")
    assert code == 0
    assert out == '{"field":"GF(7^2)","q":49,"spec":"q=7^2;mod=1,0,1"}\n'


@pytest.mark.parametrize(
    "argv",
    [
        ["rs", "--q", "7", "--n", "7", "--k", "3", "--bogus"],
        ["rs", "--q", "7", "--n", "7"],
        ["ihara", "--p", "7", "--ells", "11,x"],
        ["x0", "--ell", "11", "--log-level", "chatty"],
        ["x0", "--ell", "11", "--format", "xml"],
        ["unknown"],
        ["rs", "--q", "7", "--n", "0", "--k", "1"],
        ["rs", "--q", "7", "--n", "-1", "--k", "3"],
        ["crossover", "--q", "-1"],
        ["crossover", "--q", "1"],
        ["bounds", "--q", "0", "--samples", "3"],
        ["agcode", "--line", "1", "--m", "0"],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    code, out, _ = invoke(capsys, *argv)
    assert code == 2
    assert out == ""


@pytest.mark.parametrize(
    "argv",
    [
        ["rs", "--q", "7", "--n", "7", "--k", "0"],
        ["rs", "--q", "7", "--n", "8", "--k", "3"],
        ["x0", "--ell", "9"],
        ["crossover", "--q", "4"],
        ["ihara", "--p", "7", "--ells", "13"],
        ["supersingular", "--p", "101"],
    ],
)
def test_domain_errors_exit_3(capsys, argv):
    code, out, err = invoke(capsys, *argv)
    assert code == 3
    assert out == ""
    assert err.strip().splitlines()[-1].startswith("error:")


def test_configuration_error_exits_2(capsys, monkeypatch):
    monkeypatch.setenv("TVZ_WORKERS", "0")
    code, _, err = invoke(capsys, "x0", "--ell", "11")
    assert code == 2
    assert "TVZ_WORKERS" in err


def test_out_writes_file(capsys, tmp_path):
    path = tmp_path / "results" / "rs.json"
    code, out, _ = invoke(capsys, "rs", "--q", "7", "--n", "7", "--k", "3", "--out", str(path))
    assert code == 0
    assert out == ""
    assert path.read_text() == '{"n":7,"k":3,"d":5,"d_exact":true}\n'


def test_unwritable_out_exits_2(capsys, tmp_path):
    code, _, err = invoke(capsys, "x0", "--ell", "11", "--out", str(tmp_path))
    assert code == 2
    assert "cannot write" in err


def test_repeated_runs_are_byte_identical(capsys):
    argv = ["bounds", "--q", "121", "--samples", "51"]
    _, first, _ = invoke(capsys, *argv)
    _, second, _ = invoke(capsys, *argv)
    assert first == second


def test_help_exits_0(capsys):
    assert run(["--help"]) == 0


def test_command_spec_defaults():
    args = build_parser().parse_args(["elliptic", "--curve", "E[q=7;A=1;B=1]"])
    spec = command_spec(args)
    assert spec.flags.query == "points"
    assert spec.output_format is OutputFormat.JSON
    args = build_parser().parse_args(["bounds", "--q", "49", "--samples", "5", "--format", "json"])
    assert command_spec(args).output_format is OutputFormat.JSON


def test_command_spec_validates_output_format():
    args = build_parser().parse_args(["x0", "--ell", "11"])
    args.format = "CSV"
    assert command_spec(args).output_format is OutputFormat.CSV
    args.format = "xml"
    with pytest.raises(ValidationError):
        command_spec(args)
