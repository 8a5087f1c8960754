import pytest
import ujson
from typer.testing import CliRunner

from eqres import EqresApplication
from eqres import verify as verify_suites
from eqres.cli import CLI_BUILTINS, EqresCLIManager, EqresCommandRegister
from eqres.cli import documents as docs
from eqres.cli.register import exit_code_of
from eqres.eqmod import ModuleModel, lattice
from eqres.errors import GuardrailError, OracleError, PreconditionError
from eqres.reports import CheckReport, VerificationReport
from eqres.res import EXIT_FAILED, EXIT_GUARDRAIL, EXIT_OK, EXIT_USAGE
from eqres.resolutions import betti_table


@pytest.fixture
def invoke(eqres_app):
    cli_app = EqresCLIManager(commands=[CLI_BUILTINS]).make_cli_app(
        eqres_app
    )
    runner = CliRunner()

    def _invoke(*args):
        return runner.invoke(cli_app, list(args))

    return _invoke


# =============================================================================
# REGISTER
# =============================================================================


def test_register_requires_app_parameter():
    register = EqresCommandRegister("test")
    with pytest.raises(ValueError):
        register.register(lambda n: n)


def test_register_refuses_reserved_names():
    register = EqresCommandRegister("test", not_available=CLI_BUILTINS)

    def tor(app):
        pass

    with pytest.raises(ValueError):
        register.register(tor)
    register.register(tor, name="my-tor")
    assert list(register) == ["my-tor"]


@pytest.mark.parametrize(
    "error, code",
    [
        (GuardrailError("big"), EXIT_GUARDRAIL),
        (OracleError("odd"), EXIT_FAILED),
        (PreconditionError("bad"), EXIT_USAGE),
    ],
)
def test_exit_codes(error, code):
    assert exit_code_of(error) == code


# =============================================================================
# TOR
# =============================================================================


def test_tor_json(invoke):
    result = invoke("tor", "--lambda", "2,1", "--n", "3", "--format", "json")
    assert result.exit_code == 0
    document = ujson.loads(result.output)
    assert document["schema"] == "eqres/1"
    assert document["kind"] == "betti"
    expected = betti_table(ModuleModel.elementary((2, 1), 3))
    assert docs.betti_from_json(document) == expected


def test_tor_text(invoke):
    result = invoke("tor", "--lambda", "2,2", "--n", "3")
    assert result.exit_code == 0
    assert "M(2,2), n=3" in result.output
    assert "S(2,2,1)" in result.output


def test_tor_projective_is_one_row(invoke):
    result = invoke(
        "tor", "--lambda", "7", "--n", "4", "--projective", "--format", "json"
    )
    document = ujson.loads(result.output)
    assert [(e["i"], e["degree"]) for e in document["entries"]] == [(0, 7)]
    assert document["entries"][0]["representations"] == [
        {"partition": [7], "multiplicity": 1, "dim": 120}
    ]


def test_tor_imax(invoke):
    result = invoke(
        "tor", "--lambda", "1,1", "--n", "3", "--l", "2", "--imax", "1",
        "--format", "json",
    )
    document = ujson.loads(result.output)
    assert {e["i"] for e in document["entries"]} == {0, 1}


@pytest.mark.parametrize(
    "args",
    [
        ("tor", "--lambda", "1,2", "--n", "3"),
        ("tor", "--lambda", "2", "--n", "0"),
        ("tor", "--lambda", "2", "--n", "2", "--l", "1", "--projective"),
        ("tor", "--lambda", "2", "--n", "2", "--format", "dot"),
    ],
)
def test_tor_usage_errors(invoke, args):
    assert invoke(*args).exit_code == EXIT_USAGE


# =============================================================================
# LATTICE
# =============================================================================


def test_lattice_dot(invoke):
    result = invoke("lattice", "--elem", "2,1", "--n", "3", "--dmax", "5")
    assert result.exit_code == 0
    lines = result.output.splitlines()
    assert lines[0] == "digraph lattice {"
    assert '  "2,1@3" [label="2,1@3"];' in lines
    assert '  "2,1@3" -> "3,1@4";' in lines
    assert lines[-1] == "}"


def test_lattice_json(invoke):
    result = invoke(
        "lattice", "--proj", "1", "--n", "2", "--dmax", "4",
        "--format", "json",
    )
    model = docs.lattice_from_json(result.output)
    assert model == lattice(ModuleModel.projective((1,), 2), 4)


def test_lattice_splice(invoke):
    result = invoke(
        "lattice", "--n", "3", "--splice", "2,1@3;3,1@4", "--glue", "5,1@6",
        "--format", "json",
    )
    assert result.exit_code == 0
    model = docs.lattice_from_json(result.output)
    assert len(model.nodes) == 8


def test_lattice_tensor_ext(invoke):
    result = invoke(
        "lattice", "--tensor-ext", "1,1", "--k", "1", "--n", "2",
        "--dmax", "4",
    )
    assert result.exit_code == 0
    lines = result.output.splitlines()
    assert '  "1,1:2,1@3" -> "2,1:3,1@4";' in lines
    assert '  "1,1:2,1@3" -> "2,1:2,2@4";' in lines


@pytest.mark.parametrize(
    "args",
    [
        ("lattice", "--n", "3", "--dmax", "4"),
        ("lattice", "--n", "3", "--elem", "1", "--proj", "1", "--dmax", "4"),
        ("lattice", "--n", "3", "--elem", "1"),
        ("lattice", "--n", "3", "--trunc", "1", "--dmax", "4"),
        ("lattice", "--n", "3", "--splice", "2,1@3"),
    ],
)
def test_lattice_usage_errors(invoke, args):
    assert invoke(*args).exit_code == EXIT_USAGE


# =============================================================================
# EXT
# =============================================================================


def test_ext_text(invoke):
    result = invoke("ext", "--lambda", "3,1", "--eta", "3,2", "--n", "3")
    assert result.exit_code == 0
    assert result.output == "[1]\n"


def test_ext_single_box_is_a_strip(invoke):
    result = invoke("ext", "--lambda", "2", "--eta", "3", "--n", "3")
    assert result.output == "[1]\n"


def test_ext_json(invoke):
    result = invoke(
        "ext", "--lambda", "2", "--eta", "4", "--n", "3", "--format", "json"
    )
    document = ujson.loads(result.output)
    assert document["kind"] == "ext"
    assert document["indices"] == []


# =============================================================================
# VERIFY
# =============================================================================


def test_verify_passes(invoke):
    result = invoke("verify", "coass", "--n", "2", "--max-size", "2")
    assert result.exit_code == 0
    assert "coass: PASS (10/10 passed)" in result.output


def test_verify_json(invoke):
    result = invoke(
        "verify", "filtration", "--max-n", "2", "--max-size", "2",
        "--extra", "2", "--format", "json",
    )
    assert result.exit_code == 0
    document = ujson.loads(result.output)
    assert document["kind"] == "verification"
    assert document["passed"] is True
    assert document["checked"] == 8


def test_verify_failure_exit_code(invoke, monkeypatch):
    failing = VerificationReport(
        suite="coass",
        reports=[CheckReport("coass", False, {"l": 1}, "mismatch")],
    )
    monkeypatch.setattr(
        verify_suites, "run_suite", lambda *args, **kwargs: failing
    )
    result = invoke("verify", "coass", "--n", "1", "--max-size", "1")
    assert result.exit_code == EXIT_FAILED
    assert "coass: FAIL (0/1 passed)" in result.output
    assert "mismatch" in result.output


@pytest.mark.parametrize(
    "args",
    [
        ("verify", "coass"),
        ("verify", "coass", "--n", "2", "--max-n", "2"),
        ("verify", "coass", "--n", "2", "--format", "dot"),
    ],
)
def test_verify_usage_errors(invoke, args):
    assert invoke(*args).exit_code == EXIT_USAGE


def test_verify_guardrail():
    app = EqresApplication(verbose=0, basis_cap=1)
    code = app.run_from_command_line(
        ["verify", "pieri", "--n", "2", "--max-size", "2"]
    )
    assert code == EXIT_GUARDRAIL


# =============================================================================
# FULL COMMAND LINE
# =============================================================================


def test_run_from_command_line(eqres_app, capsys):
    code = eqres_app.run_from_command_line(
        ["ext", "--lambda", "2", "--eta", "2", "--n", "3"]
    )
    assert code == EXIT_OK
    assert capsys.readouterr().out == "[0]\n"


@pytest.mark.parametrize(
    "argv",
    [
        ["tor", "--lambda", "2,1"],
        ["lattice", "--elem", "2,1", "--dmax", "5"],
    ],
)
def test_missing_option_is_a_usage_error(eqres_app, capsys, argv):
    assert eqres_app.run_from_command_line(argv) == EXIT_USAGE
    assert "Missing option" in capsys.readouterr().err


def test_unknown_command_is_a_usage_error(eqres_app, capsys):
    assert eqres_app.run_from_command_line(["resolve"]) == EXIT_USAGE
    assert "No such command" in capsys.readouterr().err


def test_version(eqres_app, capsys):
    assert eqres_app.run_from_command_line(["version"]) == EXIT_OK
    assert "eqres" in capsys.readouterr().out
