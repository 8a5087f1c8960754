import logging

import pytest

from eqres import EqresApplication
from eqres.__main__ import main
from eqres.app import VERBOSE_TO_LOGGING
from eqres.errors import PreconditionError
from eqres.res import EXIT_USAGE
from eqres.tensor_lab import DEFAULT_BASIS_CAP


def test_defaults():
    app = EqresApplication()
    assert app.verbose == 2
    assert app.basis_cap == DEFAULT_BASIS_CAP
    assert app.workers == 1
    assert "tor" in app.commands.not_available


@pytest.mark.parametrize("verbose", range(5))
def test_verbose_sets_the_log_level(verbose):
    app = EqresApplication(verbose=verbose)
    assert app.logger.name == "eqres"
    assert app.logger.level == VERBOSE_TO_LOGGING[verbose]


def test_logger_gets_one_handler():
    EqresApplication(verbose=0)
    EqresApplication(verbose=0)
    handlers = logging.getLogger("eqres").handlers
    assert len(handlers) == 1


@pytest.mark.parametrize(
    "kwargs", [{"verbose": 5}, {"basis_cap": 0}, {"workers": 0}]
)
def test_invalid_configuration(kwargs):
    with pytest.raises(ValueError):
        EqresApplication(**kwargs)


def test_from_env():
    app = EqresApplication.from_env(
        {"EQRES_VERBOSE": "3", "EQRES_BASIS_CAP": "500", "EQRES_WORKERS": "2"}
    )
    assert (app.verbose, app.basis_cap, app.workers) == (3, 500, 2)


def test_from_env_ignores_other_variables():
    app = EqresApplication.from_env({"VERBOSE": "4"})
    assert app.verbose == 2


@pytest.mark.parametrize(
    "environ", [{"EQRES_WORKERS": "many"}, {"EQRES_VERBOSE": "9"}]
)
def test_from_env_rejects_garbage(environ):
    with pytest.raises(PreconditionError):
        EqresApplication.from_env(environ)


def test_main_reports_bad_environment(monkeypatch, capsys):
    monkeypatch.setenv("EQRES_BASIS_CAP", "0")
    assert main(["version"]) == EXIT_USAGE
    assert "EQRES_" in capsys.readouterr().err


def test_from_os_environ(monkeypatch):
    monkeypatch.setenv("EQRES_BASIS_CAP", "42")
    assert EqresApplication.from_env().basis_cap == 42
