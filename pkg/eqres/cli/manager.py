import importlib

import attrs
from attrs import validators as valids

import typer

from .register import EqresCommandRegister
from ..res import EQRES_LOGO, EXIT_OK, EXIT_USAGE


_TYPER_CONFIG = {
    "help": f"{EQRES_LOGO} equivariant resolutions over Sym V",
    "no_args_is_help": True,
    "add_completion": False,
}

# the click flavour typer raises from, bundled or not
_CLICK_ERRORS = importlib.import_module(typer.BadParameter.__module__)


@attrs.define(frozen=True)
class EqresCLIManager:

    commands: [EqresCommandRegister] = attrs.field(
        converter=tuple,
        validator=valids.deep_iterable(
            member_validator=valids.instance_of(EqresCommandRegister),
            iterable_validator=valids.instance_of(tuple),
        ),
    )

    def make_cli_app(self, app):
        typer_app = typer.Typer(**_TYPER_CONFIG)
        for register in self.commands:
            for name, cmd_template in register.items():
                command_function = cmd_template.bind(app)
                decorator = typer_app.command(name=name)
                decorator(command_function)
        return typer_app

    def parse_and_run(self, app, argv=None):
        """Run the command line and return the process exit code."""
        cli_app = self.make_cli_app(app)
        command = typer.main.get_command(cli_app)
        try:
            result = command.main(
                args=argv, prog_name="eqres", standalone_mode=False
            )
        except _CLICK_ERRORS.Abort:
            return EXIT_USAGE
        except _CLICK_ERRORS.ClickException as err:
            err.show()
            return EXIT_USAGE
        return result if isinstance(result, int) else EXIT_OK
