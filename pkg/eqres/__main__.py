import sys

import typer

from .app import EqresApplication
from .cli.register import exit_code_of
from .errors import EqresError


def main(argv=None):
    try:
        app = EqresApplication.from_env()
    except EqresError as err:
        typer.echo(f"Error: {err}", err=True)
        return exit_code_of(err)
    return app.run_from_command_line(argv)


if __name__ == "__main__":
    sys.exit(main())
