import logging
import os

import attrs
from attrs import validators as valids
from rich.console import Console
from rich.logging import RichHandler

from .cli import CLI_BUILTINS, EqresCLIManager, EqresCommandRegister
from .errors import PreconditionError
from .tensor_lab import DEFAULT_BASIS_CAP


VERBOSE_TO_LOGGING = {
    0: logging.CRITICAL,  # 50
    1: logging.ERROR,  # 40
    2: logging.WARNING,  # 30
    3: logging.INFO,  # 20
    4: logging.DEBUG,  # 10
}

_ENV_PREFIX = "EQRES_"

# =============================================================================
# MAIN APPLICATION CLASS
# =============================================================================


@attrs.define(frozen=True)
class EqresApplication:
    """Configuration root of eqres.

    Holds the verbosity, the basis guardrail and the worker count, and
    builds the command line interface from its command registers.

    """

    verbose: int = attrs.field(
        default=2,
        converter=int,
        validator=valids.and_(
            valids.instance_of(int), valids.ge(0), valids.le(4)
        ),
    )
    basis_cap: int = attrs.field(
        default=DEFAULT_BASIS_CAP,
        converter=int,
        validator=valids.and_(valids.instance_of(int), valids.ge(1)),
    )
    workers: int = attrs.field(
        default=1,
        converter=int,
        validator=valids.and_(valids.instance_of(int), valids.ge(1)),
    )

    logger: logging.Logger = attrs.field(init=False, repr=False)

    commands: EqresCommandRegister = attrs.field(init=False, repr=False)

    # DEFAULTS ================================================================

    @commands.default
    def _commands_default(self):
        return EqresCommandRegister(
            name="Application commands", not_available=CLI_BUILTINS
        )

    @logger.default
    def _logger_default(self):
        logger = logging.getLogger("eqres")

        log_level = VERBOSE_TO_LOGGING.get(self.verbose, logging.CRITICAL)
        logger.setLevel(log_level)

        if not any(isinstance(h, RichHandler) for h in logger.handlers):
            handler = RichHandler(
                console=Console(stderr=True), show_path=False
            )
            logger.addHandler(handler)

        return logger

    # API =====================================================================

    @classmethod
    def from_env(cls, environ=None):
        """Configuration from the ``EQRES_*`` environment variables.

        ``EQRES_VERBOSE``, ``EQRES_BASIS_CAP`` and ``EQRES_WORKERS`` are read
        when present; invalid values raise :class:`PreconditionError`.

        """
        environ = os.environ if environ is None else environ
        kwargs = {}
        for field in ("verbose", "basis_cap", "workers"):
            value = environ.get(_ENV_PREFIX + field.upper())
            if value is not None:
                kwargs[field] = value
        try:
            return cls(**kwargs)
        except (TypeError, ValueError) as err:
            raise PreconditionError(
                f"invalid {_ENV_PREFIX}* configuration: {err}"
            ) from err

    @property
    def version(self):
        from . import VERSION

        return VERSION

    def run_from_command_line(self, argv=None):
        """Run the command line on ``argv`` and return the exit code."""
        cli_manager = EqresCLIManager(commands=[self.commands, CLI_BUILTINS])
        return cli_manager.parse_and_run(app=self, argv=argv)
