"""Exceptions raised by eqres."""


class EqresError(Exception):
    """Base class of every error raised by eqres."""


class InvalidPartitionError(EqresError, ValueError):
    """A sequence or literal that is not a partition."""


class InvalidDiagramError(EqresError, ValueError):
    """A labeled diagram that breaks the marking rules."""


class PreconditionError(EqresError, ValueError):
    """An operation was called outside its domain."""


class ZeroModuleError(EqresError, ValueError):
    """The operation is undefined on the zero module."""


class GuardrailError(EqresError):
    """An instance exceeds the desk-scale limits."""


class OracleError(EqresError):
    """The brute-force oracle found an internal inconsistency."""
