"""Runtime checks of call arguments, backed by pydantic."""

import functools
from typing import Annotated

import pydantic

from ..errors import PreconditionError

CONFIG = pydantic.ConfigDict(arbitrary_types_allowed=True)

#: Dimension of V or any other strictly positive count.
Positive = Annotated[int, pydantic.Field(ge=1)]

#: Sizes, indices and degree offsets.
NonNegative = Annotated[int, pydantic.Field(ge=0)]


def validate_call(func):
    """``pydantic.validate_call`` allowing arbitrary annotated types."""
    return pydantic.validate_call(config=CONFIG)(func)


def precondition_call(func):
    """Validate like :func:`validate_call` but fail with our own error.

    Invalid arguments raise :class:`PreconditionError` listing every
    offending parameter.

    """
    validated = validate_call(func)

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return validated(*args, **kwargs)
        except pydantic.ValidationError as err:
            problems = "; ".join(
                f"{'.'.join(map(str, e['loc']))}: {e['msg']}"
                for e in err.errors()
            )
            raise PreconditionError(
                f"{func.__name__}() got {problems}"
            ) from err

    return wrapper
