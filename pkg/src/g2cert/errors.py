"""Exception types shared across the package."""


class PreconditionError(ValueError):
    """A mathematical precondition of an operation is violated; the caller
    asked a question whose answer would be meaningless, not merely false."""


class DegenerateFormError(PreconditionError):
    """A bilinear form required to be nondegenerate is degenerate."""


class NotSemisimpleError(PreconditionError):
    """An operation requiring a semisimple algebra received a non-semisimple one."""
