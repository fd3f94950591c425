class InputError(ValueError):
    """Malformed or out-of-contract input (CLI exit code 1)."""


class NotGorensteinError(InputError):
    pass


class ContractError(RuntimeError):
    """An operation was called outside its precondition."""


class DomainError(KeyError):
    """A table cochain was evaluated outside its window."""

    def __init__(self, tuple_):
        super().__init__(tuple_)
        self.tuple = tuple_

    def __str__(self):
        return f"table cochain undefined at {self.tuple!r}"


class UnsupportedRepresentation(TypeError):
    pass


class ResourceError(RuntimeError):
    pass


class InvalidStructure(ValueError):
    """A supplied Poisson structure fails dp = 0 or the Jacobi identity."""


class InvariantViolation(AssertionError):
    """Internal cross-check failed (CLI exit code 2)."""
