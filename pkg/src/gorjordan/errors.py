"""Exception types shared across the package."""


class GorError(Exception):
    """Base class for all errors raised by gorjordan."""


class InputError(GorError):
    """Bad user input: unknown field, malformed sequence, conflicting options."""


class ParseError(InputError):
    def __init__(self, message: str, text: str = "", pos: int = -1):
        self.text = text
        self.pos = pos
        if pos >= 0:
            message = f"{message} at position {pos}"
            if text:
                message += f"\n  {text}\n  {' ' * pos}^"
        super().__init__(message)


class FieldMismatch(GorError):
    """Operands live over different coefficient fields."""


class DimensionMismatch(GorError):
    """Vectors or matrices of incompatible sizes."""


class NotInSpan(GorError):
    """A linear system has no solution, or a vector is not in a subspace."""


class WeightMismatch(GorError):
    """Two partitions of different total size were compared."""


class PreconditionError(GorError):
    """Arguments violate a documented precondition."""
