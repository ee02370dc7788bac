class InputError(ValueError):
    """Bad argument: out-of-range vertex, invalid family parameters, universe mismatch."""


class ParseError(InputError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class CapacityError(RuntimeError):
    """Instance too large for an exponential-time exact solver."""


class UndefinedParameterError(ValueError):
    """The requested graph invariant is not defined for this instance."""
