"""Exception types shared across the package."""


class InputError(ValueError):
    """Malformed or out-of-contract input."""


class ParseError(InputError):
    """Bad graph text or certificate data; message names the offending item."""


class NotAnLbfsOrderingError(InputError):
    """An ordering handed to a sweep that requires an LBFS ordering fails the
    replay check."""

    def __init__(self, position):
        self.position = position
        super().__init__(
            f"not an LBFS ordering: vertex at position {position} is outside "
            f"the candidate set"
        )


class NotIntervalOrderingError(InputError):
    """Precondition failure of a certificate construction; carries the
    violating triple."""

    def __init__(self, violation):
        self.violation = violation
        super().__init__(f"not an interval ordering: {violation}")


class NotUmbrellaOrderingError(InputError):
    def __init__(self, violation):
        self.violation = violation
        super().__init__(f"not an umbrella ordering: {violation}")


class InvalidCliquePathError(InputError):
    def __init__(self, defect):
        self.defect = defect
        super().__init__(f"invalid clique path: {defect}")


class DisconnectedGraphError(InputError):
    """Operation defined only for connected graphs."""


class SizeGuardExceeded(RuntimeError):
    """An exponential-time oracle was asked to run beyond its size guard."""

    def __init__(self, what, size, limit):
        self.size = size
        self.limit = limit
        super().__init__(f"{what}: size {size} exceeds guard {limit}")
