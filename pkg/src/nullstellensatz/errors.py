"""Exception hierarchy.

Each class maps to one CLI exit code (see ``nullstellensatz.cli``).
"""


class NullstellensatzError(Exception):
    pass


class UsageError(NullstellensatzError, ValueError):
    """An API was called with arguments outside its contract."""


class InputError(NullstellensatzError, ValueError):
    """User-supplied data does not satisfy a documented precondition."""


class ParseError(InputError):
    def __init__(self, message, text="", position=0):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position}")


class DuplicateElementError(InputError):
    def __init__(self, element, first, second):
        self.element = element
        self.positions = (first, second)
        super().__init__(
            f"duplicate element {element} at positions {first + 1} and {second + 1}")


class GridSizeError(InputError):
    def __init__(self, axis, required, actual):
        self.axis = axis
        self.required = required
        self.actual = actual
        super().__init__(
            f"axis {axis} needs {required} point(s) (exponent {required - 1}), got {actual}")


class CapExceededError(InputError):
    pass


class IntegrityError(NullstellensatzError, ArithmeticError):
    """An exact division had a nonzero remainder."""


class InternalError(NullstellensatzError, RuntimeError):
    """A checked mathematical identity failed; indicates a bug."""
