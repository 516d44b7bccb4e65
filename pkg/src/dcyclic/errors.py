"""Exception hierarchy shared by every module of the package."""


class DCyclicError(Exception):
    """Base class for all package errors."""


class ContextMismatchError(DCyclicError, TypeError):
    """Operands live over different prime fields."""


class FieldDivisionError(DCyclicError, ZeroDivisionError):
    """Division by zero in F_p or by the zero polynomial."""


class UndefinedGcdError(DCyclicError, ValueError):
    """gcd(0, 0) was requested."""


class NotInvertibleError(DCyclicError, ValueError):
    """Polynomial has no inverse modulo the given modulus."""


class InvalidGeneratorError(DCyclicError, ValueError):
    """Generator triple violates a divisibility condition."""

    def __init__(self, component, condition, detail=""):
        self.component = component
        self.condition = condition
        msg = f"component v{component}: {condition}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


class DimensionError(DCyclicError, ValueError):
    """Vector or matrix shapes do not agree."""


class TooLargeError(DCyclicError):
    """Exhaustive enumeration would exceed the configured cap."""

    def __init__(self, required, cap):
        self.required = required
        self.cap = cap
        super().__init__(f"enumeration needs {required} vectors, cap is {cap}")


class InvariantViolation(DCyclicError, AssertionError):
    """An internal consistency check failed; indicates a bug or a bad input that slipped through."""


class ParseError(DCyclicError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
