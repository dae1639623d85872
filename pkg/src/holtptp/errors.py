"""Exception hierarchy shared by every stage of the toolkit."""

from __future__ import annotations


class HolError(Exception):
    """Base class for errors raised on malformed HOL input."""


class UnknownConstant(HolError):
    pass


class UnknownTypeOperator(HolError):
    pass


class ArityMismatch(HolError):
    pass


class NotAFunction(HolError):
    pass


class TypeMismatch(HolError):
    """Argument type differs from the domain of the function it is applied to."""


class InstanceMismatch(HolError):
    pass


class NoMatch(HolError):
    pass


class NotAProposition(HolError):
    pass


class TheoryError(Exception):
    """Located error raised while reading a theory file."""

    kind = "TheoryError"

    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.message = message
        self.line = line
        self.column = column
        super().__init__(f"{line}:{column}: {self.kind}: {message}")


class HolSyntaxError(TheoryError):
    kind = "SyntaxError"


class UnknownName(TheoryError):
    kind = "UnknownName"


class ForwardReference(TheoryError):
    kind = "ForwardReference"


class DuplicateName(TheoryError):
    kind = "DuplicateName"


class HolTypeError(TheoryError):
    kind = "TypeError"


class UnknownTheorem(Exception):
    pass


class RoleMismatch(Exception):
    pass


class DialectViolation(Exception):
    """A formula uses a construct its dialect forbids."""


class TptpSyntaxError(Exception):
    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.message = message
        self.line = line
        self.column = column
        super().__init__(f"{line}:{column}: {message}")
