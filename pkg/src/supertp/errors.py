"""Exception hierarchy shared by the kernel, the identity engine and the CLI."""


class SuperAlgebraError(ValueError):
    """Base class for every input error raised by this package."""


class SignatureMismatch(SuperAlgebraError):
    """Operands live in different algebras."""


class ParityError(SuperAlgebraError):
    """A value does not have the parity an operation requires."""


class PreconditionError(SuperAlgebraError):
    """A structure does not satisfy the hypotheses an identity needs."""


class DSLSyntaxError(SuperAlgebraError):
    """Positioned parse error in a spec file or expression."""

    def __init__(self, message, line, column, expected=()):
        self.line = line
        self.column = column
        self.expected = tuple(expected)
        detail = f"{message} at line {line}, column {column}"
        if self.expected:
            detail += " (expected " + ", ".join(self.expected) + ")"
        super().__init__(detail)
