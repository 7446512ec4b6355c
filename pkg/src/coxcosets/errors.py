"""Exception hierarchy shared by all modules."""


class CoxeterError(Exception):
    """Base class for every error raised by this package."""


class MatrixError(CoxeterError, ValueError):
    """A Coxeter matrix is malformed."""


class NonSymmetric(MatrixError):
    pass


class BadDiagonal(MatrixError):
    pass


class BadEntry(MatrixError):
    pass


class NotFiniteType(CoxeterError, ValueError):
    """The Coxeter diagram does not define a finite group."""


class OrderMismatch(CoxeterError):
    """Enumeration produced a different order than the classification."""


class ResourceLimit(CoxeterError):
    """A configured element or node cap would be exceeded."""


class NotComparable(CoxeterError, ValueError):
    pass


class MaxMismatch(CoxeterError, ValueError):
    pass


class UnknownElement(CoxeterError, ValueError):
    pass


class EmptyGraph(CoxeterError, ValueError):
    pass


class InvariantError(CoxeterError, AssertionError):
    """An internal consistency check failed; this always signals a bug."""


def require(condition: bool, message: str) -> None:
    if not condition:
        raise InvariantError(message)
