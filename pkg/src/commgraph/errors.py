"""Exception types raised across the package."""


class CommGraphError(Exception):
    """Base class for all package errors."""


class EmptyGeneratorSet(CommGraphError, ValueError):
    pass


class ClosureExceedsCap(CommGraphError, RuntimeError):
    pass


class SingularGenerator(CommGraphError, ValueError):
    pass


class IndexOutOfRange(CommGraphError, IndexError):
    pass


class AbelianGroup(CommGraphError, ValueError):
    """Raised where a construction is undefined for abelian groups."""


class UnknownGroupName(CommGraphError, KeyError):
    pass


class MalformedExpression(CommGraphError, ValueError):
    pass


class EmptyEdgeSet(CommGraphError, ValueError):
    pass


class InconsistentInputs(CommGraphError, ValueError):
    pass


class UnsupportedComponent(CommGraphError, ValueError):
    pass


class UncertifiedComparison(CommGraphError, ArithmeticError):
    pass
