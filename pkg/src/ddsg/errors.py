"""Exception hierarchy shared by the solvers and the command line."""


class DdsgError(Exception):
    """Base class for every error raised by this package."""

    exit_code = 1


class InputError(DdsgError, ValueError):
    """Malformed graph, color file, parameter or demand vector."""

    exit_code = 2


class InfeasibleInstance(DdsgError):
    """The instance admits no feasible subset (e.g. a demand exceeds its color class)."""

    exit_code = 3


class InfeasibleExtension(InfeasibleInstance):
    """Diversify ran out of nodes before reaching the requested dominance ratio."""


class ContractViolation(DdsgError):
    """An operation was called outside its documented precondition."""

    exit_code = 1


class SolverError(DdsgError):
    """The LP backend failed numerically or returned an inconsistent answer."""

    exit_code = 4


class ResourceExhausted(SolverError):
    """Branch-and-bound exceeded its node budget."""

    def __init__(self, message, context=None):
        super().__init__(message)
        self.context = context
