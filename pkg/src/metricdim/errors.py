"""Exception hierarchy shared by every module."""


class DomainError(ValueError):
    """An argument lies outside the range an operation is defined on."""


class DisconnectedGraphError(DomainError):
    """The graph is disconnected, so some distances would be infinite."""


class NotApplicableError(DomainError):
    """A bound or check does not apply to the given instance."""


class BudgetExceededError(RuntimeError):
    """An exact search ran out of budget before it could certify a result.

    ``lower`` and ``upper`` carry the best bounds known at abort time
    (``None`` when no bound is available), ``nodes`` the work done so far.
    """

    def __init__(self, message, lower=None, upper=None, nodes=0):
        super().__init__(message)
        self.lower = lower
        self.upper = upper
        self.nodes = nodes
