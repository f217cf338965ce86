"""Exception types shared across the package."""


class GraphError(ValueError):
    """Invalid graph construction or operation argument."""


class Graph6Error(GraphError):
    """Malformed graph6 text."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.reason = message
        self.offset = offset


class CapExceeded(RuntimeError):
    """A configured size cap was exceeded; the computation was not attempted or abandoned."""

    def __init__(self, cap_name: str, cap: int, detail: str = ""):
        msg = f"{cap_name} cap {cap} exceeded"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)
        self.cap_name = cap_name
        self.cap = cap


class BudgetExceeded(CapExceeded):
    """Search node budget exhausted before an exact answer was reached."""

    def __init__(self, budget: int, detail: str = ""):
        super().__init__("search budget", budget, detail)


class UndefinedQuantity(ValueError):
    """The requested invariant does not exist for this graph (e.g. D' of K_2)."""


class ConstructionFailure(RuntimeError):
    """A constructive labeling could not be completed or failed certification."""
