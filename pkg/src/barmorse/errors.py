"""Exception types shared across the package."""


class DegenerateSimplexError(ValueError):
    """A simplex with a zero bar entry was passed where a nondegenerate one is required."""


class WrongLayerError(ValueError):
    """A simplex was passed to a vector field that is not defined on it
    (e.g. a negative entry given to the bit-chipping field)."""


class AdmissibilityViolation(RuntimeError):
    """A directed cycle was found in the V-boundary graph.

    Carries ``cycle``, the list of simplices along the offending path.
    """

    def __init__(self, cycle):
        self.cycle = list(cycle)
        super().__init__(f"directed cycle through {self.cycle[:4]}{'...' if len(self.cycle) > 4 else ''}")


class BudgetExceeded(RuntimeError):
    """A traversal hit its node budget before completing.

    Distinguishes "reach set too big for this budget" from "cyclic";
    carries ``partial``, the statistics gathered so far.
    """

    def __init__(self, partial=None):
        self.partial = partial
        super().__init__("node budget exceeded")


class IterationCapExceeded(RuntimeError):
    """Chain-map stabilization explored more basis simplices than the cap allows.

    Signals either a non-admissible field or an implementation bug.
    """
