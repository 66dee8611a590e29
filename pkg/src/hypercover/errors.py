"""Exception hierarchy. InputError maps to exit code 1, NumericalError to 2."""


class HypercoverError(Exception):
    """Base class for all errors raised by this package."""


class InputError(HypercoverError):
    """Bad user input: malformed files, invalid parameters."""


class NumericalError(HypercoverError):
    """Numerical failure: disconnected graphs, eigensolver breakdown."""


class RaggedRowsError(InputError):
    def __init__(self, path, row, expected, found):
        self.path = path
        self.row = row
        super().__init__(
            f"{path}: row {row + 1} has {found} columns, expected {expected}"
        )


class NonNumericCellError(InputError):
    def __init__(self, path, row, col, value):
        self.path = path
        self.row = row
        self.col = col
        super().__init__(
            f"{path}: cell at row {row + 1}, column {col + 1} is not a finite "
            f"number: {value!r}"
        )


class DegenerateRowError(InputError):
    def __init__(self, row):
        self.row = row
        super().__init__(f"row {row} is constant; cannot be scaled to unit norm")


class InvalidOrderError(InputError):
    def __init__(self, order, n_nodes):
        self.order = order
        super().__init__(f"hyperedge order {order} must be in [2, {n_nodes}]")


class DimensionMismatchError(InputError):
    pass


class EmptyCommunityError(InputError):
    pass


class BoundsError(InputError):
    """Invalid search bounds, e.g. for the eigengap scan."""


class NoConnectedOrderError(NumericalError):
    def __init__(self, e_max):
        self.e_max = e_max
        super().__init__(
            f"no hyperedge order <= {e_max} yields a connected line graph for "
            f"every subject"
        )


class IsolatedVertexError(NumericalError):
    def __init__(self, vertex):
        self.vertex = vertex
        super().__init__(f"vertex {vertex} has zero degree; Laplacian undefined")


class DisconnectedLineGraphError(NumericalError):
    def __init__(self, order, context="group"):
        self.order = order
        super().__init__(
            f"{context}-level line graph at order {order} is disconnected; "
            f"increase the order (or use auto order selection)"
        )


class EigenFailureError(NumericalError):
    pass
