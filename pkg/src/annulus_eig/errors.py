"""Exception types shared across the package."""


class GeometryError(ValueError):
    """Invalid annulus geometry (inner disc not strictly inside the unit disc)."""


class MeshError(RuntimeError):
    """Mesh integrity failure (degenerate triangle, orphaned boundary node)."""


class ConvergenceError(RuntimeError):
    """Iterative eigensolver failed to reach the requested tolerance.

    Carries the last iterate so callers can inspect how far the solve got.
    """

    def __init__(self, message, eigenvalue=None, u=None, residual=None, iterations=None):
        super().__init__(message)
        self.eigenvalue = eigenvalue
        self.u = u
        self.residual = residual
        self.iterations = iterations
