from fractions import Fraction


class SkeletaError(ValueError):
    pass


class InputError(SkeletaError):
    pass


class DisconnectedGraphError(InputError):
    pass


class MalformedCoverError(SkeletaError):
    pass


class InconsistentDataError(SkeletaError):
    pass


class InconsistentAnchorsError(InconsistentDataError):
    """
    Raised when Dirichlet data over-determines the different function.

    Attributes
    ----------
    vertex : str
        The vertex whose Riemann-Hurwitz equation fails.
    residual : Fraction
        Laplacian minus target at that vertex.

    """

    def __init__(self, vertex: str, residual: Fraction):
        super().__init__(
            f"anchors are inconsistent: riemann-hurwitz fails at '{vertex}' "
            f"with residual {residual}"
        )
        self.vertex = vertex
        self.residual = residual


class DocumentError(SkeletaError):
    def __init__(self, code: str, message: str):
        super().__init__(f"[{code}] {message}")
        self.code = code


__all__ = [
    "SkeletaError",
    "InputError",
    "DisconnectedGraphError",
    "MalformedCoverError",
    "InconsistentDataError",
    "InconsistentAnchorsError",
    "DocumentError",
]
