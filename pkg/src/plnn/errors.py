class PlnnError(Exception):
    """Base class for errors raised by this package."""


class DimensionError(PlnnError, ValueError):
    pass


class PieceCapExceeded(PlnnError):
    """A construction would exceed the configured piece budget."""

    def __init__(self, needed: int, cap: int, what: str = "piecewise-linear function"):
        self.needed = needed
        self.cap = cap
        super().__init__(f"{what} would need up to {needed} pieces, above the cap of {cap}")


class ShapeError(PlnnError, ValueError):
    """Network layer shapes are inconsistent."""

    def __init__(self, message: str, layers: tuple[int, ...]):
        self.layers = layers
        super().__init__(message)


class FragmentError(PlnnError, ValueError):
    """A formula lies outside the fragment the ground evaluator decides."""
