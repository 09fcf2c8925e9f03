"""Exception hierarchy shared by all modules."""


class EllipticIsingError(Exception):
    """Base class for every error raised by this package."""


class DomainError(EllipticIsingError, ValueError):
    """An argument lies outside the domain of the operation."""


class NearPoleError(EllipticIsingError, ArithmeticError):
    """A denominator fell below the pole threshold."""


class DegeneracyError(EllipticIsingError, ValueError):
    """Input geometry or divisor is degenerate (collinear vectors, coincident points)."""


class BranchError(EllipticIsingError, ValueError):
    """Input is on the wrong branch or leaves the regime an operation supports."""


class UnsupportedError(EllipticIsingError, NotImplementedError):
    """Requested combination is not provided (e.g. hyperbolic factor in spin-1)."""


class FlowHalt(EllipticIsingError, RuntimeError):
    """Integration of a divisor flow stopped early.

    The partial trajectory up to the last accepted step is kept on
    ``trajectory``; ``reason`` is a short label (``"collision"``,
    ``"branch"``, ``"negative_f"``).
    """

    def __init__(self, reason, message, trajectory=None):
        super().__init__(f"{reason}: {message}")
        self.reason = reason
        self.trajectory = trajectory
