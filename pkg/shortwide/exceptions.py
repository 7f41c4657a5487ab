"""Exceptions raised by shortwide.

Errors caused by bad input subclass ``ValueError`` so that callers catching
``ValueError`` (the convention of the checkers in ``shortwide.utils``) keep
working.
"""


class ShortWideError(Exception):
    """Base class for every error raised by the package."""


class EdgeListError(ShortWideError, ValueError):
    """Malformed edge-list input.

    Parameters
    ----------
    message : str
        Description of the problem.
    line_number : int, optional
        1-based line of the offending record, when known.
    source : str, optional
        File name or other label of the input stream.
    """

    def __init__(self, message, line_number=None, source=None):
        self.line_number = line_number
        self.source = source
        where = ""
        if source is not None:
            where += f"{source}:"
        if line_number is not None:
            where += f"{line_number}:"
        super().__init__(f"{where} {message}" if where else message)


class EmptyGraphError(ShortWideError, ValueError):
    """Operation needs at least one node (or one pair of nodes)."""


class InvalidNodeError(ShortWideError, ValueError):
    """Node index outside ``range(n_nodes)`` or unknown node name."""


class UnreachableError(ShortWideError, ValueError):
    """Target cannot be reached from the source."""


class OracleSizeError(ShortWideError, ValueError):
    """Graph too large for exhaustive path enumeration."""


class DegenerateSampleError(ShortWideError, ValueError):
    """Sample too small or constant for a distribution fit."""


class FitConvergenceError(ShortWideError, RuntimeError):
    """A likelihood maximisation did not produce finite parameters."""


class IntegrationError(ShortWideError, RuntimeError):
    """Numerical integration missed its tolerance.

    Parameters
    ----------
    message : str
        Description of the failure.
    achieved : float
        Absolute error estimate reported by the integrator.
    """

    def __init__(self, message, achieved):
        self.achieved = achieved
        super().__init__(f"{message} (achieved abs. error {achieved:.3g})")


class EnsembleSpecError(ShortWideError, ValueError):
    """Invalid random-ensemble specification."""


class SwapError(ShortWideError, ValueError):
    """Reference graph cannot be rewired by double-edge swaps."""


class InvariantError(ShortWideError, RuntimeError):
    """A computed result broke a property that must always hold (a bug)."""
