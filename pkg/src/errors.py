# src/errors.py
"""
Exception types raised across the toolkit.

Every concrete error also derives from the builtin it refines, so code that
catches ValueError / RuntimeError keeps working.
"""


class LAlphaError(Exception):
    """Base class for all toolkit errors."""


# ---------- graph construction / input ----------


class ParameterOutOfRange(LAlphaError, ValueError):
    """A constructor or theorem parameter violates its precondition."""


class InvalidVertex(LAlphaError, ValueError):
    """A vertex index is outside 0..n-1 of its graph."""


class EdgeListParseError(LAlphaError, ValueError):
    """An edge-list file is malformed."""


# ---------- alpha domain ----------


class AlphaOutOfRange(LAlphaError, ValueError):
    """alpha is outside [0, 1]."""


class AlphaBoundary(LAlphaError, ValueError):
    """alpha = 1 passed to a closed form that only holds on [0, 1)."""


# ---------- theorem hypotheses ----------


class NotEquitable(LAlphaError, ValueError):
    """A partition does not have constant block row sums."""


class NotRegular(LAlphaError, ValueError):
    """A regular-graph theorem received a non-regular graph or spectrum."""


class NotConnected(LAlphaError, ValueError):
    """A theorem that assumes a connected graph received a disconnected one."""


class NotOrthogonal(LAlphaError, ValueError):
    """A supplied eigenvector is not orthogonal to the all-ones vector."""


class DegreeMismatch(LAlphaError, ValueError):
    """Polynomial inputs have inconsistent degrees."""


class SizeMismatch(LAlphaError, ValueError):
    """Two spectra (or matrices) that must have equal size do not."""


class UnknownTheorem(LAlphaError, ValueError):
    """A verification case names a theorem id that does not exist."""


# ---------- numerics ----------


class ConvergenceFailure(LAlphaError, RuntimeError):
    """The Jacobi iteration hit its sweep cap without converging."""
