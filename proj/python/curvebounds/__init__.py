"""Exact intersection bounds for pairs of curves in P^4."""

from ._curvebounds import *  # noqa: F401,F403
from ._curvebounds import IntegralityError

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
