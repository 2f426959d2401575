"""Exception types shared across the package.

Errors split into two families so the command line can map them onto exit
codes: ``BoundError`` (a size or shape guard was violated, exit 2) and plain
``ValueError`` subclasses for malformed input (exit 1).
"""

from __future__ import annotations

import os


class BoundError(ValueError):
    """An order, shape or resource bound was violated."""


class ResourceLimitError(BoundError):
    """The requested computation exceeds a configured size guard."""


class ShapeLevelError(BoundError):
    """A shape index does not fit the level it is used at."""


class OrderMismatchError(ValueError):
    """Two objects that must share an order do not."""


class NotInvariantError(ValueError):
    """A span is not closed under the requested action."""


def max_order(default: int) -> int:
    """Guard ceiling, raised (never lowered) by the ``PAREC_MAX_N`` variable."""
    raw = os.environ.get("PAREC_MAX_N")
    if not raw:
        return default
    try:
        return max(default, int(raw))
    except ValueError:
        return default


def check_order(n: int, limit: int, what: str) -> None:
    if n < 1:
        raise BoundError(f"{what}: order must be positive, got {n}")
    if n > max_order(limit):
        raise ResourceLimitError(
            f"{what}: order out of supported range (n={n}, limit={max_order(limit)})"
        )
