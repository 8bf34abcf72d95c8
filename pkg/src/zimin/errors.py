"""Exception types shared across the package."""

from __future__ import annotations


class ZiminError(Exception):
    """Base class for errors raised by this package."""


class SizeLimitError(ZiminError):
    """An operation would materialize an object above the configured cap."""


class NotAFactorError(ZiminError):
    """The input word is not a factor of any Zimin word."""


class EnumerationLimitError(ZiminError):
    """Enumeration was refused because the solution count exceeds the limit.

    The exact count is available as ``.count`` so callers can decide
    whether to retry with a larger limit.
    """

    def __init__(self, count: int, limit: int):
        super().__init__(f"{count} solutions exceed enumeration limit {limit}")
        self.count = count
        self.limit = limit
