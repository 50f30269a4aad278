from __future__ import annotations

import time
from typing import Optional

from pydantic import BaseModel, NonNegativeInt, PositiveFloat


class BudgetExceeded(RuntimeError):
    """Raised when an enumeration tries to spend more work than remains."""


class EnumerationIncomplete(BudgetExceeded):
    """A search stopped early; carries whatever bracket it had established."""

    def __init__(
        self,
        message: str,
        *,
        explored_radius: Optional[int] = None,
        best_norm: Optional[int] = None,
        lower_bound: Optional[int] = None,
        upper_bound: Optional[int] = None,
    ) -> None:
        super().__init__(message)
        self.explored_radius = explored_radius
        self.best_norm = best_norm
        self.lower_bound = lower_bound
        self.upper_bound = upper_bound


class EnumerationBudget(BaseModel):
    """Node allowance plus an optional wall-clock deadline."""

    limit: Optional[NonNegativeInt] = None  # None means unlimited nodes
    seconds: Optional[PositiveFloat] = None
    _remaining: Optional[int] = None
    _deadline: Optional[float] = None

    # ----- pydantic v2 -------------------------------------------------
    def model_post_init(self, __ctx: object) -> None:
        self.reset()

    # ------------------------------------------------------------------
    def debit(self, units: int) -> None:
        """Spend units of enumeration work, enforcing both limits."""
        if units < 0:
            raise ValueError("units must be non-negative")
        if self._remaining is not None:
            if units > self._remaining:
                raise BudgetExceeded(
                    f"attempted to debit {units} nodes, only {self._remaining} left"
                )
            self._remaining -= units
        if self._deadline is not None and time.monotonic() > self._deadline:
            raise BudgetExceeded(f"time allowance of {self.seconds}s exhausted")

    @property
    def remaining(self) -> Optional[int]:
        """Unused node allowance, or None when unlimited."""
        return self._remaining

    def reset(self) -> None:
        """Restore the full allowance and restart the clock."""
        self._remaining = None if self.limit is None else int(self.limit)
        self._deadline = (
            None if self.seconds is None else time.monotonic() + float(self.seconds)
        )
