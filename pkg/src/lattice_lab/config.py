"""Run configuration shared by the command line and library callers."""

from __future__ import annotations

import os
from typing import Any, Dict, Literal, Optional, Tuple

from pydantic import BaseModel, Field, PositiveFloat, PositiveInt, field_validator, model_validator

from .budget import EnumerationBudget
from .common import LatticeVector
from .enumeration import DEFAULT_LEAF_CAP
from .invariants import DEFAULT_NORM_BOUND, InvariantSearch, SearchMode, check_modulus
from .lattice import Lattice

THREADS_ENV = "LATTICE_LAB_THREADS"


def default_threads() -> int:
    """Thread count from $LATTICE_LAB_THREADS, or 1 when it is unset."""
    raw = os.environ.get(THREADS_ENV, "").strip()
    if not raw:
        return 1
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{THREADS_ENV} must be an integer, got {raw!r}") from None


class RunConfig(BaseModel):
    """Search mode, limits and output format for one run.

    ``mode`` left unset picks exhaustive search up to rank 16 and a witness
    scan above that.
    """

    mode: Optional[SearchMode] = None
    norm_bound: int = DEFAULT_NORM_BOUND
    threads: int = Field(default_factory=default_threads)
    budget_seconds: Optional[PositiveFloat] = None
    modulus: Optional[int] = None
    output: Literal["text", "json"] = "text"
    force: bool = False
    bulk_leaf_cap: PositiveInt = DEFAULT_LEAF_CAP
    witnesses: Tuple[LatticeVector, ...] = ()

    @field_validator("threads")
    @classmethod
    def _positive_threads(cls, threads: int) -> int:
        if threads < 1:
            raise ValueError(f"threads must be at least 1, got {threads}")
        return threads

    @field_validator("modulus")
    @classmethod
    def _odd_modulus(cls, modulus: Optional[int]) -> Optional[int]:
        return None if modulus is None else check_modulus(modulus)

    @model_validator(mode="after")
    def _mode_constraints(self) -> "RunConfig":
        if self.mode == "witness" and self.norm_bound < 2:
            raise ValueError("witness mode needs a norm bound of at least 2")
        if self.mode == "user" and not self.witnesses:
            raise ValueError("user mode needs at least one witness vector")
        return self

    def budget(self) -> Optional[EnumerationBudget]:
        """Enumeration budget for the configured wall-clock allowance, if any."""
        if self.budget_seconds is None:
            return None
        return EnumerationBudget(seconds=self.budget_seconds)

    def search_options(self) -> Dict[str, Any]:
        """Keyword arguments for InvariantSearch and the invariant wrappers."""
        return {
            "norm_bound": self.norm_bound,
            "threads": self.threads,
            "budget": self.budget(),
            "witnesses": self.witnesses,
            "leaf_cap": self.bulk_leaf_cap,
            "force": self.force,
        }

    def search(self, lattice: Lattice) -> InvariantSearch:
        """InvariantSearch over the lattice with this configuration."""
        return InvariantSearch(lattice, mode=self.mode, **self.search_options())
