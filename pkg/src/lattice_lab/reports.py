"""The Elkies-list regression report.

Up to diagonal summands there are fourteen unimodular lattices with no
characteristic vector of norm below n − 8. For each one that can be built
the report enumerates a₂ and a₃, the characteristic minimum, the root
system, and m, f₂, f₄.
"""

from __future__ import annotations

import logging
from typing import Dict, List, Mapping, Optional, Tuple

from pydantic import BaseModel

from .budget import BudgetExceeded
from .config import RunConfig
from .constructions import named
from .enumeration import count_by_norm, min_characteristic_norm
from .lattice import Lattice, LatticeError
from .roots import root_decomposition

logger = logging.getLogger(__name__)

# (label, rank, catalog name or None when no glue data ships)
ELKIES_LIST: Tuple[Tuple[str, int, Optional[str]], ...] = (
    ("E8", 8, "E8"),
    ("D12", 12, "Gamma12"),
    ("E7^2", 14, "E7^2"),
    ("A15", 15, "A15"),
    ("D8^2", 16, "D8^2"),
    ("A11E6", 17, None),
    ("D6^3", 18, "D6^3"),
    ("A9^2", 18, None),
    ("A7^2D5", 19, None),
    ("D4^5", 20, "D4^5"),
    ("A5^4", 20, None),
    ("A3^7", 21, None),
    ("A1^22", 22, "A1^22"),
    ("O23", 23, "O23"),
)

NEEDS_GLUE = "needs user glue spec"


def a2_formula(n: int) -> int:
    """Number of norm-2 vectors of a rank-n lattice on the list."""
    return 2 * n * (23 - n)


def a3_formula(n: int) -> int:
    """Number of norm-3 vectors of a rank-n lattice on the list."""
    return 8 * n * (28 - n) * (n - 8) // 3


class ElkiesRow(BaseModel):
    label: str
    rank: int
    constructed: bool
    note: str = ""
    roots: Optional[str] = None
    a2: Optional[int] = None
    a2_formula: int
    a3: Optional[int] = None
    a3_formula: int
    char_min: Optional[int] = None
    char_bound: int
    m: Optional[int] = None
    f2: Optional[int] = None
    f4: Optional[int] = None
    exact: bool = False

    @property
    def consistent(self) -> bool:
        """Enumerated counts match the formulas and the characteristic bound holds."""
        if not self.constructed:
            return True
        return (
            self.a2 == self.a2_formula
            and self.a3 == self.a3_formula
            and self.char_min is not None
            and self.char_min >= self.char_bound
        )


class ElkiesReport(BaseModel):
    rows: List[ElkiesRow]

    @property
    def consistent(self) -> bool:
        return all(row.consistent for row in self.rows)

    def render(self) -> str:
        header = f"{'lattice':<8} {'n':>3} {'roots':<12} {'a2':>11} {'a3':>13} {'char':>8} {'m':>3} {'f2':>3} {'f4':>3}"
        lines = [header]
        for row in self.rows:
            if not row.constructed:
                lines.append(f"{row.label:<8} {row.rank:>3} {row.note}")
                continue
            tag = "" if row.exact else " (lower bounds)"
            lines.append(
                f"{row.label:<8} {row.rank:>3} {row.roots or '':<12} "
                f"{_pair(row.a2, row.a2_formula):>11} {_pair(row.a3, row.a3_formula):>13} "
                f"{_pair(row.char_min, row.char_bound):>8} "
                f"{_cell(row.m):>3} {_cell(row.f2):>3} {_cell(row.f4):>3}{tag}"
            )
        return "\n".join(lines)


def _pair(found: Optional[int], expected: int) -> str:
    return f"{_cell(found)}/{expected}"


def _cell(value: Optional[int]) -> str:
    return "?" if value is None else str(value)


def elkies_row(
    label: str,
    rank: int,
    lattice: Optional[Lattice],
    config: RunConfig,
    *,
    invariants: bool = True,
) -> ElkiesRow:
    row = ElkiesRow(
        label=label,
        rank=rank,
        constructed=lattice is not None,
        note="" if lattice is not None else NEEDS_GLUE,
        a2_formula=a2_formula(rank),
        a3_formula=a3_formula(rank),
        char_bound=rank - 8,
    )
    if lattice is None:
        return row
    if lattice.rank != rank:
        raise LatticeError(f"{label} was built with rank {lattice.rank}, expected {rank}")
    counts = count_by_norm(lattice, 3)
    update: Dict[str, object] = {
        "roots": root_decomposition(lattice).describe(),
        "a2": counts[2],
        "a3": counts[3],
        "char_min": min_characteristic_norm(lattice),
    }
    logger.info("%s: a2=%d a3=%d char-min=%d", label, counts[2], counts[3], update["char_min"])
    if counts[1]:
        logger.warning("%s has %d vectors of norm 1", label, counts[1])
    if invariants:
        try:
            search = config.search(lattice)
            values = {name: search.compute(name) for name in ("m", "f2", "f4")}  # type: ignore[arg-type]
            update.update({name: report.value for name, report in values.items()})
            update["exact"] = all(report.exact for report in values.values())
        except BudgetExceeded as exc:
            logger.warning("%s: invariants skipped (%s)", label, exc)
    return row.model_copy(update=update)


def elkies_report(
    config: Optional[RunConfig] = None,
    extra: Optional[Mapping[str, Lattice]] = None,
    *,
    invariants: bool = True,
) -> ElkiesReport:
    """One row per entry of the list; ``extra`` supplies lattices for the rows without glue data."""
    config = config or RunConfig()
    extra = dict(extra or {})
    unknown = set(extra) - {label for label, _, _ in ELKIES_LIST}
    if unknown:
        raise LatticeError(f"unknown Elkies labels {sorted(unknown)}")
    rows = []
    for label, rank, catalog_name in ELKIES_LIST:
        lattice = extra.get(label)
        if lattice is None and catalog_name is not None:
            lattice = named(catalog_name)
        rows.append(elkies_row(label, rank, lattice, config, invariants=invariants))
    return ElkiesReport(rows=rows)
