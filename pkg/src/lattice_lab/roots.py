"""Root systems and the diagonal/reduced splitting of unimodular lattices."""

from __future__ import annotations

import logging
from typing import Dict, List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict

from ._internal.integer_matrix import hermite_basis, rank as matrix_rank, vecmat
from .budget import EnumerationBudget
from .common import IntMatrix
from .constructions import orthogonal_complement
from .enumeration import shortest_vectors
from .lattice import Lattice, LatticeError

logger = logging.getLogger(__name__)


class RootComponent(BaseModel):
    """One irreducible summand of the root system."""

    model_config = ConfigDict(frozen=True)

    type: Literal["A", "D", "E"]
    rank: int
    root_count: int
    basis: IntMatrix

    @property
    def name(self) -> str:
        return f"{self.type}{self.rank}"


class RootDecomposition(BaseModel):
    model_config = ConfigDict(frozen=True)

    components: Tuple[RootComponent, ...]
    total_roots: int

    def describe(self) -> str:
        """Compact name such as "E7+E7" or "D12"; "none" when rootless."""
        if not self.components:
            return "none"
        return "+".join(c.name for c in self.components)


def classify_component(rank: int, count: int) -> Tuple[str, int]:
    """ADE type from the (rank, number of roots) signature."""
    if count == rank * (rank + 1):
        return "A", rank
    if rank >= 4 and count == 2 * rank * (rank - 1):
        return "D", rank
    if (rank, count) in ((6, 72), (7, 126), (8, 240)):
        return "E", rank
    raise LatticeError(f"no ADE root system of rank {rank} with {count} roots")


def root_decomposition(
    lattice: Lattice, budget: Optional[EnumerationBudget] = None
) -> RootDecomposition:
    """Split the norm-2 vectors into orthogonal irreducible root systems."""
    roots = [v for v in shortest_vectors(lattice, 2, budget) if lattice.norm(v) == 2]
    positive = [v for v in roots if v > tuple(-x for x in v)]
    parent = list(range(len(positive)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    gram_rows = [vecmat(v, lattice.gram) for v in positive]
    for i in range(len(positive)):
        for j in range(i + 1, len(positive)):
            if sum(a * b for a, b in zip(gram_rows[i], positive[j])):
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[rj] = ri

    groups: Dict[int, List[Tuple[int, ...]]] = {}
    for i, v in enumerate(positive):
        groups.setdefault(find(i), []).append(v)

    components = []
    for members in groups.values():
        span_rank = matrix_rank(members)
        kind, size = classify_component(span_rank, 2 * len(members))
        components.append(
            RootComponent(
                type=kind,  # type: ignore[arg-type]
                rank=size,
                root_count=2 * len(members),
                basis=hermite_basis(members),
            )
        )
    components.sort(key=lambda c: ("ADE".index(c.type), -c.rank, c.basis))
    logger.debug("root system of %s: %s", lattice.label or "lattice", [c.name for c in components])
    return RootDecomposition(components=tuple(components), total_roots=len(roots))


def reduced_part(lattice: Lattice) -> Tuple[int, Lattice]:
    """Split off the norm-1 vectors: L = <1>^k ⊕ L_red."""
    positive = [v for v in shortest_vectors(lattice, 1) if v > tuple(-x for x in v)]
    k = len(positive)
    if k == 0:
        return 0, lattice
    label = f"{lattice.label}-red" if lattice.label else ""
    reduced = orthogonal_complement(lattice, positive, label=label)
    if reduced.rank + k != lattice.rank:
        raise LatticeError("norm-one vectors do not split off as an orthogonal summand")
    return k, reduced
