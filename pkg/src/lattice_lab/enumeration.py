"""Short-vector and coset-minimum enumeration on top of the reduced frame."""

from __future__ import annotations

import logging
from collections import Counter
from typing import Dict, List, Optional, Sequence, Tuple

from ._internal import gf2
from ._internal.fincke_pohst import first_point_of_norm
from ._internal.frame import ReducedFrame
from ._internal.integer_matrix import quadratic_form
from .budget import BudgetExceeded, EnumerationBudget, EnumerationIncomplete
from .lattice import CosetClass, Lattice, MinimaResult, PreconditionError

logger = logging.getLogger(__name__)

Vector = Tuple[int, ...]
# reduced-frame class mask -> (minimal norm, minimal vectors in reduced coordinates)
ClassTable = Dict[int, Tuple[int, List[Vector]]]

DEFAULT_LEAF_CAP = 1_500_000


class _LeafCapReached(Exception):
    pass


def _radii(bound: int) -> List[int]:
    radii = []
    radius = 1
    while radius < bound:
        radii.append(radius)
        radius *= 2
    radii.append(bound)
    return radii


def _points_within(
    frame: ReducedFrame, bound: int, budget: Optional[EnumerationBudget], what: str
) -> List[Tuple[Vector, int]]:
    """Nonzero (coords, norm) pairs with norm at most ``bound``, in reduced coordinates.

    Under a budget the radius grows in doubling steps, so a stop can report the
    largest radius whose points were all found.
    """
    if bound < 0:
        raise ValueError("bound must be non-negative")
    completed = 0
    points: List[Tuple[Vector, int]] = []
    for radius in [bound] if budget is None else _radii(bound):
        try:
            current = [(c, nrm) for c, nrm, _ in frame.enumerator.iter_points(radius, budget=budget) if nrm]
        except BudgetExceeded as exc:
            raise EnumerationIncomplete(
                f"{what} to norm {bound} stopped at radius {radius}",
                explored_radius=completed,
                best_norm=min((nrm for _, nrm in points), default=None),
            ) from exc
        points = current
        completed = radius
    return points


def shortest_vectors(
    lattice: Lattice, bound: int, budget: Optional[EnumerationBudget] = None
) -> List[Vector]:
    """All nonzero vectors of norm at most ``bound``, sorted lexicographically."""
    frame = lattice.frame
    found = sorted(frame.to_original(c) for c, _ in _points_within(frame, bound, budget, "short-vector enumeration"))
    logger.debug("%d vectors of norm <= %d in %s", len(found), bound, lattice.label or "lattice")
    return found


def count_by_norm(
    lattice: Lattice, bound: int, budget: Optional[EnumerationBudget] = None
) -> Dict[int, int]:
    """Number of vectors of each norm 1..bound (theta series coefficients)."""
    counts = Counter(norm for _, norm in _points_within(lattice.frame, bound, budget, "norm count"))
    return {k: counts.get(k, 0) for k in range(1, bound + 1)}


def find_vector_of_norm(
    lattice: Lattice, norm: int, budget: Optional[EnumerationBudget] = None
) -> Optional[Vector]:
    """Some vector of exactly the given norm, or None if there is none."""
    frame = lattice.frame
    coords = first_point_of_norm(frame.enumerator, norm, budget=budget)
    return None if coords is None else frame.to_original(coords)


def _lift_norm(frame: ReducedFrame, parity: Sequence[int]) -> int:
    return quadratic_form(frame.gram, parity)


def _coset_search(
    frame: ReducedFrame,
    parity: Vector,
    start: int,
    cap: int,
    budget: Optional[EnumerationBudget],
) -> Tuple[int, List[Vector]]:
    """Minimal vectors of a nonzero coset in reduced coordinates.

    The radius grows geometrically from ``start``; ``cap`` is the norm of a
    known coset member, so the search at radius ``cap`` cannot come back empty.
    """
    radius = max(1, min(start, cap))
    explored = radius - 1
    while True:
        try:
            points = [(c, nrm) for c, nrm, _ in frame.enumerator.iter_points(radius, parity, budget)]
        except BudgetExceeded as exc:
            raise EnumerationIncomplete(
                f"coset search stopped at radius {radius}",
                explored_radius=explored,
                best_norm=cap,
                lower_bound=explored + 1,
                upper_bound=cap,
            ) from exc
        if points:
            best = min(nrm for _, nrm in points)
            return best, [c for c, nrm in points if nrm == best]
        explored = radius
        radius = min(2 * radius, cap)


def coset_minima(
    lattice: Lattice, coset: CosetClass, budget: Optional[EnumerationBudget] = None
) -> MinimaResult:
    """Min(c): minimal norm of the coset and all vectors achieving it."""
    n = lattice.rank
    if len(coset.bits) != n:
        raise PreconditionError(f"class has {len(coset.bits)} bits for rank {n}")
    if coset.is_zero:
        return MinimaResult(coset=coset, min_norm=0, vectors=((0,) * n,))
    frame = lattice.frame
    parity = tuple(x & 1 for x in frame.to_reduced(coset.bits))
    cap = min(lattice.norm(coset.bits), _lift_norm(frame, parity))
    best, vectors = _coset_search(frame, parity, max(1, cap // 4), cap, budget)
    return MinimaResult(
        coset=coset,
        min_norm=best,
        vectors=tuple(sorted(frame.to_original(v) for v in vectors)),
    )


def is_extremal(
    lattice: Lattice, w: Sequence[int], budget: Optional[EnumerationBudget] = None
) -> bool:
    """True iff no vector of w + 2L is shorter than w."""
    if not any(w):
        return True
    frame = lattice.frame
    parity = tuple(x & 1 for x in frame.to_reduced(w))
    norm = lattice.norm(w)
    for _ in frame.enumerator.iter_points(norm - 1, parity, budget):
        return False
    return True


def characteristic_coset(lattice: Lattice) -> CosetClass:
    """The class of vectors xi with xi·x = x² (mod 2) for all x."""
    if lattice.determinant() % 2 == 0:
        raise PreconditionError("characteristic class needs an odd determinant")
    n = lattice.rank
    rows = [gf2.pack(row) for row in lattice.gram]
    rhs = gf2.pack([lattice.gram[i][i] for i in range(n)])
    solution = gf2.solve(rows, rhs, n)
    if solution is None:
        raise AssertionError("Gram matrix is singular modulo 2 despite odd determinant")
    return CosetClass.from_mask(solution, n)


def min_characteristic_norm(
    lattice: Lattice, budget: Optional[EnumerationBudget] = None
) -> int:
    """Minimal norm of a characteristic vector."""
    return coset_minima(lattice, characteristic_coset(lattice), budget).min_norm


def _scan_reduced(
    frame: ReducedFrame,
    bound: int,
    budget: Optional[EnumerationBudget],
    leaf_cap: Optional[int],
) -> ClassTable:
    table: ClassTable = {}
    leaves = 0
    for coords, norm, mask in frame.enumerator.iter_points(bound, budget=budget):
        leaves += 1
        if leaf_cap is not None and leaves > leaf_cap:
            raise _LeafCapReached()
        entry = table.get(mask)
        if entry is None or norm < entry[0]:
            table[mask] = (norm, [coords])
        elif norm == entry[0]:
            entry[1].append(coords)
    return table


def scan_reduced_classes(
    frame: ReducedFrame,
    bound: int,
    budget: Optional[EnumerationBudget] = None,
) -> ClassTable:
    """Exact minima of every class whose minimum is at most ``bound``."""
    return _scan_reduced(frame, bound, budget, None)


def complete_class_table(
    frame: ReducedFrame,
    budget: Optional[EnumerationBudget] = None,
    leaf_cap: int = DEFAULT_LEAF_CAP,
) -> ClassTable:
    """Minima for all 2^n classes in reduced coordinates.

    Bulk enumeration at growing norm bounds covers most classes in one pass;
    the rest fall back to individual shifted searches.
    """
    n = frame.rank
    total = 1 << n
    table: ClassTable = {0: (0, [(0,) * n])}
    covered_bound = 0
    bound = 1
    while len(table) < total:
        try:
            table = _scan_reduced(frame, bound, budget, leaf_cap)
        except _LeafCapReached:
            logger.debug("bulk scan capped at norm %d", bound)
            break
        covered_bound = bound
        bound += 1
    missing = total - len(table)
    if missing:
        logger.info(
            "bulk scan to norm %d covered %d of %d classes; searching the rest one by one",
            covered_bound,
            len(table),
            total,
        )
        for mask in range(1, total):
            if mask in table:
                continue
            parity = gf2.unpack(mask, n)
            cap = _lift_norm(frame, parity)
            table[mask] = _coset_search(frame, parity, covered_bound + 1, cap, budget)
    return table


def to_minima_result(frame: ReducedFrame, entry: Tuple[int, List[Vector]]) -> MinimaResult:
    norm, vectors = entry
    original = sorted(frame.to_original(v) for v in vectors)
    return MinimaResult(coset=CosetClass.of(original[0]), min_norm=norm, vectors=tuple(original))


def scan_cosets(
    lattice: Lattice, bound: int, budget: Optional[EnumerationBudget] = None
) -> List[MinimaResult]:
    """Min(c) for every class whose minimum is at most ``bound``, sorted by class bits."""
    frame = lattice.frame
    table = scan_reduced_classes(frame, bound, budget)
    results = [to_minima_result(frame, entry) for entry in table.values()]
    return sorted(results, key=lambda r: r.coset.bits)


def coset_table(
    lattice: Lattice,
    budget: Optional[EnumerationBudget] = None,
    leaf_cap: int = DEFAULT_LEAF_CAP,
) -> List[MinimaResult]:
    """Min(c) for all 2^n classes, sorted by class bits."""
    frame = lattice.frame
    table = complete_class_table(frame, budget, leaf_cap)
    results = [to_minima_result(frame, entry) for entry in table.values()]
    return sorted(results, key=lambda r: r.coset.bits)
