"""Reproduction of the coset census of the rank-14 lattice with root system E7+E7."""

from __future__ import annotations

import logging
from collections import Counter
from itertools import combinations_with_replacement
from typing import Dict, List, Optional, Sequence, Tuple

from pydantic import BaseModel

from ._internal import gf2
from ._internal.integer_matrix import hermite_basis
from .budget import EnumerationBudget
from .constructions import E7_SQUARED_BASIS, e7_squared_spec, named
from .enumeration import complete_class_table, coset_minima
from .invariants import lw_basis
from .lattice import CosetClass, Lattice, MinimaResult, PreconditionError

logger = logging.getLogger(__name__)

# E7 pieces in ambient numerators over 4
_ZERO = (0,) * 8
_PIECES = {
    "0": _ZERO,
    "x": (4, -4, 0, 0, 0, 0, 0, 0),
    "y": (4, 4, -4, -4, 0, 0, 0, 0),
    "z": (6, 6, -2, -2, -2, -2, -2, -2),
    "a": (3, 3, -1, -1, -1, -1, -1, -1),
    "b": (3, 3, 3, -5, -1, -1, -1, -1),
    "c": (7, -1, -1, -1, -1, -1, -1, -1),
}

# (pair, norm) in order of increasing norm
REPRESENTATIVES: Tuple[Tuple[str, int], ...] = (
    ("x0", 2),
    ("aa", 3),
    ("xx", 4),
    ("y0", 4),
    ("ab", 5),
    ("ac", 5),
    ("xy", 6),
    ("z0", 6),
    ("bb", 7),
    ("bc", 7),
    ("cc", 7),
)

# orbit sizes of the automorphism group on classes outside the image of E7+E7
ORBIT_SIZES: Dict[str, int] = {"aa": 1568, "ab": 3920, "ac": 112, "bb": 2450, "bc": 140, "cc": 2}
OUTSIDE_IMAGE = 8192

_VANISHING_ETA = ("xy", "z0")
_VANISHING_LINEAR = ("bb", "bc", "cc")


class CensusRow(BaseModel):
    pair: str
    w: Tuple[int, ...]
    norm: int
    expected_norm: int
    extremal: bool
    min_set_size: int
    eta: int
    in_image: bool


class CensusReport(BaseModel):
    """Outcome of every census check, with counterexamples on failure."""

    rows: List[CensusRow]
    same_model: bool
    outside_image: int
    orbit_groups: Dict[str, int]
    orbit_check: bool
    claim_vanishing: bool
    claim_even: bool
    failures: List[str]

    @property
    def passed(self) -> bool:
        """True when every representative, both claims and the orbit sums check out."""
        return not self.failures


def _pair_vector(pair: str) -> List[int]:
    return list(_PIECES[pair[0]]) + list(_PIECES[pair[1]])


def _pairing_table(lattice: Lattice, vectors: Sequence[Sequence[int]], basis: Sequence[Sequence[int]]) -> List[List[int]]:
    return [[lattice.dot(z, b) for b in basis] for z in vectors]


def _signs(lattice: Lattice, minima: MinimaResult, w: Sequence[int], signed: bool) -> List[int]:
    norm = minima.min_norm
    if not signed:
        return [1] * len(minima.vectors)
    return [-1 if ((norm + lattice.dot(z, w)) // 2) % 2 else 1 for z in minima.vectors]


def _half_sum(signs: Sequence[int], table: Sequence[Sequence[int]], idx: Sequence[int]) -> int:
    total = 0
    for s, row in zip(signs, table):
        term = s
        for i in idx:
            term *= row[i]
        total += term
    return total // 2


def _image_classes(lattice: Lattice) -> set:
    """L/2L classes of the E7+E7 sublattice, as masks in lattice coordinates."""
    generators = [gf2.pack(lattice.coords_of(row)) for row in e7_squared_spec().base_rows]
    return set(gf2.span(generators))


def e7_squared_census(
    lattice: Optional[Lattice] = None, budget: Optional[EnumerationBudget] = None
) -> CensusReport:
    """Check the eleven representatives, the two vanishing claims and the orbit count."""
    lattice = lattice or named("E7^2")
    if lattice.rank != 14 or lattice.ambient is None or lattice.ambient.denominator != 4:
        raise PreconditionError("the census runs on the catalog model of E7^2")
    failures: List[str] = []
    same_model = [list(r) for r in lattice.ambient.rows] == hermite_basis(E7_SQUARED_BASIS)
    if not same_model:
        failures.append("catalog basis spans a different lattice from the reference matrix")

    image = _image_classes(lattice)
    rows: List[CensusRow] = []
    claim_vanishing = True
    claim_even = True
    for pair, expected in REPRESENTATIVES:
        w = lattice.coords_of(_pair_vector(pair))
        minima = coset_minima(lattice, CosetClass.of(w), budget)
        norm = lattice.norm(w)
        extremal = minima.min_norm == norm
        signs = _signs(lattice, minima, w, signed=True)
        eta_value = sum(signs) // 2
        in_image = CosetClass.of(w).mask in image
        rows.append(
            CensusRow(
                pair=pair,
                w=w,
                norm=norm,
                expected_norm=expected,
                extremal=extremal,
                min_set_size=len(minima.vectors),
                eta=eta_value,
                in_image=in_image,
            )
        )
        if norm != expected or not extremal:
            failures.append(f"({pair}) has norm {norm}, class minimum {minima.min_norm}, expected {expected}")
            continue
        if in_image == (pair in ORBIT_SIZES):
            failures.append(f"({pair}) lies on the wrong side of the E7+E7 image")

        if pair in _VANISHING_ETA and eta_value:
            claim_vanishing = False
            failures.append(f"η at ({pair}) is {eta_value}, expected 0")
        if pair in _VANISHING_LINEAR:
            units = [[int(i == j) for j in range(lattice.rank)] for i in range(lattice.rank)]
            table = _pairing_table(lattice, minima.vectors, units)
            for j in range(lattice.rank):
                value = _half_sum(signs, table, (j,))
                if value:
                    claim_vanishing = False
                    failures.append(f"η at ({pair}) with factor e{j} is {value}, expected 0")

        plain = _signs(lattice, minima, w, signed=False)
        lw_table = _pairing_table(lattice, minima.vectors, lw_basis(lattice, w))
        for degree in range(0, norm - 3):
            for idx in combinations_with_replacement(range(lattice.rank), degree):
                value = _half_sum(plain, lw_table, idx)
                if value % (1 << degree) or (value >> degree) % 2:
                    claim_even = False
                    failures.append(f"2^-{degree}η at ({pair}) with 𝓛^w factors {idx} is odd")

    outside, groups, orbit_check = _orbit_census(lattice, image, rows, budget)
    if outside != OUTSIDE_IMAGE:
        failures.append(f"{outside} classes outside the image, expected {OUTSIDE_IMAGE}")
    if not orbit_check:
        failures.append(f"class signatures {groups} do not match the orbit sizes")
    report = CensusReport(
        rows=rows,
        same_model=same_model,
        outside_image=outside,
        orbit_groups=groups,
        orbit_check=orbit_check,
        claim_vanishing=claim_vanishing,
        claim_even=claim_even,
        failures=failures,
    )
    logger.info("census: %d failures", len(failures))
    return report


def _signature(norm: int, size: int) -> str:
    return f"norm {norm}, |Min| {size}"


def _orbit_census(
    lattice: Lattice,
    image: set,
    rows: List[CensusRow],
    budget: Optional[EnumerationBudget],
) -> Tuple[int, Dict[str, int], bool]:
    """Group classes outside the image by (minimal norm, |Min|) and compare with the orbit sizes."""
    frame = lattice.frame
    table = complete_class_table(frame, budget)
    observed: Counter = Counter()
    for norm, vectors in table.values():
        if frame.original_mask(vectors[0]) not in image:
            observed[_signature(norm, len(vectors))] += 1
    expected: Counter = Counter()
    for row in rows:
        if row.pair in ORBIT_SIZES:
            expected[_signature(row.norm, row.min_set_size)] += ORBIT_SIZES[row.pair]
    total = sum(observed.values())
    groups = dict(sorted(observed.items()))
    return total, groups, observed == expected
