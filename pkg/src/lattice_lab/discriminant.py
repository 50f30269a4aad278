"""Discriminant groups and index-two integral overlattices."""

from __future__ import annotations

import logging
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import List, Tuple

from pydantic import BaseModel, ConfigDict, PositiveInt, field_serializer

from ._internal.integer_matrix import (
    hermite_basis,
    matmul,
    quadratic_form,
    smith_normal_form,
    transpose,
)
from .common import IntVector
from .lattice import AmbientBasis, ConstructionError, Lattice, PreconditionError

logger = logging.getLogger(__name__)


class RationalVector(BaseModel):
    """Integer numerators over a common positive denominator."""

    model_config = ConfigDict(frozen=True)

    numerators: IntVector
    denominator: PositiveInt


class DiscriminantGroup(BaseModel):
    """L*/L as a product of cyclic groups, with generator lifts in L⊗Q coordinates."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    invariant_factors: Tuple[int, ...]
    generator_lifts: Tuple[RationalVector, ...]
    quadratic_values: Tuple[Fraction, ...]

    @field_serializer("quadratic_values")
    def _fractions_as_text(self, values: Tuple[Fraction, ...]) -> List[str]:
        return [str(v) for v in values]

    @property
    def order(self) -> int:
        """Order of the discriminant group."""
        out = 1
        for d in self.invariant_factors:
            out *= d
        return out

    @property
    def is_trivial(self) -> bool:
        """True for unimodular lattices."""
        return not self.invariant_factors


def discriminant_group(lattice: Lattice) -> DiscriminantGroup:
    """Smith-form decomposition of L*/L.

    With U·G·V = D, the dual lattice is spanned by the columns of V·D⁻¹, so
    column i of V over d_i lifts the i-th cyclic generator. Quadratic values
    are reduced modulo 2.
    """
    diag, _, v = smith_normal_form(lattice.gram)
    columns = transpose(v)
    factors: List[int] = []
    lifts: List[RationalVector] = []
    values: List[Fraction] = []
    for d, col in zip(diag, columns):
        if d <= 1:
            continue
        common = gcd(d, *col)
        nums = tuple(x // common for x in col)
        den = d // common
        factors.append(d)
        lifts.append(RationalVector(numerators=nums, denominator=den))
        values.append(Fraction(quadratic_form(lattice.gram, nums), den * den) % 2)
    return DiscriminantGroup(
        invariant_factors=tuple(factors),
        generator_lifts=tuple(lifts),
        quadratic_values=tuple(values),
    )


def _glued(lattice: Lattice, glue_numerators: List[int], label: str) -> Lattice:
    """L + Z·(glue/2), where glue is an integer vector in L coordinates."""
    n = lattice.rank
    generators = [[2 * int(i == j) for j in range(n)] for i in range(n)] + [glue_numerators]
    basis = hermite_basis(generators)
    raw = matmul(matmul(basis, lattice.gram), transpose(basis))
    if any(x % 4 for row in raw for x in row):
        raise ConstructionError("glued lattice is not integral")
    gram = [[x // 4 for x in row] for row in raw]
    ambient = None
    if lattice.ambient is not None:
        rows = matmul(basis, lattice.ambient.rows)
        den = 2 * lattice.ambient.denominator
        common = gcd(den, *(x for row in rows for x in row))
        ambient = AmbientBasis(
            rows=[[x // common for x in row] for row in rows],
            denominator=den // common,
            radical=lattice.ambient.radical,
        )
    return Lattice(gram=gram, sign=lattice.sign, ambient=ambient, label=label)


def index2_overlattices(lattice: Lattice) -> List[Lattice]:
    """Every integral M containing L with index two."""
    det = lattice.determinant()
    if det % 4:
        raise PreconditionError(f"determinant {det} is not divisible by 4")
    group = discriminant_group(lattice)
    even = [
        (factor, lift)
        for factor, lift in zip(group.invariant_factors, group.generator_lifts)
        if factor % 2 == 0
    ]
    # each order-two element is a sum of half-period multiples of even-order generators
    halves = []
    for factor, lift in even:
        scale = Fraction(factor // 2, lift.denominator) * 2
        halves.append([int(scale * x) for x in lift.numerators])
    results: List[Lattice] = []
    n = lattice.rank
    for size in range(1, len(halves) + 1):
        for subset in combinations(range(len(halves)), size):
            glue = [sum(halves[i][j] for i in subset) for j in range(n)]
            if quadratic_form(lattice.gram, glue) % 4:
                continue
            label = f"{lattice.label}+glue{''.join(str(i) for i in subset)}"
            over = _glued(lattice, glue, label)
            if over.determinant() * 4 != det:
                raise ConstructionError(f"overlattice {label} has the wrong determinant")
            results.append(over)
    logger.debug("%d integral index-2 overlattices of %s", len(results), lattice.label or "lattice")
    return results
