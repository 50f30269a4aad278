"""Exact definite integral lattices and their basic operations."""

from __future__ import annotations

import logging
from typing import List, Literal, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field, PositiveInt, model_validator

from ._internal import gf2
from ._internal.frame import ReducedFrame, reduced_frame
from ._internal.integer_matrix import (
    bilinear_form,
    determinant,
    gram_of_rows,
    leading_minors,
    lcm,
    quadratic_form,
    solve_rational,
    vecmat,
)
from .common import BitVector, IntMatrix, LatticeVector

logger = logging.getLogger(__name__)


class LatticeError(RuntimeError):
    """Base class for rejected lattices and failed constructions."""


class NotSymmetric(LatticeError):
    """The Gram matrix is not square and symmetric."""


class NotPositiveDefinite(LatticeError):
    """A leading principal minor of the Gram matrix is not positive."""

    def __init__(self, minor_index: int, minor: int) -> None:
        super().__init__(
            f"leading principal minor {minor_index} is {minor}, expected a positive value"
        )
        self.minor_index = minor_index
        self.minor = minor


class ConstructionError(LatticeError):
    """A construction self-check failed."""


class PreconditionError(LatticeError):
    """An operation was called outside its domain."""


class AmbientBasis(BaseModel):
    """Basis rows embedded in Euclidean space.

    Row i stands for the vector rows[i] / (denominator * sqrt(radical)); the
    radical is 1 for rational embeddings and 2 or 8 for code lattices.
    """

    model_config = ConfigDict(frozen=True)

    rows: IntMatrix
    denominator: PositiveInt = 1
    radical: PositiveInt = 1

    @property
    def scale(self) -> int:
        """Squared length scale denominator² · radical."""
        return self.denominator * self.denominator * self.radical

    def gram(self) -> List[List[int]]:
        """Exact Gram matrix of the rows, or ConstructionError if not integral."""
        raw = gram_of_rows(self.rows)
        scale = self.scale
        out = []
        for i, row in enumerate(raw):
            for j, value in enumerate(row):
                if value % scale:
                    raise ConstructionError(
                        f"pairing of rows {i} and {j} is {value}/{scale}, not an integer"
                    )
            out.append([value // scale for value in row])
        return out


class Lattice(BaseModel):
    """A definite integral lattice, stored with a positive definite Gram matrix."""

    model_config = ConfigDict(frozen=True)

    gram: IntMatrix
    sign: Literal[1, -1] = 1
    ambient: Optional[AmbientBasis] = None
    label: str = ""

    @model_validator(mode="after")
    def _check_form(self) -> "Lattice":
        gram = self.gram
        n = len(gram)
        if any(len(row) != n for row in gram):
            raise NotSymmetric(f"Gram matrix is not square ({n} rows)")
        for i in range(n):
            for j in range(i + 1, n):
                if gram[i][j] != gram[j][i]:
                    raise NotSymmetric(f"entries ({i},{j}) and ({j},{i}) differ")
        for index, minor in enumerate(leading_minors(gram), start=1):
            if minor <= 0:
                raise NotPositiveDefinite(index, minor)
        if self.ambient is not None:
            if len(self.ambient.rows) != n:
                raise LatticeError(
                    f"ambient basis has {len(self.ambient.rows)} rows for rank {n}"
                )
            if self.ambient.gram() != [list(row) for row in gram]:
                raise LatticeError("ambient rows do not reproduce the Gram matrix")
        return self

    # ----- construction helpers ----------------------------------------
    @classmethod
    def from_gram(
        cls, gram: Sequence[Sequence[int]], *, sign: Optional[int] = None, label: str = ""
    ) -> "Lattice":
        """Build a lattice, normalising a negative definite form to sign -1."""
        rows = [list(row) for row in gram]
        if rows and rows[0] and rows[0][0] < 0:
            rows = [[-x for x in row] for row in rows]
            if sign == 1:
                logger.warning("negative definite Gram given with sign +1; using -1")
            sign = -1
        return cls(gram=rows, sign=sign or 1, label=label)

    @classmethod
    def from_ambient(cls, ambient: AmbientBasis, *, sign: int = 1, label: str = "") -> "Lattice":
        """Lattice spanned by ambient rows; the Gram matrix is derived."""
        return cls(gram=ambient.gram(), sign=sign, ambient=ambient, label=label)

    # ----- basic arithmetic ---------------------------------------------
    @property
    def rank(self) -> int:
        """Number of basis vectors."""
        return len(self.gram)

    @property
    def frame(self) -> ReducedFrame:
        """Cached LLL-reduced frame used for enumeration."""
        return reduced_frame(self.gram)

    def norm(self, v: Sequence[int]) -> int:
        """Absolute norm |v²|."""
        return quadratic_form(self.gram, v)

    def dot(self, u: Sequence[int], v: Sequence[int]) -> int:
        """Exact pairing u·v in lattice coordinates."""
        return bilinear_form(self.gram, u, v)

    def determinant(self) -> int:
        """Exact determinant of the Gram matrix."""
        return determinant(self.gram)

    def is_unimodular(self) -> bool:
        """True when the determinant is 1."""
        return self.determinant() == 1

    def is_even(self) -> bool:
        """True when every norm is even."""
        return all(self.gram[i][i] % 2 == 0 for i in range(self.rank))

    def embed(self, coords: Sequence[int]) -> Tuple[int, ...]:
        """Ambient numerators of a lattice vector (same denominator as the basis)."""
        if self.ambient is None:
            raise PreconditionError(f"lattice {self.label!r} has no ambient basis")
        return tuple(vecmat(coords, self.ambient.rows))

    def coords_of(self, ambient_vector: Sequence[int]) -> Tuple[int, ...]:
        """Lattice coordinates of an ambient vector given as numerators."""
        if self.ambient is None:
            raise PreconditionError(f"lattice {self.label!r} has no ambient basis")
        solution = solve_rational(self.ambient.rows, ambient_vector)
        if solution is None or any(x.denominator != 1 for x in solution):
            raise PreconditionError(f"vector {tuple(ambient_vector)} is not in {self.label!r}")
        return tuple(int(x) for x in solution)

    def with_label(self, label: str) -> "Lattice":
        """Copy of the lattice under another label."""
        return self.model_copy(update={"label": label})


class ValidationSummary(BaseModel):
    """Result of validate()."""

    rank: int
    unimodular: bool
    definite: bool
    even: bool
    det: int


class CosetClass(BaseModel):
    """A class of L/2L, given by coordinates modulo 2."""

    model_config = ConfigDict(frozen=True)

    bits: BitVector

    @classmethod
    def of(cls, v: Sequence[int]) -> "CosetClass":
        """Class of an integer vector."""
        return cls(bits=tuple(x & 1 for x in v))

    @classmethod
    def from_mask(cls, mask: int, rank: int) -> "CosetClass":
        return cls(bits=gf2.unpack(mask, rank))

    @property
    def mask(self) -> int:
        """Class bits packed into an int."""
        return gf2.pack(self.bits)

    @property
    def is_zero(self) -> bool:
        return not any(self.bits)


class MinimaResult(BaseModel):
    """Min(w + 2L): the minimal norm of a coset and every vector achieving it."""

    model_config = ConfigDict(frozen=True)

    coset: CosetClass
    min_norm: int = Field(ge=0)
    vectors: Tuple[LatticeVector, ...]
    exhaustive: bool = True

    @property
    def half_count(self) -> int:
        """½#Min(c)."""
        return len(self.vectors) // 2

    @property
    def representative(self) -> Tuple[int, ...]:
        return self.vectors[0]


def validate(lattice: Lattice) -> ValidationSummary:
    """Exact determinant, definiteness and parity of a lattice."""
    det = lattice.determinant()
    if lattice.sign == -1 and lattice.rank % 2:
        det = -det
    return ValidationSummary(
        rank=lattice.rank,
        unimodular=abs(det) == 1,
        definite=True,
        even=lattice.is_even(),
        det=det,
    )


def direct_sum(first: Lattice, second: Lattice) -> Lattice:
    """Orthogonal direct sum with a block-diagonal Gram matrix."""
    if first.sign != second.sign:
        raise LatticeError("cannot add lattices of opposite definiteness")
    n1, n2 = first.rank, second.rank
    gram = [list(row) + [0] * n2 for row in first.gram]
    gram += [[0] * n1 + list(row) for row in second.gram]
    ambient = None
    a, b = first.ambient, second.ambient
    if a is not None and b is not None and a.radical == b.radical:
        den = lcm(a.denominator, b.denominator)
        fa, fb = den // a.denominator, den // b.denominator
        wa, wb = len(a.rows[0]) if a.rows else 0, len(b.rows[0]) if b.rows else 0
        rows = [[fa * x for x in row] + [0] * wb for row in a.rows]
        rows += [[0] * wa + [fb * x for x in row] for row in b.rows]
        ambient = AmbientBasis(rows=rows, denominator=den, radical=a.radical)
    label = "+".join(part for part in (first.label, second.label) if part)
    return Lattice(gram=gram, sign=first.sign, ambient=ambient, label=label)


def diagonal(k: int) -> Lattice:
    """The standard lattice <1>^k."""
    rows = [[int(i == j) for j in range(k)] for i in range(k)]
    return Lattice(gram=rows, ambient=AmbientBasis(rows=rows) if k else None, label=f"Z{k}")
