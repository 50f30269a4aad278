"""Exact constructions of the lattices in the catalog.

Every builder returns a validated Lattice carrying an ambient basis, so that
vectors written in the usual coordinate models can be converted to lattice
coordinates with ``Lattice.coords_of``.
"""

from __future__ import annotations

import logging
import re
from functools import lru_cache
from typing import Callable, Dict, List, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, PositiveInt, model_validator

from ._internal import gf2
from ._internal.integer_matrix import hermite_basis, integer_kernel, matmul, transpose, vecmat
from .codes import BinaryCode, golay24, shortened_golay22
from .common import IntMatrix
from .discriminant import index2_overlattices
from .enumeration import count_by_norm, find_vector_of_norm
from .lattice import AmbientBasis, ConstructionError, Lattice, diagonal

logger = logging.getLogger(__name__)


class GlueSpec(BaseModel):
    """Root-lattice generators plus glue vectors, all scaled by ``denominator``."""

    model_config = ConfigDict(frozen=True)

    ambient_dim: PositiveInt
    denominator: PositiveInt = 1
    base_rows: IntMatrix
    glue_rows: IntMatrix = ()

    @model_validator(mode="after")
    def _widths(self) -> "GlueSpec":
        for row in self.base_rows + self.glue_rows:
            if len(row) != self.ambient_dim:
                raise ValueError(f"row of width {len(row)} in ambient dimension {self.ambient_dim}")
        return self


# ----- coordinate helpers ----------------------------------------------------
def _unit(n: int, i: int, scale: int = 1) -> List[int]:
    row = [0] * n
    row[i] = scale
    return row


def _difference(n: int, i: int, j: int, scale: int = 1) -> List[int]:
    row = [0] * n
    row[i] = scale
    row[j] = -scale
    return row


def _a_rows(n: int, scale: int = 1) -> List[List[int]]:
    """Simple roots of A_n inside Z^(n+1)."""
    return [_difference(n + 1, i, i + 1, scale) for i in range(n)]


def _d_rows(n: int, scale: int = 1) -> List[List[int]]:
    """Simple roots of D_n, the even-sum sublattice of Z^n."""
    rows = [_difference(n, i, i + 1, scale) for i in range(n - 1)]
    last = [0] * n
    last[n - 2] = last[n - 1] = scale
    rows.append(last)
    return rows


def _place(blocks: Sequence[Sequence[int]]) -> List[int]:
    out: List[int] = []
    for block in blocks:
        out.extend(block)
    return out


def _block_diagonal(parts: Sequence[List[List[int]]]) -> List[List[int]]:
    widths = [len(p[0]) for p in parts]
    rows = []
    offset = 0
    total = sum(widths)
    for part, width in zip(parts, widths):
        for row in part:
            full = [0] * total
            full[offset : offset + width] = row
            rows.append(full)
        offset += width
    return rows


# ----- generic builders ------------------------------------------------------
def lattice_from_generators(
    rows: Sequence[Sequence[int]], *, denominator: int = 1, radical: int = 1, label: str = ""
) -> Lattice:
    basis = hermite_basis(rows)
    if not basis:
        raise ConstructionError("generators span the zero lattice")
    return Lattice.from_ambient(
        AmbientBasis(rows=basis, denominator=denominator, radical=radical), label=label
    )


def glue_lattice(spec: GlueSpec, label: str = "") -> Lattice:
    """Lattice generated by base rows and glue rows; must come out integral."""
    return lattice_from_generators(
        list(spec.base_rows) + list(spec.glue_rows), denominator=spec.denominator, label=label
    )


def sublattice_by_conditions(
    lattice: Lattice, conditions: Sequence[Sequence[int]], label: str = ""
) -> Lattice:
    """Vectors of L whose ambient coordinates satisfy c·x = 0 for each condition c."""
    if lattice.ambient is None:
        raise ConstructionError("sublattice conditions need an ambient basis")
    rows = lattice.ambient.rows
    forms = matmul(rows, transpose(conditions))
    kernel = integer_kernel(forms)
    if not kernel:
        raise ConstructionError("conditions leave only the zero vector")
    ambient = AmbientBasis(
        rows=matmul(kernel, rows),
        denominator=lattice.ambient.denominator,
        radical=lattice.ambient.radical,
    )
    return Lattice.from_ambient(ambient, sign=lattice.sign, label=label)


def orthogonal_complement(lattice: Lattice, vectors: Sequence[Sequence[int]], label: str = "") -> Lattice:
    """Sublattice of L orthogonal to the given lattice vectors (in L coordinates)."""
    forms = transpose([vecmat(v, lattice.gram) for v in vectors])
    kernel = integer_kernel(forms)
    gram = matmul(matmul(kernel, lattice.gram), transpose(kernel))
    ambient = None
    if lattice.ambient is not None:
        ambient = AmbientBasis(
            rows=matmul(kernel, lattice.ambient.rows),
            denominator=lattice.ambient.denominator,
            radical=lattice.ambient.radical,
        )
    return Lattice(gram=gram, sign=lattice.sign, ambient=ambient, label=label)


def root_lattice(kind: str, n: int) -> Lattice:
    """A_n, D_n, E_6, E_7, E_8 in their usual coordinate models."""
    kind = kind.upper()
    if kind == "A":
        if n < 1:
            raise ConstructionError("A_n needs n >= 1")
        return Lattice.from_ambient(AmbientBasis(rows=_a_rows(n)), label=f"A{n}")
    if kind == "D":
        if n < 3:
            raise ConstructionError("D_n needs n >= 3")
        return Lattice.from_ambient(AmbientBasis(rows=_d_rows(n)), label=f"D{n}")
    if kind == "E":
        e8 = gamma(2).with_label("E8")
        if n == 8:
            return e8
        if n == 7:
            return sublattice_by_conditions(e8, [[1] * 8], label="E7")
        if n == 6:
            return sublattice_by_conditions(
                e8, [_difference(8, 5, 6), _difference(8, 6, 7)], label="E6"
            )
    raise ConstructionError(f"no root lattice {kind}{n}")


def gamma(k: int) -> Lattice:
    """Gamma_4k: D_4k together with (1/2, ..., 1/2)."""
    if k < 1:
        raise ConstructionError("Gamma_4k needs k >= 1")
    n = 4 * k
    rows = [[1] * n, _place([[2, 2], [0] * (n - 2)])]
    rows += [_difference(n, i, i + 1, 2) for i in range(n - 1)]
    lattice = lattice_from_generators(rows, denominator=2, label=f"Gamma{n}")
    if not lattice.is_unimodular():
        raise ConstructionError(f"Gamma{n} is not unimodular")
    return lattice


def construction_a(code: BinaryCode, label: str = "") -> Lattice:
    """Vectors x/sqrt(2) with x mod 2 in the code."""
    if not code.is_self_orthogonal():
        raise ConstructionError("Construction A needs a self-orthogonal code")
    n = code.length
    rows = [_unit(n, i, 2) for i in range(n)] + code.rows()
    return lattice_from_generators(rows, radical=2, label=label or f"A({n},{code.dimension})")


# ----- glue data for the unimodular entries --------------------------------
def _e7_rows(denominator: int) -> List[List[int]]:
    """Generators of the sum-zero vectors of E8, multiplied by an even denominator."""
    half = denominator // 2
    rows = [_difference(8, i, i + 1, denominator) for i in range(7)]
    rows.append([half] * 4 + [-half] * 4)
    return rows


def a15_spec() -> GlueSpec:
    """A15 with the glue class of order 4."""
    return GlueSpec(
        ambient_dim=16,
        denominator=4,
        base_rows=_a_rows(15, 4),
        glue_rows=[[-1] * 12 + [3] * 4],
    )


def e7_squared_spec() -> GlueSpec:
    """Two copies of E7 glued along their nontrivial classes."""
    block = _e7_rows(4)
    glue = [3, 3] + [-1] * 6
    return GlueSpec(
        ambient_dim=16,
        denominator=4,
        base_rows=_block_diagonal([block, block]),
        glue_rows=[glue + glue],
    )


def d8_squared_spec() -> GlueSpec:
    """D8+D8 with the glue vectors (s, v) and (v, s)."""
    half = [1] * 8
    vec = [-2] + [0] * 7
    return GlueSpec(
        ambient_dim=16,
        denominator=2,
        base_rows=_block_diagonal([_d_rows(8, 2), _d_rows(8, 2)]),
        glue_rows=[half + vec, vec + half],
    )


def _d6_glue() -> Tuple[List[int], List[int], List[int]]:
    zero, s, c = [0] * 6, [1] * 6, [1] * 5 + [-1]
    return _place([zero, s, c]), _place([c, zero, s]), _place([s, c, zero])


def d6_cubed_spec() -> GlueSpec:
    """D6^3 glued by (0, s, c) and its cyclic shifts."""
    return GlueSpec(
        ambient_dim=18,
        denominator=2,
        base_rows=_block_diagonal([_d_rows(6, 2)] * 3),
        glue_rows=list(_d6_glue()),
    )


def _d4_glue() -> Tuple[List[int], List[List[int]]]:
    zero, v, s = [0, 0, 0, 0], [0, 0, 0, 2], [1, 1, 1, -1]
    pattern = [zero, v, s, s, v]
    shifts = [_place(pattern[-k:] + pattern[:-k]) if k else _place(pattern) for k in range(5)]
    return [1] * 20, shifts


def d4_fifth_spec() -> GlueSpec:
    """D4^5 glued by the all-halves vector and the cyclic shifts of (0, v, s, s, v)."""
    g, shifts = _d4_glue()
    return GlueSpec(
        ambient_dim=20,
        denominator=2,
        base_rows=_block_diagonal([_d_rows(4, 2)] * 5),
        glue_rows=[g] + shifts,
    )


# explicit basis of E7^2 at denominator 4; cross-checks the glue route
E7_SQUARED_BASIS = (
    (1, 1, 1, 1, 1, 1, -3, -3, 1, 1, 1, 1, 1, 1, -3, -3),
    (2, 2, 2, 2, -2, -2, -2, -2, 0, 0, 0, 0, 0, 0, 0, 0),
    *(tuple(_difference(16, i, i + 1, 4)) for i in range(6)),
    *(tuple(_difference(16, i, i + 1, 4)) for i in range(9, 15)),
)


def leech() -> Lattice:
    """The Leech lattice as vectors x/sqrt(8) built from the Golay code."""
    n = 24
    rows = [[2 * b for b in row] for row in golay24().rows()]
    rows.append(_place([[4, 4], [0] * 22]))
    rows += [_difference(n, i, i + 1, 4) for i in range(n - 1)]
    rows.append([-3] + [1] * 23)
    lattice = lattice_from_generators(rows, radical=8, label="Leech")
    if not (lattice.is_unimodular() and lattice.is_even()):
        raise ConstructionError("Leech construction is not even unimodular")
    return lattice


def shorter_leech() -> Lattice:
    """O23: glue the orthogonal complement of a norm-4 Leech vector back to unimodular."""
    big = named("Leech")
    u = big.coords_of(_place([[4, 4], [0] * 22]))
    if big.norm(u) != 4:
        raise ConstructionError("chosen Leech vector does not have norm 4")
    complement = orthogonal_complement(big, [u], label="Leech-perp")
    if complement.rank != 23 or complement.determinant() != 4:
        raise ConstructionError("orthogonal complement is not rank 23 of determinant 4")
    candidates = [m for m in index2_overlattices(complement) if m.is_unimodular()]
    if len(candidates) != 1:
        raise ConstructionError(f"expected one unimodular overlattice, found {len(candidates)}")
    lattice = candidates[0].with_label("O23")
    short = count_by_norm(lattice, 2)
    if short[1] or short[2]:
        raise ConstructionError(f"O23 has short vectors {short}")
    return lattice


def a1_22() -> Lattice:
    """Construction A on the shortened Golay code of length 22."""
    lattice = construction_a(shortened_golay22(), label="A1^22")
    if not lattice.is_unimodular():
        raise ConstructionError("A1^22 is not unimodular")
    return lattice


# ----- catalog ---------------------------------------------------------------
def _checked_glue(spec_factory: Callable[[], GlueSpec], label: str) -> Callable[[], Lattice]:
    def build() -> Lattice:
        lattice = glue_lattice(spec_factory(), label=label)
        if not lattice.is_unimodular():
            raise ConstructionError(f"{label} is not unimodular (det {lattice.determinant()})")
        return lattice

    return build


_FIXED: Dict[str, Callable[[], Lattice]] = {
    "a15": _checked_glue(a15_spec, "A15"),
    "e7^2": _checked_glue(e7_squared_spec, "E7^2"),
    "d8^2": _checked_glue(d8_squared_spec, "D8^2"),
    "d6^3": _checked_glue(d6_cubed_spec, "D6^3"),
    "d4^5": _checked_glue(d4_fifth_spec, "D4^5"),
    "a1^22": a1_22,
    "leech": leech,
    "o23": shorter_leech,
    "e6": lambda: root_lattice("E", 6),
    "e7": lambda: root_lattice("E", 7),
    "e8": lambda: root_lattice("E", 8),
}

_SUPERSCRIPTS = str.maketrans("⁰¹²³⁴⁵⁶⁷⁸⁹", "0123456789")
_PATTERN = re.compile(r"^(z|a|d|gamma)\(?(\d+)\)?$")

CATALOG = ("Zn", "An", "Dn", "E6", "E7", "E8", "Gamma(4k)", "A15", "E7^2", "D8^2", "D6^3", "D4^5", "A1^22", "Leech", "O23")


def _normalise(name: str) -> str:
    text = re.sub(
        r"[⁰¹²³⁴⁵⁶⁷⁸⁹]+", lambda m: "^" + m.group(0).translate(_SUPERSCRIPTS), name.strip()
    )
    return text.replace("_", "").replace(" ", "").lower()


@lru_cache(maxsize=None)
def named(name: str) -> Lattice:
    """Look up a catalog lattice by name, e.g. "E7^2", "Gamma12", "D4", "Z5"."""
    key = _normalise(name)
    if key in _FIXED:
        return _FIXED[key]()
    match = _PATTERN.match(key)
    if match:
        family, size = match.group(1), int(match.group(2))
        if family == "z":
            return diagonal(size)
        if family == "gamma":
            if size % 4:
                raise ConstructionError(f"Gamma needs a multiple of 4, got {size}")
            return gamma(size // 4)
        return root_lattice(family.upper(), size)
    raise ConstructionError(f"unknown lattice name {name!r}; catalog: {', '.join(CATALOG)}")


# ----- standard witnesses ----------------------------------------------------
def gamma_witness(k: int) -> Tuple[int, ...]:
    """(1/2, ..., 1/2) in Gamma_4k, in lattice coordinates."""
    return named(f"Gamma{4 * k}").coords_of([1] * (4 * k))


def glue_witness(name: str) -> Tuple[int, ...]:
    """The extremal vector with Min(w+2L) = {±w} used for each glued lattice."""
    key = _normalise(name)
    lattice = named(name)
    if key == "d8^2":
        spec = d8_squared_spec()
        g1, g2 = spec.glue_rows
        return lattice.coords_of([x + y for x, y in zip(g1, g2)])
    if key == "d6^3":
        g1, g2, _ = _d6_glue()
        return lattice.coords_of([x - y for x, y in zip(g1, g2)])
    if key == "d4^5":
        return lattice.coords_of(_d4_glue()[0])
    if key == "a1^22":
        for word in shortened_golay22().codewords():
            if gf2.popcount(word) == 10:
                return lattice.coords_of(list(gf2.unpack(word, 22)))
        raise ConstructionError("shortened Golay code has no word of weight 10")
    if key == "o23":
        found = find_vector_of_norm(lattice, 5)
        if found is None:
            raise ConstructionError("O23 has no vector of norm 5")
        return found
    raise ConstructionError(f"no standard witness for {name!r}")
