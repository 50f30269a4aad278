"""Binary linear codes: the Golay code and its shortened relative."""

from __future__ import annotations

import logging
from collections import Counter
from typing import Dict, Iterator, List, Tuple

from pydantic import BaseModel, ConfigDict, PositiveInt, field_validator, model_validator

from ._internal import gf2
from .lattice import ConstructionError

logger = logging.getLogger(__name__)

GOLAY_WEIGHTS = {0: 1, 8: 759, 12: 2576, 16: 759, 24: 1}


class BinaryCode(BaseModel):
    """A binary linear code given by generator words written as bit strings."""

    model_config = ConfigDict(frozen=True)

    length: PositiveInt
    generators: Tuple[str, ...]

    @field_validator("generators")
    @classmethod
    def _bits_only(cls, words: Tuple[str, ...]) -> Tuple[str, ...]:
        for word in words:
            if set(word) - {"0", "1"}:
                raise ValueError(f"generator {word!r} is not a bit string")
        return words

    @model_validator(mode="after")
    def _full_rank(self) -> "BinaryCode":
        if any(len(word) != self.length for word in self.generators):
            raise ValueError(f"every generator must have length {self.length}")
        if gf2.rank(self.masks()) != len(self.generators):
            raise ValueError("generators are linearly dependent")
        return self

    @classmethod
    def from_masks(cls, length: int, masks: List[int]) -> "BinaryCode":
        """Code generated by bitmask rows (bit i is coordinate i)."""
        independent = gf2.independent_subset(masks)
        words = tuple("".join(str(b) for b in gf2.unpack(m, length)) for m in independent)
        return cls(length=length, generators=words)

    @property
    def dimension(self) -> int:
        """Dimension over the two-element field."""
        return len(self.generators)

    def masks(self) -> List[int]:
        """Generators as bitmasks."""
        return [gf2.pack([int(c) for c in word]) for word in self.generators]

    def codewords(self) -> Iterator[int]:
        """Every codeword, as a bitmask."""
        return gf2.span(self.masks())

    def weight_enumerator(self) -> Dict[int, int]:
        """Number of codewords of each weight."""
        counts = Counter(gf2.popcount(word) for word in self.codewords())
        return dict(sorted(counts.items()))

    def minimum_distance(self) -> int:
        """Smallest nonzero weight."""
        return min((w for w in self.weight_enumerator() if w), default=0)

    def is_self_orthogonal(self) -> bool:
        """True when every pair of generators meets evenly."""
        masks = self.masks()
        return all(gf2.popcount(a & b) % 2 == 0 for a in masks for b in masks)

    def rows(self) -> List[List[int]]:
        """Generators as 0/1 lists."""
        return [[int(c) for c in word] for word in self.generators]


def _quadratic_residue_rows(p: int) -> List[int]:
    residues = {(x * x) % p for x in range(1, p)}
    rows = []
    for u in range(p):
        bits = [1 if (v - u) % p in residues else 0 for v in range(p)]
        bits.append(0 if (p - 1) % 8 == 0 else 1)
        rows.append(gf2.pack(bits))
    rows.append(gf2.pack([1] * (p + 1)))
    return rows


def golay24() -> BinaryCode:
    """The extended Golay code as the extended quadratic-residue code of length 24.

    The result is checked against the known weight enumerator.
    """
    code = BinaryCode.from_masks(24, _quadratic_residue_rows(23))
    if code.dimension != 12:
        raise ConstructionError(f"Golay code has dimension {code.dimension}, expected 12")
    weights = code.weight_enumerator()
    if weights != GOLAY_WEIGHTS:
        raise ConstructionError(f"Golay weight enumerator {weights} is wrong")
    return code


def shortened_golay22() -> BinaryCode:
    """Golay words starting 00 or 11, projected to their last 22 coordinates."""
    masks = golay24().masks()
    same = [m for m in masks if (m & 1) == ((m >> 1) & 1)]
    differ = [m for m in masks if (m & 1) != ((m >> 1) & 1)]
    if differ:
        pivot = differ[0]
        same += [m ^ pivot for m in differ[1:]]
    projected = [m >> 2 for m in same]
    code = BinaryCode.from_masks(22, projected)
    if code.dimension != 11:
        raise ConstructionError(f"shortened code has dimension {code.dimension}, expected 11")
    if any(w % 2 for w in code.weight_enumerator()):
        raise ConstructionError("shortened code has a word of odd weight")
    logger.debug("shortened Golay weights %s", code.weight_enumerator())
    return code
