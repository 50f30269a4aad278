from __future__ import annotations

from functools import lru_cache
from typing import List, Sequence, Tuple

from pydantic import BaseModel, ConfigDict

from . import gf2
from .fincke_pohst import EllipsoidEnumerator
from .integer_matrix import unimodular_inverse, vecmat
from .lll import lll_reduce_gram

GramKey = Tuple[Tuple[int, ...], ...]


class ReducedFrame(BaseModel):
    """An LLL-reduced view of a Gram matrix plus the maps back and forth.

    ``transform`` rows are the reduced basis in original coordinates, so a
    reduced coordinate vector x maps to x·transform.
    """

    model_config = ConfigDict(frozen=True)

    gram: GramKey
    transform: GramKey
    inverse: GramKey
    enumerator: EllipsoidEnumerator

    @property
    def rank(self) -> int:
        return len(self.gram)

    def to_original(self, coords: Sequence[int]) -> Tuple[int, ...]:
        """Reduced coordinates to original coordinates."""
        return tuple(vecmat(coords, self.transform))

    def to_reduced(self, coords: Sequence[int]) -> Tuple[int, ...]:
        """Original coordinates to reduced coordinates."""
        return tuple(vecmat(coords, self.inverse))

    def original_mask(self, reduced_coords: Sequence[int]) -> int:
        """Class of L/2L, as an original-coordinate bitmask, of a reduced vector."""
        return gf2.pack(self.to_original(reduced_coords))


@lru_cache(maxsize=32)
def reduced_frame(gram: GramKey) -> ReducedFrame:
    u, reduced = lll_reduce_gram(gram)
    rows: List[List[int]] = u
    return ReducedFrame(
        gram=tuple(tuple(r) for r in reduced),
        transform=tuple(tuple(r) for r in rows),
        inverse=tuple(tuple(r) for r in unimodular_inverse(rows)) if rows else (),
        enumerator=EllipsoidEnumerator(gram=tuple(tuple(r) for r in reduced)),
    )
