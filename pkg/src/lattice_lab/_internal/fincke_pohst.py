from __future__ import annotations

import math
from typing import Iterator, List, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, PrivateAttr

from ..budget import EnumerationBudget

# relative inflation of the float radius; exact norms decide membership
_MARGIN = 2.0**-20
_DEBIT_BLOCK = 1 << 14

Point = Tuple[Tuple[int, ...], int, int]


class EllipsoidEnumerator(BaseModel):
    """Fincke-Pohst enumeration of {v : vᵀGv <= bound} for an integral Gram matrix.

    Pruning uses a floating-point Cholesky factor; every yielded point has its
    norm recomputed exactly in integers. Works best on an LLL-reduced Gram.
    """

    model_config = ConfigDict(frozen=True)

    gram: Tuple[Tuple[int, ...], ...]
    _diag: List[float] = PrivateAttr(default_factory=list)
    _mu: List[List[float]] = PrivateAttr(default_factory=list)

    def model_post_init(self, __ctx: object) -> None:
        n = len(self.gram)
        if n == 0:
            return
        lower = np.linalg.cholesky(np.array(self.gram, dtype=float))
        r = lower.T
        self._diag = [float(r[i, i] ** 2) for i in range(n)]
        self._mu = [[float(r[i, j] / r[i, i]) if j > i else 0.0 for j in range(n)] for i in range(n)]

    @property
    def rank(self) -> int:
        return len(self.gram)

    def iter_points(
        self,
        bound: int,
        parity: Optional[Sequence[int]] = None,
        budget: Optional[EnumerationBudget] = None,
    ) -> Iterator[Point]:
        """Yield (coords, exact norm, parity mask) for every point within bound.

        With ``parity`` set, only points congruent to it modulo 2 are visited,
        which enumerates a single coset of 2L. The origin is included when it
        qualifies.
        """
        n = self.rank
        if bound < 0:
            return
        if n == 0:
            yield (), 0, 0
            return
        gram = self.gram
        q = self._diag
        mu = self._mu
        limit = bound * (1.0 + _MARGIN) + 1e-9
        step = 2 if parity is not None else 1
        par = [int(p) & 1 for p in parity] if parity is not None else [0] * n

        v = [0] * n
        hi = [0] * n
        center = [0.0] * n
        gdot = [0] * n
        fpart = [0.0] * (n + 1)
        epart = [0] * (n + 1)
        mask = [0] * (n + 1)
        nodes = 0

        def open_level(k: int) -> bool:
            t = 0.0
            gd = 0
            row_mu = mu[k]
            row_g = gram[k]
            for j in range(k + 1, n):
                vj = v[j]
                if vj:
                    t += row_mu[j] * vj
                    gd += row_g[j] * vj
            c = -t
            center[k] = c
            gdot[k] = gd
            room = limit - fpart[k + 1]
            if room < 0:
                return False
            rad = math.sqrt(room / q[k])
            lo = math.ceil(c - rad)
            top = math.floor(c + rad)
            if step == 2 and (lo - par[k]) & 1:
                lo += 1
            if lo > top:
                return False
            v[k] = lo
            hi[k] = top
            return True

        k = n - 1
        if not open_level(k):
            return
        while True:
            if v[k] > hi[k]:
                k += 1
                if k == n:
                    break
                v[k] += step
                continue
            nodes += 1
            if nodes >= _DEBIT_BLOCK:
                if budget is not None:
                    budget.debit(nodes)
                nodes = 0
            vk = v[k]
            d = vk - center[k]
            fpart[k] = fpart[k + 1] + q[k] * d * d
            epart[k] = epart[k + 1] + gram[k][k] * vk * vk + 2 * vk * gdot[k]
            mask[k] = mask[k + 1] | ((vk & 1) << k)
            if k == 0:
                if epart[0] <= bound:
                    yield tuple(v), epart[0], mask[0]
                v[0] += step
                continue
            k -= 1
            if not open_level(k):
                k += 1
                v[k] += step
        if budget is not None and nodes:
            budget.debit(nodes)


def first_point_of_norm(
    enumerator: EllipsoidEnumerator, norm: int, budget: Optional[EnumerationBudget] = None
) -> Optional[Tuple[int, ...]]:
    for coords, value, _ in enumerator.iter_points(norm, budget=budget):
        if value == norm:
            return coords
    return None


__all__ = ["EllipsoidEnumerator", "first_point_of_norm"]
