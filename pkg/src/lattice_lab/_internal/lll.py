"""Exact LLL reduction driven by the Gram matrix alone."""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import List, Sequence, Tuple

from .integer_matrix import Matrix, identity, to_lists

logger = logging.getLogger(__name__)


def lll_reduce_gram(
    gram: Sequence[Sequence[int]], delta: Fraction = Fraction(3, 4)
) -> Tuple[Matrix, Matrix]:
    """LLL-reduce a positive definite integral Gram matrix.

    Returns (U, G') where the rows of U express the reduced basis in the
    input basis and G' = U·G·Uᵀ. All arithmetic is rational.
    """
    g = to_lists(gram)
    n = len(g)
    u = identity(n)
    if n <= 1:
        return u, g

    mu: List[List[Fraction]] = [[Fraction(0)] * n for _ in range(n)]
    b: List[Fraction] = [Fraction(0)] * n
    b[0] = Fraction(g[0][0])
    kmax = 0
    k = 1
    swaps = 0

    def size_reduce(k: int, l: int) -> None:
        if abs(mu[k][l]) <= Fraction(1, 2):
            return
        q = round(mu[k][l])
        # b_k <- b_k - q b_l
        gkk = g[k][k] - 2 * q * g[k][l] + q * q * g[l][l]
        for j in range(n):
            if j != k:
                g[k][j] -= q * g[l][j]
                g[j][k] = g[k][j]
        g[k][k] = gkk
        u[k] = [x - q * y for x, y in zip(u[k], u[l])]
        mu[k][l] -= q
        for i in range(l):
            mu[k][i] -= q * mu[l][i]

    def swap(k: int) -> None:
        g[k], g[k - 1] = g[k - 1], g[k]
        for row in g:
            row[k], row[k - 1] = row[k - 1], row[k]
        u[k], u[k - 1] = u[k - 1], u[k]
        for j in range(k - 1):
            mu[k][j], mu[k - 1][j] = mu[k - 1][j], mu[k][j]
        m = mu[k][k - 1]
        new_b = b[k] + m * m * b[k - 1]
        mu[k][k - 1] = m * b[k - 1] / new_b
        b[k] = b[k - 1] * b[k] / new_b
        b[k - 1] = new_b
        for i in range(k + 1, kmax + 1):
            t = mu[i][k]
            mu[i][k] = mu[i][k - 1] - m * t
            mu[i][k - 1] = t + mu[k][k - 1] * mu[i][k]

    while k < n:
        if k > kmax:
            kmax = k
            for j in range(k):
                mu[k][j] = (Fraction(g[k][j]) - sum((mu[j][i] * mu[k][i] * b[i] for i in range(j)), Fraction(0))) / b[j]
            b[k] = Fraction(g[k][k]) - sum((mu[k][j] * mu[k][j] * b[j] for j in range(k)), Fraction(0))
            if b[k] <= 0:
                raise ValueError("Gram matrix is not positive definite")
        size_reduce(k, k - 1)
        if b[k] < (delta - mu[k][k - 1] ** 2) * b[k - 1]:
            swap(k)
            swaps += 1
            k = max(1, k - 1)
        else:
            for l in range(k - 2, -1, -1):
                size_reduce(k, l)
            k += 1

    logger.debug("LLL finished on rank %d after %d swaps", n, swaps)
    return u, g
