"""Linear algebra over the two-element field, vectors packed into int bitmasks.

Bit i of a mask is coordinate i.
"""

from __future__ import annotations

from typing import Dict, Iterator, List, Optional, Sequence, Tuple


def pack(bits: Sequence[int]) -> int:
    mask = 0
    for i, b in enumerate(bits):
        if b & 1:
            mask |= 1 << i
    return mask


def unpack(mask: int, length: int) -> Tuple[int, ...]:
    return tuple((mask >> i) & 1 for i in range(length))


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def echelon(vectors: Sequence[int]) -> Dict[int, int]:
    """Reduced echelon basis keyed by pivot bit (the lowest set bit)."""
    basis: Dict[int, int] = {}
    for vec in vectors:
        for pivot, row in basis.items():
            if (vec >> pivot) & 1:
                vec ^= row
        if vec:
            pivot = (vec & -vec).bit_length() - 1
            for other in list(basis):
                if (basis[other] >> pivot) & 1:
                    basis[other] ^= vec
            basis[pivot] = vec
    return basis


def rank(vectors: Sequence[int]) -> int:
    return len(echelon(vectors))


def independent_subset(vectors: Sequence[int]) -> List[int]:
    """Greedy maximal independent subfamily, in input order."""
    chosen: List[int] = []
    basis: Dict[int, int] = {}
    for vec in vectors:
        reduced = vec
        for pivot, row in basis.items():
            if (reduced >> pivot) & 1:
                reduced ^= row
        if reduced:
            pivot = (reduced & -reduced).bit_length() - 1
            for other in list(basis):
                if (basis[other] >> pivot) & 1:
                    basis[other] ^= reduced
            basis[pivot] = reduced
            chosen.append(vec)
    return chosen


def solve(columns_of_rows: Sequence[int], rhs: int, n: int) -> Optional[int]:
    """Solve A·x = rhs for a square system given by its rows as masks.

    Returns the solution mask or None when the system is inconsistent.
    """
    rows = [(row, (rhs >> i) & 1) for i, row in enumerate(columns_of_rows)]
    where: Dict[int, int] = {}
    r = 0
    for col in range(n):
        sel = next((i for i in range(r, len(rows)) if (rows[i][0] >> col) & 1), None)
        if sel is None:
            continue
        rows[r], rows[sel] = rows[sel], rows[r]
        prow, pval = rows[r]
        for i in range(len(rows)):
            if i != r and (rows[i][0] >> col) & 1:
                rows[i] = (rows[i][0] ^ prow, rows[i][1] ^ pval)
        where[col] = r
        r += 1
    if any(val for row, val in rows[r:] if row == 0):
        return None
    x = 0
    for col, i in where.items():
        if rows[i][1]:
            x |= 1 << col
    return x


def span(generators: Sequence[int]) -> Iterator[int]:
    """Every element of the span, in Gray-code order starting from 0."""
    gens = independent_subset(generators)
    word = 0
    yield word
    for step in range(1, 1 << len(gens)):
        flip = (step & -step).bit_length() - 1
        word ^= gens[flip]
        yield word
