from __future__ import annotations

from typing import Annotated, Any, Tuple

from pydantic import AfterValidator, BeforeValidator


def coerce_integer(value: Any) -> int:
    """Accept ints and decimal strings; reject floats and bools."""
    if isinstance(value, bool):
        raise ValueError("booleans are not lattice integers")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        text = value.strip()
        try:
            return int(text, 10)
        except ValueError:
            raise ValueError(f"not a decimal integer: {value!r}") from None
    raise ValueError(f"expected an integer, got {type(value).__name__}")


def coerce_vector(value: Any) -> Tuple[int, ...]:
    """Coerce a sequence of ints or decimal strings to a tuple of ints."""
    return tuple(coerce_integer(entry) for entry in value)


def coerce_matrix(value: Any) -> Tuple[Tuple[int, ...], ...]:
    """Coerce a list of rows entry by entry."""
    return tuple(coerce_vector(row) for row in value)


def validate_rectangular(rows: Tuple[Tuple[int, ...], ...]) -> Tuple[Tuple[int, ...], ...]:
    """Validate that every row has the same width."""
    widths = {len(row) for row in rows}
    if len(widths) > 1:
        raise ValueError(f"rows have inconsistent widths {sorted(widths)}")
    return rows


def validate_bits(bits: Tuple[int, ...]) -> Tuple[int, ...]:
    """Validate a vector over the two-element field."""
    if any(b not in (0, 1) for b in bits):
        raise ValueError("class bits must be 0 or 1")
    return bits


IntVector = Annotated[Tuple[int, ...], BeforeValidator(coerce_vector)]
IntMatrix = Annotated[
    Tuple[Tuple[int, ...], ...],
    BeforeValidator(coerce_matrix),
    AfterValidator(validate_rectangular),
]
BitVector = Annotated[Tuple[int, ...], BeforeValidator(coerce_vector), AfterValidator(validate_bits)]

# Coordinates with respect to a lattice basis.
LatticeVector = IntVector
