"""Shared lattice fixtures."""

import pytest

from lattice_lab import Lattice, named


@pytest.fixture(scope="session")
def e8() -> Lattice:
    """E8 built as Gamma8."""
    return named("E8")


@pytest.fixture(scope="session")
def e7() -> Lattice:
    return named("E7")


@pytest.fixture(scope="session")
def e6() -> Lattice:
    return named("E6")


@pytest.fixture(scope="session")
def gamma12() -> Lattice:
    return named("Gamma12")


@pytest.fixture(scope="session")
def e7_squared() -> Lattice:
    return named("E7^2")
