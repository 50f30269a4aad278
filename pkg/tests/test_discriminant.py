"""Test discriminant groups and index-two overlattices."""

from fractions import Fraction

import pytest

from lattice_lab import PreconditionError, discriminant_group, index2_overlattices, named


class TestDiscriminantGroup:
    def test_a3_is_cyclic_of_order_four(self) -> None:
        """Test that A3*/A3 is Z/4 with a glue vector of norm 3/4."""
        group = discriminant_group(named("A3"))
        assert group.invariant_factors == (4,)
        assert group.order == 4
        assert group.quadratic_values == (Fraction(3, 4),)

    def test_d4_is_klein_four(self) -> None:
        """Test that D4*/D4 is Z/2 x Z/2."""
        group = discriminant_group(named("D4"))
        assert group.invariant_factors == (2, 2)
        assert all(value == 1 for value in group.quadratic_values)

    def test_unimodular_lattice_is_trivial(self, e8) -> None:
        """Test that E8 has a trivial discriminant group."""
        assert discriminant_group(e8).is_trivial

    def test_serialises_fractions_as_text(self) -> None:
        """Test that quadratic values dump as strings."""
        dumped = discriminant_group(named("A3")).model_dump(mode="json")
        assert dumped["quadratic_values"] == ["3/4"]


class TestIndexTwoOverlattices:
    def test_a3_glues_to_z3(self) -> None:
        """Test that A3 has exactly one integral index-two overlattice."""
        overs = index2_overlattices(named("A3"))
        assert len(overs) == 1
        assert overs[0].is_unimodular()
        assert not overs[0].is_even()

    def test_d8_overlattices(self) -> None:
        """Test that D8 sits in Z^8 and in two copies of E8."""
        overs = index2_overlattices(named("D8"))
        assert len(overs) == 3
        assert all(over.is_unimodular() for over in overs)
        assert sum(over.is_even() for over in overs) == 2

    def test_odd_determinant_rejected(self) -> None:
        """Test that determinants not divisible by 4 are refused."""
        with pytest.raises(PreconditionError):
            index2_overlattices(named("A2"))
