"""Test the lattice catalog and its builders."""

import os

import pytest

from lattice_lab import (
    BinaryCode,
    ConstructionError,
    coset_minima,
    count_by_norm,
    construction_a,
    gamma,
    lattice_from_generators,
    min_characteristic_norm,
    named,
    root_lattice,
)
from lattice_lab.constructions import E7_SQUARED_BASIS, gamma_witness, glue_witness
from lattice_lab.lattice import CosetClass


class TestRootLattices:
    """Test the A, D and E families."""

    @pytest.mark.parametrize(
        ("name", "rank", "roots", "det"),
        [
            ("A2", 2, 6, 3),
            ("A4", 4, 20, 5),
            ("D4", 4, 24, 4),
            ("D5", 5, 40, 4),
            ("E6", 6, 72, 3),
            ("E7", 7, 126, 2),
            ("E8", 8, 240, 1),
        ],
    )
    def test_root_counts(self, name: str, rank: int, roots: int, det: int) -> None:
        """Test rank, root count and determinant of small root lattices."""
        lattice = named(name)
        assert lattice.rank == rank
        assert count_by_norm(lattice, 2)[2] == roots
        assert lattice.determinant() == det
        assert lattice.is_even()

    def test_small_d_rejected(self) -> None:
        """Test that D2 is not a root lattice of this catalog."""
        with pytest.raises(ConstructionError):
            root_lattice("D", 2)

    def test_no_e9(self) -> None:
        """Test that the E family stops at 8."""
        with pytest.raises(ConstructionError):
            root_lattice("E", 9)


class TestGamma:
    """Test Gamma_4k = D_4k plus the half vector."""

    def test_gamma8_is_e8(self) -> None:
        """Test that Gamma8 is even unimodular with 240 roots."""
        lattice = gamma(2)
        assert lattice.is_unimodular() and lattice.is_even()
        assert count_by_norm(lattice, 2)[2] == 240

    def test_gamma12_is_odd(self, gamma12) -> None:
        """Test that Gamma12 is odd unimodular with the D12 roots and no norm-1 vectors."""
        assert gamma12.is_unimodular()
        assert not gamma12.is_even()
        counts = count_by_norm(gamma12, 2)
        assert counts == {1: 0, 2: 264}

    def test_gamma4_is_z4(self) -> None:
        """Test that Gamma4 has eight vectors of norm one."""
        assert count_by_norm(gamma(1), 1) == {1: 8}

    def test_half_vector_witness(self, gamma12) -> None:
        """Test that the standard witness is (1/2, ..., 1/2)."""
        w = gamma_witness(3)
        assert gamma12.norm(w) == 3
        assert gamma12.embed(w) == (1,) * 12

    def test_gamma_needs_positive_k(self) -> None:
        """Test that Gamma0 is refused."""
        with pytest.raises(ConstructionError):
            gamma(0)


class TestCatalog:
    """Test catalog lookups."""

    @pytest.mark.parametrize(
        ("alias", "canonical"),
        [("E7²", "E7^2"), ("e7^2", "E7^2"), ("gamma(12)", "Gamma12"), ("D_4", "D4"), ("z 3", "Z3")],
    )
    def test_aliases(self, alias: str, canonical: str) -> None:
        """Test that spelling variants resolve to the same lattice."""
        assert named(alias).gram == named(canonical).gram

    def test_unknown_name(self) -> None:
        """Test that an unknown name lists the catalog."""
        with pytest.raises(ConstructionError, match="catalog"):
            named("Barnes-Wall")

    def test_gamma_rank_must_be_multiple_of_four(self) -> None:
        """Test that Gamma10 is refused."""
        with pytest.raises(ConstructionError):
            named("Gamma10")


class TestGluedLattices:
    """Test the glued members of the catalog."""

    @pytest.mark.parametrize(
        ("name", "rank", "roots"),
        [
            ("A15", 15, 240),
            ("E7^2", 14, 252),
            ("D8^2", 16, 224),
            ("D6^3", 18, 180),
            ("D4^5", 20, 120),
        ],
    )
    def test_odd_unimodular(self, name: str, rank: int, roots: int) -> None:
        """Test that each glued lattice is odd unimodular with the expected roots."""
        lattice = named(name)
        assert lattice.rank == rank
        assert lattice.is_unimodular()
        assert not lattice.is_even()
        counts = count_by_norm(lattice, 2)
        assert counts[1] == 0
        assert counts[2] == roots

    def test_explicit_e7_squared_basis(self, e7_squared) -> None:
        """Test that the explicit basis spans a lattice with the same invariants as the glue."""
        lattice = lattice_from_generators(E7_SQUARED_BASIS, denominator=4)
        assert lattice.rank == 14
        assert lattice.is_unimodular()
        assert count_by_norm(lattice, 2) == count_by_norm(e7_squared, 2)

    def test_characteristic_bound(self, e7_squared) -> None:
        """Test that E7^2 has no characteristic vector below norm 6."""
        assert min_characteristic_norm(e7_squared) == 6

    @pytest.mark.parametrize(("name", "norm"), [("D8^2", 4), ("D6^3", 4)])
    def test_witness_is_alone_in_its_class(self, name: str, norm: int) -> None:
        """Test that Min(w + 2L) = {±w} for the standard glue witness."""
        lattice = named(name)
        w = glue_witness(name)
        assert lattice.norm(w) == norm
        result = coset_minima(lattice, CosetClass.of(w))
        assert result.min_norm == norm
        assert set(result.vectors) == {w, tuple(-x for x in w)}

    @pytest.mark.slow
    def test_d4_fifth_witness(self) -> None:
        """Test the norm-5 witness of D4^5."""
        lattice = named("D4^5")
        w = glue_witness("D4^5")
        result = coset_minima(lattice, CosetClass.of(w))
        assert result.min_norm == 5
        assert set(result.vectors) == {w, tuple(-x for x in w)}


class TestConstructionA:
    def test_needs_self_orthogonal_code(self) -> None:
        """Test that a code with an odd-weight word is refused."""
        with pytest.raises(ConstructionError):
            construction_a(BinaryCode(length=3, generators=("100",)))

    def test_even_code_gives_d_type_roots(self) -> None:
        """Test Construction A on the code {0000, 1111}: det 4 with roots from 2e_i pairs."""
        lattice = construction_a(BinaryCode(length=4, generators=("1111",)))
        assert lattice.determinant() == 4
        assert count_by_norm(lattice, 2) == {1: 0, 2: 24}

    def test_zero_generators_rejected(self) -> None:
        """Test that generators spanning nothing are refused."""
        with pytest.raises(ConstructionError):
            lattice_from_generators([[0, 0]])


@pytest.mark.slow
class TestLargeLattices:
    """Rank 22 to 24 constructions."""

    def test_a1_22(self) -> None:
        """Test that A1^22 is unimodular with 44 roots and a norm-5 witness."""
        lattice = named("A1^22")
        assert lattice.is_unimodular()
        assert count_by_norm(lattice, 2) == {1: 0, 2: 44}
        assert lattice.norm(glue_witness("A1^22")) == 5

    def test_leech(self) -> None:
        """Test that the Leech lattice is even unimodular without roots."""
        lattice = named("Leech")
        assert lattice.rank == 24
        assert lattice.is_unimodular() and lattice.is_even()
        assert count_by_norm(lattice, 2) == {1: 0, 2: 0}

    def test_o23(self) -> None:
        """Test that O23 is odd unimodular of minimum 3."""
        lattice = named("O23")
        assert lattice.rank == 23
        assert lattice.is_unimodular()
        assert not lattice.is_even()
        assert count_by_norm(lattice, 3)[3] == 4600

    @pytest.mark.skipif(
        not os.environ.get("LATTICE_LAB_LEECH_KISSING"),
        reason="set LATTICE_LAB_LEECH_KISSING to enumerate the 196560 minimal vectors",
    )
    def test_leech_kissing_number(self) -> None:
        """Test the Leech kissing number."""
        assert count_by_norm(named("Leech"), 4)[4] == 196560
