"""Test η and the invariants m, f2, f4, e0 and e_p."""

import pytest
from pydantic import ValidationError

from lattice_lab import (
    EnumerationBudget,
    InvariantSearch,
    PreconditionError,
    SymMonomial,
    e0,
    ep,
    eta,
    f2,
    f4,
    find_vector_of_norm,
    l_form,
    m_invariant,
    named,
    verify_certificate,
)
from lattice_lab.constructions import gamma_witness, glue_witness
from lattice_lab.invariants import condition_holds, invariant_value, lw_basis
from lattice_lab.lattice import diagonal


class TestSymMonomial:
    def test_parts_are_sorted(self) -> None:
        """Test that each part of a monomial is stored sorted."""
        a = SymMonomial(factors=[(1, 0), (0, 1), (2, 2)], m0=2)
        assert a.factors == ((0, 1), (1, 0), (2, 2))
        assert (a.m0, a.m1, a.degree) == (2, 1, 3)

    def test_of_splits_parts(self) -> None:
        """Test building a monomial from its constrained and free factors."""
        a = SymMonomial.of(lw=[(2, 0)], full=[(0, 1), (1, 0)])
        assert a.lw_factors == ((2, 0),)
        assert a.full_factors == ((0, 1), (1, 0))

    def test_m0_bounded_by_degree(self) -> None:
        """Test that m0 cannot exceed the number of factors."""
        with pytest.raises(ValidationError):
            SymMonomial(factors=[(1, 0)], m0=2)

    def test_dump_includes_m1(self) -> None:
        """Test that the free degree appears in the dump."""
        assert SymMonomial.of(full=[(1,)]).model_dump()["m1"] == 1


class TestEta:
    """Test η on vectors whose Min sets are known."""

    def test_empty_monomial_gives_one(self, e8) -> None:
        """Test that L_z of the empty product is 1."""
        assert l_form(e8, (1,) + (0,) * 7, SymMonomial()) == 1

    def test_e7(self, e7) -> None:
        """Test η = 6 for a norm-4 vector of E7."""
        w = e7.coords_of([2, 2, -2, -2, 0, 0, 0, 0])
        assert eta(e7, w) == 6
        assert eta(e7, w, signed=False) == 6

    def test_e6(self, e6) -> None:
        """Test η = 5 for a norm-4 vector of E6."""
        w = e6.coords_of([2, 2, 2, 2, 0, 0, 0, 0])
        assert eta(e6, w) == 5

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_a_n(self, n: int) -> None:
        """Test η = 3 for (1, 1, -1, -1, 0, ...) in A_n."""
        lattice = named(f"A{n}")
        w = lattice.coords_of([1, 1, -1, -1] + [0] * (n - 3))
        assert eta(lattice, w) == 3

    def test_root_of_e8(self, e8) -> None:
        """Test η = 1 for a root."""
        w = e8.coords_of([2, 2, 0, 0, 0, 0, 0, 0])
        assert eta(e8, w) == 1

    def test_linear_monomial_vanishes_on_root(self, e8) -> None:
        """Test that an odd-degree monomial cancels over ±w for a root."""
        w = e8.coords_of([2, 2, 0, 0, 0, 0, 0, 0])
        unit = (1,) + (0,) * 7
        assert eta(e8, w, SymMonomial.of(full=[unit])) == 0

    def test_non_extremal_vector_rejected(self, e8) -> None:
        """Test that a vector with a shorter class member is refused."""
        w = e8.coords_of([4, 4, 0, 0, 0, 0, 0, 0])
        with pytest.raises(PreconditionError, match="not extremal"):
            eta(e8, w)

    def test_zero_vector_rejected(self, e8) -> None:
        """Test that w = 0 is refused."""
        with pytest.raises(PreconditionError):
            eta(e8, (0,) * 8)

    def test_odd_lw_factor_rejected(self, e8) -> None:
        """Test that a constrained factor must pair evenly with w."""
        w = e8.coords_of([2, 2, 0, 0, 0, 0, 0, 0])
        units = [tuple(int(i == j) for j in range(8)) for i in range(8)]
        odd = next(x for x in units if e8.dot(w, x) % 2)
        with pytest.raises(PreconditionError, match="pairs oddly"):
            eta(e8, w, SymMonomial.of(lw=[odd]))

    def test_lw_basis_pairs_evenly(self, e7) -> None:
        """Test that every row of the 𝓛^w basis pairs evenly with w."""
        w = e7.coords_of([2, 2, -2, -2, 0, 0, 0, 0])
        basis = lw_basis(e7, w)
        assert len(basis) == 7
        assert all(e7.dot(w, row) % 2 == 0 for row in basis)


class TestFormulas:
    def test_values(self) -> None:
        """Test the candidate values contributed by a norm-5 vector."""
        assert invariant_value("m", 5, 0) == 4
        assert invariant_value("f2", 5, 2) == 2
        assert invariant_value("f4", 5, 1) == 2
        assert invariant_value("e0", 5, 1) == 1
        assert invariant_value("e0", 6, 0) == 2

    def test_conditions(self) -> None:
        """Test the divisibility conditions."""
        quadratic = SymMonomial.of(lw=[(1,), (1,)])
        assert condition_holds("f2", 12, quadratic)
        assert not condition_holds("f2", 8, quadratic)
        assert condition_holds("f4", 8, quadratic)
        assert not condition_holds("f4", 16, quadratic)
        assert condition_holds("e0", -1, SymMonomial())
        assert not condition_holds("ep", 9, SymMonomial(), modulus=3)

    def test_ep_needs_modulus(self) -> None:
        """Test that e_p without a modulus is an error."""
        with pytest.raises(ValueError):
            condition_holds("ep", 1, SymMonomial())


class TestE8:
    """E8: every nonzero class has norm 2 or 4."""

    def test_m(self, e8) -> None:
        """Test m(E8) = 1 from the root classes."""
        report = m_invariant(e8)
        assert report.value == 1
        assert report.exact and report.mode == "exhaustive"
        assert report.cosets_scanned == 255

    def test_f2(self, e8) -> None:
        """Test f2(E8) = 1."""
        assert f2(e8).value == 1

    def test_f4(self, e8) -> None:
        """Test f4(E8) = 1."""
        assert f4(e8).value == 1

    def test_e0(self, e8) -> None:
        """Test e0(E8) = 1."""
        assert e0(e8).value == 1

    @pytest.mark.parametrize("p", [3, 5, 7])
    def test_ep(self, e8, p: int) -> None:
        """Test that e_p(E8) = 1 for small odd moduli."""
        report = ep(e8, p)
        assert report.value == 1
        assert report.modulus == p

    @pytest.mark.parametrize("p", [0, 1, 4])
    def test_ep_rejects_bad_modulus(self, e8, p: int) -> None:
        """Test that e_p needs an odd modulus of at least 3."""
        with pytest.raises(ValueError):
            ep(e8, p)

    @pytest.mark.parametrize("invariant", ["m", "f2", "f4", "e0"])
    def test_certificates_verify(self, e8, invariant: str) -> None:
        """Test that each report carries a witness that re-checks."""
        report = InvariantSearch(e8).compute(invariant)  # type: ignore[arg-type]
        assert report.witness is not None
        check = verify_certificate(e8, report)
        assert check.valid, check.problems
        assert check.eta == report.witness.eta

    def test_ep_certificate_verifies(self, e8) -> None:
        """Test the certificate of e_3."""
        report = ep(e8, 3)
        assert verify_certificate(e8, report).valid

    def test_tampered_certificate_fails(self, e8) -> None:
        """Test that changing the claimed value breaks the certificate."""
        report = f4(e8)
        forged = report.model_copy(update={"value": 2})
        check = verify_certificate(e8, forged)
        assert not check.valid
        assert any("report claims 2" in problem for problem in check.problems)

    def test_report_serialises(self, e8) -> None:
        """Test that η is written as text in JSON."""
        dumped = f4(e8).model_dump(mode="json")
        assert isinstance(dumped["witness"]["eta"], str)
        assert dumped["invariant"] == "f4"


class TestOtherLattices:
    def test_diagonal_lattice_is_all_zero(self) -> None:
        """Test that Z^4 has every invariant equal to 0."""
        lattice = diagonal(4)
        search = InvariantSearch(lattice)
        for invariant in ("m", "f2", "f4", "e0"):
            report = search.compute(invariant)  # type: ignore[arg-type]
            assert report.value == 0
            assert report.witness is None
            assert verify_certificate(lattice, report).valid

    def test_gamma12(self, gamma12) -> None:
        """Test f4(Gamma12) = 1 and the lower bounds from the half vector."""
        search = InvariantSearch(gamma12)
        assert search.compute("f4").value == 1
        assert search.compute("m").value >= 2
        assert search.compute("e0").value >= 1

    def test_half_vector_as_user_witness(self, gamma12) -> None:
        """Test that (1/2, ..., 1/2) alone proves m(Gamma12) >= 2."""
        report = m_invariant(gamma12, witnesses=[gamma_witness(3)])
        assert report.mode == "user"
        assert not report.exact
        assert report.value == 2

    def test_chain_on_e8(self, e8) -> None:
        """Test m <= f2 <= 2 f4 and f4 <= 2 e0 on E8."""
        search = InvariantSearch(e8)
        m, two, four, zero = (search.compute(name).value for name in ("m", "f2", "f4", "e0"))  # type: ignore[arg-type]
        assert m <= two <= 2 * four
        assert four <= 2 * zero

    def test_parallel_matches_serial(self, e7) -> None:
        """Test that a two-process scan finds the same f4 as a serial one."""
        serial = InvariantSearch(e7, threads=1).compute("f4")
        parallel = InvariantSearch(e7, threads=2).compute("f4")
        assert parallel.value == serial.value
        assert parallel.witness == serial.witness

    @pytest.mark.slow
    def test_e7_squared(self, e7_squared) -> None:
        """Test e0 = 1, f2 = 2 and f4 = 2 for E7^2."""
        search = InvariantSearch(e7_squared)
        assert search.compute("e0").value == 1
        assert search.compute("f2").value == 2
        assert search.compute("f4").value == 2


class TestSearchModes:
    def test_witness_mode(self, e8) -> None:
        """Test a bounded scan: inexact but still finds the roots."""
        report = InvariantSearch(e8, mode="witness", norm_bound=2).compute("m")
        assert report.value == 1
        assert not report.exact
        assert report.norm_bound == 2

    def test_witness_mode_needs_bound_two(self, e8) -> None:
        """Test that a norm bound below 2 is refused."""
        with pytest.raises(ValueError):
            InvariantSearch(e8, mode="witness", norm_bound=1)

    def test_user_mode_needs_witnesses(self, e8) -> None:
        """Test that user mode without vectors is refused."""
        with pytest.raises(PreconditionError):
            InvariantSearch(e8, mode="user")

    def test_exhaustive_rank_limit(self) -> None:
        """Test that exhaustive search above rank 18 needs force."""
        with pytest.raises(PreconditionError, match="force"):
            InvariantSearch(diagonal(19), mode="exhaustive")

    def test_default_mode_by_rank(self, e8) -> None:
        """Test that small lattices default to exhaustive and large ones to witness scans."""
        assert InvariantSearch(e8).mode == "exhaustive"
        assert InvariantSearch(diagonal(17)).mode == "witness"

    def test_budget_truncates_witness_scan(self, e8) -> None:
        """Test that an exhausted budget yields a truncated zero report."""
        search = InvariantSearch(e8, mode="witness", budget=EnumerationBudget(limit=5))
        report = search.compute("f4")
        assert report.truncated
        assert report.value == 0

    def test_user_witness_must_be_extremal(self, e8) -> None:
        """Test that a non-extremal user vector is refused."""
        w = e8.coords_of([4, 4, 0, 0, 0, 0, 0, 0])
        with pytest.raises(PreconditionError):
            m_invariant(e8, witnesses=[w])


class TestCatalogBounds:
    """Named values and witness bounds for catalog lattices."""

    @pytest.mark.parametrize("k", range(1, 8))
    def test_diagonal_lattices_vanish(self, k: int) -> None:
        """Test m = f2 = f4 = 0 on Z^k."""
        search = InvariantSearch(diagonal(k))
        assert [search.compute(name).value for name in ("m", "f2", "f4")] == [0, 0, 0]  # type: ignore[arg-type]

    @pytest.mark.slow
    @pytest.mark.parametrize("k", [8, 9, 10])
    def test_larger_diagonal_lattices_vanish(self, k: int) -> None:
        """Test m = f2 = f4 = 0 on Z^8, Z^9 and Z^10."""
        search = InvariantSearch(diagonal(k))
        assert [search.compute(name).value for name in ("m", "f2", "f4")] == [0, 0, 0]  # type: ignore[arg-type]

    @pytest.mark.parametrize(("k", "expected"), [(1, 0), (2, 1), (3, 1)])
    def test_e0_of_gamma(self, k: int, expected: int) -> None:
        """Test e0(Gamma_4k) for Gamma4, Gamma8 and Gamma12."""
        report = e0(named(f"Gamma{4 * k}"))
        assert report.exact
        assert report.value == expected

    @pytest.mark.slow
    def test_e0_of_gamma16(self) -> None:
        """Test e0(Gamma16) = 2 by exhaustive search."""
        report = e0(named("Gamma16"), mode="exhaustive")
        assert report.exact
        assert report.value == 2

    def test_half_vector_of_gamma20(self) -> None:
        """Test that (1/2, ..., 1/2) alone gives m(Gamma20) >= 4."""
        report = m_invariant(named("Gamma20"), witnesses=[gamma_witness(5)])
        assert report.value == 4

    @pytest.mark.slow
    def test_gamma20_witness_with_equal_signs(self) -> None:
        """Test e0 and e_p of Gamma20 reach 2 from the witness (1^8, 0^12)."""
        lattice = named("Gamma20")
        w = lattice.coords_of([2] * 8 + [0] * 12)
        assert lattice.norm(w) == 8
        assert eta(lattice, w) == 64
        assert e0(lattice, witnesses=[w]).value == 2
        for p in (3, 5, 7):
            assert ep(lattice, p, witnesses=[w]).value == 2

    @pytest.mark.parametrize("name", ["D8^2", "D6^3"])
    def test_glue_witness_gives_m_three(self, name: str) -> None:
        """Test m >= 3 from the norm-4 glue witness."""
        report = m_invariant(named(name), witnesses=[glue_witness(name)])
        assert report.mode == "user"
        assert report.value == 3

    @pytest.mark.slow
    @pytest.mark.parametrize("name", ["D4^5", "A1^22"])
    def test_glue_witness_gives_m_four(self, name: str) -> None:
        """Test m >= 4 from the norm-5 glue witness."""
        assert m_invariant(named(name), witnesses=[glue_witness(name)]).value == 4

    @pytest.mark.slow
    def test_o23(self) -> None:
        """Test m(O23) >= 4 and f2(O23) >= 3 from a vector of norm 5."""
        lattice = named("O23")
        w = find_vector_of_norm(lattice, 5)
        assert w is not None
        assert m_invariant(lattice, witnesses=[w]).value == 4
        assert f2(lattice, witnesses=[w]).value >= 3

    @pytest.mark.slow
    def test_f2_of_a15(self) -> None:
        """Test f2(A15) >= 3 from a witness scan to norm 5."""
        report = f2(named("A15"), mode="witness", norm_bound=5)
        assert not report.exact
        assert report.value >= 3
