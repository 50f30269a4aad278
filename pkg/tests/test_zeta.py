"""Test the ζ recursion, its rescaled forms and the mod-4 relation sweep."""

import json
from math import factorial

import pytest
from pydantic import ValidationError

from lattice_lab import (
    ZetaPolynomial,
    conjecture_check,
    conjecture_poly,
    scaled_zeta_table,
    substitute_epsilon,
    verify_range,
    xi_check,
    zeta,
    zeta_prime,
)
from lattice_lab.zeta import EPS_VARS, SweepProgress, double_factorial, xi_offence

SCALED_ROWS = {
    1: "α",
    2: "α² + 4ε − 4",
    3: "3α³ + 20αε + 12α + 4γ",
    4: "15α⁴ + 160α²ε − 120α² + 20αγ + 360ε² − 720ε + 360",
    5: "105α⁵ + 1456α³ε + 840α³ + 224α²γ + 4984αε² + 6160αε + 1232γε + 3192α + 560γ",
    6: (
        "945α⁶ + 16884α⁴ε − 11340α⁴ + 2016α³γ + 93576α²ε² − 146160α²ε + 14448αγε"
        " + 151200ε³ + 74088α² − 5040αγ + 840γ² − 453600ε² + 453600ε − 151200"
    ),
    7: (
        "10395α⁷ + 221364α⁵ε + 124740α⁵ + 28116α⁴γ + 1558392α³ε² + 1851696α³ε"
        " + 342672α²γε + 3621024αε³ + 957528α³ + 144144α²γ + 9240αγ² + 6852384αε²"
        " + 978912γε² + 7061472αε + 931392γε + 1929312α + 522720γ"
    ),
    8: (
        "135135α⁸ + 3418272α⁶ε − 2162160α⁶ + 365508α⁵γ + 31141968α⁴ε² − 43531488α⁴ε"
        " + 5319600α³γε + 118472640α²ε³ + 22177584α⁴ − 1873872α³γ + 264264α²γ²"
        " − 285597312α²ε² + 19260384αγε² + 151351200ε⁴ + 288699840α²ε − 14030016αγε"
        " + 1633632γ²ε − 605404800ε³ − 89945856α² + 7948512αγ − 480480γ² + 908107200ε²"
        " − 605404800ε + 151351200"
    ),
}


class TestZetaPolynomial:
    """Test the polynomial value type."""

    def test_normalises_denominator(self) -> None:
        """Test that zero terms are dropped and the denominator reduced."""
        poly = ZetaPolynomial.of({(1, 0, 0): 2, (0, 0, 0): 4, (0, 1, 0): 0}, denominator=6)
        assert poly.terms == {(1, 0, 0): 1, (0, 0, 0): 2}
        assert poly.denominator == 3
        assert not poly.is_integral

    def test_rejects_unknown_variables(self) -> None:
        """Test that only the β and ε coordinate systems are accepted."""
        with pytest.raises(ValidationError):
            ZetaPolynomial(vars=("x", "y", "z"), terms={})

    def test_rejects_negative_exponents(self) -> None:
        """Test that exponents must be non-negative."""
        with pytest.raises(ValidationError):
            ZetaPolynomial.of({(-1, 0, 0): 1})

    def test_render_with_denominator(self) -> None:
        """Test rendering of a fractional polynomial."""
        assert ZetaPolynomial.of({(1, 0, 0): 1, (0, 0, 0): -1}, denominator=2).render() == "(α − 1)/2"

    def test_render_zero(self) -> None:
        """Test that the zero polynomial renders as 0."""
        assert ZetaPolynomial().render() == "0"

    def test_ascii_render(self) -> None:
        """Test the ASCII style."""
        assert conjecture_poly(2).render("ascii") == "alpha^2 + 4*eps - 4"

    def test_parse_both_styles(self) -> None:
        """Test that the Unicode and ASCII renderings parse to the same polynomial."""
        poly = conjecture_poly(4)
        assert ZetaPolynomial.parse(poly.render()) == poly
        assert ZetaPolynomial.parse(poly.render("ascii")) == poly

    def test_parse_selects_beta_without_eps(self) -> None:
        """Test that text without ε is read in α, β, γ."""
        poly = ZetaPolynomial.parse("α^3 + 5αβ + 24α + 8γ")
        assert poly == zeta(3)

    def test_parse_rejects_garbage(self) -> None:
        """Test that unknown symbols are reported."""
        with pytest.raises(ValueError, match="cannot read"):
            ZetaPolynomial.parse("3x + 1")

    def test_json_lists_terms_in_order(self) -> None:
        """Test that JSON terms follow the canonical order with coefficients as text."""
        dumped = json.loads(conjecture_poly(2).model_dump_json())
        assert dumped["terms"] == [
            {"exp": [2, 0, 0], "coef": "1"},
            {"exp": [0, 1, 0], "coef": "4"},
            {"exp": [0, 0, 0], "coef": "-4"},
        ]
        assert ZetaPolynomial.model_validate(dumped) == conjecture_poly(2)

    def test_reduce_mod(self) -> None:
        """Test symmetric residues modulo 4."""
        reduced = conjecture_poly(3).reduce_mod(4)
        assert reduced.terms == {(3, 0, 0): -1}

    def test_reduce_mod_needs_integral(self) -> None:
        """Test that fractional polynomials do not reduce."""
        with pytest.raises(ValueError):
            ZetaPolynomial.of({(0, 0, 0): 1}, denominator=3).reduce_mod(4)


class TestRecursion:
    """Test ζ_r and ζ′_r."""

    def test_first_terms(self) -> None:
        """Test ζ₀ to ζ₃ in α, β, γ."""
        assert zeta(0).render() == "1"
        assert zeta(1).render() == "α"
        assert zeta(2).render() == "α² + β − 8"
        assert zeta(3).render() == "α³ + 5αβ + 24α + 8γ"

    def test_classical_variant(self) -> None:
        """Test that the classical recursion has no constant correction."""
        assert zeta(2, classical=True).render() == "α² + β"
        assert zeta(3, classical=True).render() == "α³ + 5αβ + 8γ"

    def test_negative_index(self) -> None:
        """Test that ζ_{-1} is refused."""
        with pytest.raises(ValueError):
            zeta(-1)

    @pytest.mark.parametrize("r", range(0, 13))
    def test_parity_grading(self, r: int) -> None:
        """Test that every monomial of ζ_r has α- plus γ-degree congruent to r mod 2."""
        assert all((i + k) % 2 == r % 2 for i, _, k in zeta(r).terms)

    @pytest.mark.parametrize("r", [1, 4, 7, 10])
    def test_prime_is_gamma_free_part(self, r: int) -> None:
        """Test that ζ′_r is ζ_r at γ = 0."""
        assert zeta_prime(r) == zeta(r).restrict_gamma_zero()

    def test_substitute_epsilon(self) -> None:
        """Test β = α² + 8ε on ζ₂."""
        assert substitute_epsilon(zeta(2)).render() == "2α² + 8ε − 8"
        assert substitute_epsilon(zeta(2)).vars == EPS_VARS

    def test_substitute_twice_rejected(self) -> None:
        """Test that an ε polynomial cannot be substituted again."""
        with pytest.raises(ValueError):
            substitute_epsilon(substitute_epsilon(zeta(2)))

    @pytest.mark.parametrize("g", range(1, 9))
    def test_scaled_matches_epsilon_substitution(self, g: int) -> None:
        """Test that the ε-coordinate recursion agrees with substituting into ζ_g."""
        direct = substitute_epsilon(zeta(g))
        scaled = conjecture_poly(g)
        factor = double_factorial(2 * g - 3)
        assert set(direct.terms) == set(scaled.terms)
        for exp in direct.terms:
            assert scaled.coefficient(exp) == direct.coefficient(exp) * factor / factorial(g)


class TestDoubleFactorial:
    @pytest.mark.parametrize(("n", "expected"), [(-1, 1), (1, 1), (3, 3), (5, 15), (7, 105), (13, 135135)])
    def test_values(self, n: int, expected: int) -> None:
        """Test odd double factorials."""
        assert double_factorial(n) == expected

    @pytest.mark.parametrize("n", [-3, 0, 4])
    def test_rejects_even_or_small(self, n: int) -> None:
        """Test that even arguments and n < -1 are refused."""
        with pytest.raises(ValueError):
            double_factorial(n)


class TestScaledTable:
    """Test (2g−3)!!ζ_g/g! against the known rows."""

    @pytest.mark.parametrize("g", sorted(SCALED_ROWS))
    def test_rows(self, g: int) -> None:
        """Test each row coefficient by coefficient."""
        assert conjecture_poly(g) == ZetaPolynomial.parse(SCALED_ROWS[g])

    @pytest.mark.parametrize("g", [1, 2, 3, 4])
    def test_rendering_order(self, g: int) -> None:
        """Test that the rendered rows follow the graded term order."""
        assert conjecture_poly(g).render() == SCALED_ROWS[g]

    def test_table_text(self) -> None:
        """Test the table layout."""
        assert scaled_zeta_table(2) == "1  α\n2  α² + 4ε − 4"

    def test_table_needs_a_row(self) -> None:
        """Test that an empty table is refused."""
        with pytest.raises(ValueError):
            scaled_zeta_table(0)


class TestRelations:
    """Test the integrality and mod-4 checks."""

    def test_g2_sign(self) -> None:
        """Test that g = 2 reduces to +α²."""
        relation = conjecture_check(2)
        assert relation.passed
        assert relation.sign == 1
        assert relation.mod4_poly is not None and relation.mod4_poly.terms == {(2, 0, 0): 1}

    def test_g3_sign(self) -> None:
        """Test that g = 3 reduces to −α³ with the nilpotency bounds."""
        relation = conjecture_check(3)
        assert relation.passed
        assert relation.sign == -1
        assert (relation.n_alpha2_upper, relation.n_beta4_upper) == (3, 2)

    @pytest.mark.parametrize("g", range(1, 25))
    def test_holds_for_small_genus(self, g: int) -> None:
        """Test integrality and the ±α^g reduction for g up to 24."""
        relation = conjecture_check(g)
        assert relation.integral
        assert relation.passed, relation.offending

    @pytest.mark.parametrize("g", range(1, 17))
    def test_xi_criterion(self, g: int) -> None:
        """Test the odd-denominator criterion on the γ-free part."""
        assert xi_check(g)
        assert xi_offence(g) is None

    @pytest.mark.parametrize("g", range(1, 33))
    def test_xi_agrees_with_relation(self, g: int) -> None:
        """Test that the γ-free criterion and the full relation agree."""
        assert xi_check(g) == conjecture_check(g).passed

    @pytest.mark.slow
    def test_holds_to_128(self) -> None:
        """Test both checks at every genus up to 128."""
        for g in range(1, 129):
            relation = conjecture_check(g)
            assert relation.integral, g
            assert relation.passed, (g, relation.offending)
            assert xi_check(g), g

    def test_genus_must_be_positive(self) -> None:
        """Test that g = 0 is refused."""
        with pytest.raises(ValueError):
            conjecture_poly(0)


class TestSweep:
    """Test checkpointed sweeps."""

    def test_sweep_writes_checkpoint(self, tmp_path) -> None:
        """Test that a sweep records every genus and leaves a checkpoint."""
        checkpoint = tmp_path / "sweep.json"
        progress = verify_range(20, checkpoint=checkpoint)
        assert progress.completed == 20
        assert progress.passed
        saved = SweepProgress.model_validate_json(checkpoint.read_text())
        assert [e.g for e in saved.entries] == list(range(1, 21))

    def test_sweep_resumes(self, tmp_path) -> None:
        """Test that a longer sweep continues from the saved entries."""
        checkpoint = tmp_path / "sweep.json"
        stale = SweepProgress(up_to=3, entries=[{"g": g, "passed": True, "sign": 1} for g in (1, 2, 3)])
        checkpoint.write_text(stale.model_dump_json())
        progress = verify_range(5, checkpoint=checkpoint)
        assert [e.g for e in progress.entries] == [1, 2, 3, 4, 5]
        # entries 1 to 3 came from the checkpoint, not from a recomputation
        assert progress.entries[2].sign == 1

    def test_other_variant_checkpoint_ignored(self, tmp_path) -> None:
        """Test that a classical checkpoint does not seed an instanton sweep."""
        checkpoint = tmp_path / "sweep.json"
        checkpoint.write_text(SweepProgress(up_to=2, classical=True, entries=[{"g": 1, "passed": False}]).model_dump_json())
        progress = verify_range(2, checkpoint=checkpoint)
        assert progress.passed

    def test_up_to_positive(self) -> None:
        """Test that an empty range is refused."""
        with pytest.raises(ValueError):
            verify_range(0)
