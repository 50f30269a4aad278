"""Test the enumeration budget."""

import time

import pytest

from lattice_lab.budget import BudgetExceeded, EnumerationBudget, EnumerationIncomplete


class TestBudgetExceeded:
    """Test the BudgetExceeded exception family."""

    def test_budget_exceeded_is_runtime_error(self) -> None:
        """Test that BudgetExceeded inherits from RuntimeError."""
        assert issubclass(BudgetExceeded, RuntimeError)

    def test_incomplete_is_budget_exceeded(self) -> None:
        """Test that EnumerationIncomplete can be caught as BudgetExceeded."""
        assert issubclass(EnumerationIncomplete, BudgetExceeded)

    def test_incomplete_carries_bracket(self) -> None:
        """Test that EnumerationIncomplete keeps the bounds it established."""
        exc = EnumerationIncomplete("stopped", explored_radius=3, best_norm=6, lower_bound=4, upper_bound=6)
        assert (exc.explored_radius, exc.best_norm, exc.lower_bound, exc.upper_bound) == (3, 6, 4, 6)
        assert str(exc) == "stopped"


class TestEnumerationBudget:
    """Test node allowances and deadlines."""

    def test_unlimited_by_default(self) -> None:
        """Test that a default budget never runs out of nodes."""
        budget = EnumerationBudget()
        budget.debit(10**9)
        assert budget.remaining is None

    def test_successful_debit_reduces_remaining(self) -> None:
        """Test that debits reduce the remaining allowance."""
        budget = EnumerationBudget(limit=100)
        budget.debit(30)
        budget.debit(20)
        assert budget.remaining == 50

    def test_debit_exact_remaining_amount(self) -> None:
        """Test debiting the exact remaining amount."""
        budget = EnumerationBudget(limit=50)
        budget.debit(50)
        assert budget.remaining == 0

    def test_over_budget_raises_exception(self) -> None:
        """Test that over-budget attempts raise BudgetExceeded."""
        budget = EnumerationBudget(limit=50)
        budget.debit(30)
        with pytest.raises(BudgetExceeded, match="attempted to debit 25 nodes, only 20 left"):
            budget.debit(25)

    def test_negative_limit_rejected(self) -> None:
        """Test that negative limits are rejected during instantiation."""
        with pytest.raises(ValueError):
            EnumerationBudget(limit=-1)

    def test_negative_units_raises_value_error(self) -> None:
        """Test that negative units raise ValueError."""
        with pytest.raises(ValueError, match="units must be non-negative"):
            EnumerationBudget(limit=10).debit(-1)

    def test_reset_restores_full_limit(self) -> None:
        """Test that reset restores the full allowance."""
        budget = EnumerationBudget(limit=100)
        budget.debit(80)
        budget.reset()
        assert budget.remaining == 100
        assert budget.limit == 100

    def test_deadline_expires(self) -> None:
        """Test that the wall-clock allowance is enforced on debit."""
        budget = EnumerationBudget(seconds=0.01)
        time.sleep(0.05)
        with pytest.raises(BudgetExceeded, match="time allowance"):
            budget.debit(1)

    def test_reset_restarts_the_clock(self) -> None:
        """Test that reset gives a fresh deadline."""
        budget = EnumerationBudget(seconds=0.05)
        time.sleep(0.1)
        budget.reset()
        budget.debit(1)
