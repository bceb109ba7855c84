"""Finite-field counts: formula vs exhaustive enumeration, congruences."""

import math

import pytest
from hypothesis import given, strategies as st

from cyclemotive import _ffenum_py
from cyclemotive.errors import BudgetError, DomainError
from cyclemotive.ffcount import (
    PrimePower,
    congruence_check,
    gaussian_binomial,
    gaussian_binomial_poly,
    grassmannian_count_brute,
    is_prime,
    rref_cell_census,
    toric_count,
)
from conftest import load_fan

P1 = load_fan("p1")
P2 = load_fan("p2")
P1XP1 = load_fan("p1xp1")
A2 = load_fan("a2")


def test_gaussian_binomial_examples():
    assert gaussian_binomial(3, 1, 2) == 7
    assert gaussian_binomial(4, 2, 3) == 130
    for n in range(6):
        for q in (2, 3, 4, 5):
            assert gaussian_binomial(n, 0, q) == 1
            assert gaussian_binomial(n, n, q) == 1


def test_gaussian_binomial_domain():
    with pytest.raises(DomainError):
        gaussian_binomial(3, 4, 2)
    with pytest.raises(DomainError):
        gaussian_binomial(3, -1, 2)
    with pytest.raises(DomainError):
        gaussian_binomial(3, 1, 1)


def test_gaussian_duality():
    for n in range(9):
        for k in range(n + 1):
            for q in (2, 3, 5, 9):
                assert gaussian_binomial(n, k, q) == gaussian_binomial(n, n - k, q)


def test_pascal_polynomial_route_agrees():
    """The recursion-built polynomial and the product formula are
    independent computations of the same count."""
    for n in range(9):
        for k in range(n + 1):
            poly = gaussian_binomial_poly(n, k)
            for q in (2, 3, 4, 5, 7, 8, 9):
                assert poly.evaluate(q) == gaussian_binomial(n, k, q)


def test_pascal_polynomial_constant_term_is_one():
    # one Schubert cell is a point; this is what drives the mod-q congruence
    for n in range(9):
        for k in range(n + 1):
            assert gaussian_binomial_poly(n, k).coefficient(0) == 1


def test_brute_force_examples():
    assert grassmannian_count_brute(1, 3, 2) == 7
    assert grassmannian_count_brute(2, 4, 2) == 35
    for n in range(5):
        for q in (2, 3, 5):
            assert grassmannian_count_brute(n, n, q) == 1


def test_brute_force_matches_formula_grid():
    for n in range(6):
        for k in range(n + 1):
            for q in (2, 3, 5):
                assert grassmannian_count_brute(k, n, q) == gaussian_binomial(n, k, q)


def test_cell_census_is_schubert_decomposition():
    """Every pivot pattern contributes exactly q^(free entries) subspaces,
    and the total reproduces the Gaussian binomial."""
    for (k, n, q) in [(1, 3, 2), (2, 4, 3), (2, 5, 2), (3, 5, 2)]:
        census = rref_cell_census(k, n, q)
        assert len(census) == math.comb(n, k)
        for pivots, count in census.items():
            free = sum(
                1
                for r, col in enumerate(pivots)
                for c in range(col + 1, n)
                if c not in pivots
            )
            assert count == q**free
        assert sum(census.values()) == gaussian_binomial(n, k, q)


def test_brute_force_preconditions():
    with pytest.raises(DomainError):
        grassmannian_count_brute(1, 3, 4)  # not prime
    with pytest.raises(DomainError):
        grassmannian_count_brute(1, 3, 11)  # prime but over the cap
    with pytest.raises(DomainError):
        grassmannian_count_brute(4, 3, 2)  # k > n
    with pytest.raises(BudgetError):
        grassmannian_count_brute(3, 12, 2)  # ~4e8 candidates


def test_budget_override(monkeypatch):
    with pytest.raises(BudgetError):
        grassmannian_count_brute(2, 4, 2, budget=10)
    monkeypatch.setenv("CYCLEMOTIVE_BUDGET", "10")
    with pytest.raises(BudgetError):
        grassmannian_count_brute(2, 4, 2)
    monkeypatch.setenv("CYCLEMOTIVE_BUDGET", "1000")
    assert grassmannian_count_brute(2, 4, 2) == 35
    monkeypatch.setenv("CYCLEMOTIVE_BUDGET", "lots")
    with pytest.raises(DomainError):
        grassmannian_count_brute(2, 4, 2)


def test_kernel_parity():
    """Compiled and pure-Python kernels agree cell by cell."""
    compiled = pytest.importorskip("cyclemotive._ffenum")
    from itertools import combinations

    for (k, n) in [(1, 3), (2, 4), (2, 5)]:
        for q in (2, 3):
            for pivots in combinations(range(n), k):
                assert compiled.cell_count(n, pivots, q) == _ffenum_py.cell_count(
                    n, pivots, q
                )


def test_prime_power():
    assert PrimePower.from_int(8) == PrimePower(8, 2, 3)
    assert PrimePower.from_int(7).is_prime
    assert not PrimePower.from_int(9).is_prime
    with pytest.raises(DomainError):
        PrimePower.from_int(12)
    with pytest.raises(DomainError):
        PrimePower.from_int(1)
    assert [n for n in range(2, 30) if is_prime(n)] == [
        2, 3, 5, 7, 11, 13, 17, 19, 23, 29,
    ]


def test_toric_count_examples():
    assert toric_count(P2, 2, 1) == 7
    assert toric_count(A2, 3, 1) == 9
    assert toric_count(P1XP1, 2) == 9
    # quadratic extension of the line: 4+1 points
    assert toric_count(P1, 2, 2) == 5


def test_toric_count_matches_brute_force():
    # the plane's fan and G(1,3) count the same points
    for q in (2, 3, 5):
        assert toric_count(P2, q) == grassmannian_count_brute(1, 3, q)


def test_toric_count_domain():
    with pytest.raises(DomainError):
        toric_count(P2, 1, 1)
    with pytest.raises(DomainError):
        toric_count(P2, 2, 0)


def test_congruence_examples():
    r = congruence_check(130, 1, 6, 3)
    assert r.mod_q_ok and r.mod_q_minus_1_ok and r.ok and r.testable
    r = congruence_check(7, 1, 3, 2)
    assert r.mod_q_ok and r.mod_q_minus_1_ok  # mod 1 is vacuous
    r = congruence_check(4, 1, 2, 3)
    assert r.mod_q_ok and r.mod_q_minus_1_ok


def test_congruence_failure_detected():
    r = congruence_check(131, 1, 6, 3)
    assert not r.mod_q_ok
    assert not r.ok


@given(st.integers(0, 10**9), st.integers(2, 97))
def test_congruence_self_residues(a, q):
    r = congruence_check(a, a % q, a % (q - 1) if q > 2 else 0, q)
    assert r.mod_q_ok
    assert r.mod_q_minus_1_ok


def test_congruence_json_shape():
    r = congruence_check(130, 1, 6, 3)
    data = r.to_json()
    assert data["actual"] == 130
    assert data["mod_q_ok"] is True
    assert data["testable"] is True
