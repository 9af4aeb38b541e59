from __future__ import annotations

import pytest
from sympy import Rational

from orbifano.errors import BadCongruence
from orbifano.invariants.formulas import (
    defect_bounds,
    defect_from_pi1,
    hilbert_function,
    invariants_of,
    poincare_series,
)
from orbifano.invariants.sieve import (
    candidate_sieve,
    cascade,
    cascade_families,
    defective_candidates,
    no_toric_degeneration,
    not_occurring,
    numerical_bounds,
    pro2_bounds,
    root_degrees,
    survivors,
)
from orbifano.verify.suites import NUMERICAL_BOUNDS, PRO2_BOUNDS


@pytest.fixture(scope="module")
def statuses():
    return candidate_sieve()


def test_invariants_of_x4():
    inv = invariants_of(4, "7/3")
    assert (inv.h0, inv.r, inv.n, inv.moduli) == (2, 9, 3, 0)
    assert inv.c2hat == Rational(13, 3)


def test_invariants_of_weighted_plane():
    inv = invariants_of(1, Rational(25, 3))
    assert (inv.h0, inv.r, inv.n, inv.moduli) == (9, 2, 2, -8)


@pytest.mark.parametrize("k, d", [(1, 3), (1, "-2/3"), (2, "1/3")])
def test_bad_congruence(k, d):
    with pytest.raises(BadCongruence):
        invariants_of(k, d)


def test_poincare_series():
    # the t^2 coefficient is 3d + 1 for the weighted plane
    assert poincare_series(1, "25/3", 3) == [1, 9, 26]
    assert hilbert_function(4, "7/3", 1) == 2
    assert poincare_series(1, "25/3", 0) == []


def test_defect_bounds():
    assert defect_bounds(5, "8/3") == (1, 2)
    assert defect_bounds(6, 1) == (1, 3)
    assert defect_bounds(1, "25/3") == (0, 0)


@pytest.mark.parametrize("tag, sigma", [("0", 0), ("Z/3", 1), ("(Z/3)^2", 2)])
def test_defect_from_pi1(tag, sigma):
    assert defect_from_pi1(tag) == sigma


def test_defect_from_unknown_group():
    with pytest.raises(ValueError):
        defect_from_pi1("Z/2")


def test_sieve_survivors(statuses):
    assert len(survivors(statuses)) == 30
    undecided = [s.pair for s in statuses if s.verdict == "undecided"]
    assert undecided == [(2, Rational(20, 3)), (4, Rational(10, 3)), (5, Rational(8, 3))]
    assert [s.pair for s in statuses if s.verdict == "undecided" and s.sigma_min >= 1] == [
        (5, Rational(8, 3))
    ]


def test_sieve_bounds(statuses):
    assert pro2_bounds(statuses) == PRO2_BOUNDS
    assert numerical_bounds(statuses) == NUMERICAL_BOUNDS


def test_undecided_pairs_lie_above_the_mmp_roots(statuses):
    assert root_degrees() == {
        1: Rational(25, 3),
        2: Rational(17, 3),
        3: Rational(5),
        4: Rational(7, 3),
        5: Rational(5, 3),
        6: Rational(2),
    }
    undecided = {s.pair for s in statuses if s.verdict == "undecided"}
    assert not_occurring(survivors(statuses)) == undecided
    assert not_occurring(cascade()) == set()


def test_k6_degree_4_is_defective_and_excluded(statuses):
    by_pair = {s.pair: s for s in defective_candidates(statuses)}
    status = by_pair[(6, Rational(4))]
    assert status.sigma_min == 2
    assert status.verdict == "excluded-by-cover"
    assert status.cover_degree == 36


def test_cascade():
    pairs = cascade()
    assert len(pairs) == 27
    assert (1, Rational(25, 3)) in pairs and (1, Rational(1, 3)) in pairs
    assert (2, Rational(20, 3)) not in pairs


def test_cascade_families():
    names = cascade_families()
    assert len(names) == 29
    assert names["S_{1,25/3}"] == 5
    assert names["B_{1,16/3}"] == 2 and names["X_{1,16/3}"] == 1
    assert "X_{1,25/3}" not in names


def test_families_without_toric_degeneration():
    assert no_toric_degeneration(cascade()) == [
        (4, Rational(1, 3)),
        (5, Rational(2, 3)),
        (6, Rational(1)),
    ]


def test_registry_rows_match_the_formulas(registry):
    for rec in registry.families:
        inv = invariants_of(rec.k, rec.d)
        assert (inv.h0, inv.r) == (rec.h0, rec.r), rec.name
