from __future__ import annotations

import pytest
from sympy import Rational

from orbifano.errors import InvalidState, NotApplicable
from orbifano.mmp.contractions import (
    MMPState,
    apply,
    conic_fibres,
    directed_available,
    rank_one_terminal,
)
from orbifano.mmp.curation import THEOREM_ROOTS, root_state, roots_for_k
from orbifano.mmp.theorem import discrepancy_report, tree_for, verify_theorem4
from orbifano.mmp.tree import (
    enumerate_tree,
    leaf_summary,
    render_tree_text,
    replay,
    terminal_paths,
    tree_to_json,
)


@pytest.fixture
def x4_root():
    return root_state(4, Rational(7, 3), 9)


def test_root_state_bookkeeping(x4_root):
    assert x4_root == MMPState.of(4, 0, 0, 9, 1)
    assert x4_root.rho_x == 5
    assert x4_root.degree == Rational(7, 3)


@pytest.mark.parametrize(
    "args",
    [
        (1, 0, 0, 3, 8),  # K2Y + rhoY != 10
        (7, 0, 0, 9, 1),  # basket too large
        (1, 0, 0, 1, 9),  # rho(X) = 0
        (-1, 0, 0, 2, 8),
    ],
)
def test_invalid_states(args):
    with pytest.raises(InvalidState):
        MMPState.of(*args)


def test_basket_text():
    assert MMPState.of(2, 1, 0, 6, 4).basket_text() == "2x1/3 + 1xA2"
    assert MMPState.of(0, 0, 0, 1, 9).basket_text() == "smooth"


def test_divisorial_effects(x4_root):
    s = apply(x4_root, "E4")
    assert (s.k, s.n2, s.n1, s.rhoY, s.K2Y) == (3, 0, 1, 8, 2)
    assert s.degree > x4_root.degree
    s = apply(s, "E2")
    assert (s.k, s.n2, s.n1, s.rhoY, s.K2Y) == (3, 0, 0, 6, 4)


def test_apply_rejects_unavailable_types(x4_root):
    with pytest.raises(NotApplicable):
        apply(x4_root, "E2")
    with pytest.raises(NotApplicable):
        apply(x4_root, "C")
    with pytest.raises(NotApplicable):
        apply(MMPState.of(1, 0, 0, 2, 8), "E1")


def test_rank_one_terminals():
    assert rank_one_terminal(MMPState.of(1, 0, 0, 2, 8)) == "D5"
    assert rank_one_terminal(MMPState.of(0, 0, 0, 1, 9)) == "D1"
    assert rank_one_terminal(MMPState.of(0, 3, 0, 7, 3)) == "D4"
    assert rank_one_terminal(MMPState.of(2, 0, 0, 4, 6)) is None


def test_conic_bundle_fibres():
    assert conic_fibres(MMPState.of(2, 2, 0, 8, 2)) == ("C2", "C2")
    assert conic_fibres(MMPState.of(0, 0, 2, 4, 6)) == ("C1",)
    assert conic_fibres(MMPState.of(1, 0, 0, 3, 7)) is None


def test_directed_rules(x4_root):
    assert "E1" not in directed_available(x4_root)
    assert "E1" in directed_available(x4_root, floating=True)
    after_e4 = apply(x4_root, "E4")
    # the A1 point made by E4 may be consumed at once
    assert "E2" in directed_available(after_e4, "E4")
    after_e6 = apply(root_state(6, 2, 10), "E6")
    assert "E3" not in directed_available(after_e6, "E6")


def test_replay_follows_the_theorem_sequence(x4_root):
    end = replay(x4_root, ("E4", "E2", "E4", "E5"))
    assert end == MMPState.of(1, 0, 0, 2, 8)
    with pytest.raises(NotApplicable):
        replay(x4_root, ("E2",))


def test_k6_tree(registry):
    tree = tree_for("X_{6,2}", "curated", registry)
    assert terminal_paths(tree) == {
        ("E6", "E6"): ["C(C2,C2)"],
        ("E6", "E6", "E6"): ["D4"],
    }
    assert render_tree_text(tree, title="X_{6,2}").splitlines()[0].startswith("X_{6,2}: [6x1/3]")
    as_json = tree_to_json(tree)
    assert as_json["basket"] == "6x1/3"
    assert [c["edge"] for c in as_json["children"]] == ["E6"]


def test_weighted_plane_is_already_terminal(registry):
    tree = tree_for("S_{1,25/3}", "raw", registry)
    assert terminal_paths(tree) == {(): ["D5"]}
    assert [str(leaf) for leaf in leaf_summary(tree)] == ["- -> D5"]


def test_curated_trees_are_subtrees_of_raw_trees(registry):
    for root in THEOREM_ROOTS:
        rec = registry.family(root.name)
        start = root_state(rec.k, rec.d, rec.r)
        raw = terminal_paths(enumerate_tree(start, "raw"))
        curated = terminal_paths(enumerate_tree(start, "curated"))
        for path, ends in curated.items():
            assert set(ends) <= set(raw[path]), (root.name, path)


def test_theorem_sequences_hold(registry):
    entries = verify_theorem4(registry)
    assert entries
    assert [e.id for e in entries if e.failed] == []


def test_discrepancies_have_unique_ids(registry):
    ids = [d.id for d in discrepancy_report(registry)]
    assert len(ids) == len(set(ids))


def test_roots_by_k():
    assert [r.name for r in roots_for_k(6)] == ["X_{6,2}"]
    assert roots_for_k(7) == []
    assert {r.k for r in THEOREM_ROOTS} == {1, 2, 3, 4, 5, 6}


def test_k5_curated_tree(registry):
    tree = tree_for("X_{5,5/3}", "curated", registry)
    assert terminal_paths(tree) == {("E4", "E4", "E5", "E5"): ["D5"]}


def test_conic_bundle_is_offered_next_to_divisorial_moves():
    s = apply(apply(root_state(6, 2, 10), "E6"), "E6")
    assert s == MMPState.of(2, 2, 0, 8, 2)
    # both branches of the k = 6 tree leave this state
    assert directed_available(s, "E6") == ["E6", "C"]
