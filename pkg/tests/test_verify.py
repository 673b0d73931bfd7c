"""Claim checkers: pinned instances, verdict taxonomy, batteries."""

import pytest

from nicholslie.graphs import realize_graph
from nicholslie.verify import (
    CONFIRMED,
    COUNTEREXAMPLE,
    INCONCLUSIVE,
    PRECONDITION_NOT_MET,
    check_prop_all_bracketings,
    check_prop_disconnected_pair,
    check_theorem_equivalences,
    check_theorem_max_support,
    grid_matrices,
    grid_matrix_at,
    grid_size,
    sample_grid_matrices,
)

from conftest import matrix_from_strings, rational_matrix


# -- equivalence checker ------------------------------------------------------

def test_equivalences_connected_instance():
    report = check_theorem_equivalences(rational_matrix([[2, 2], [2, 2]]))
    assert report.verdict == CONFIRMED
    assert report.evidence["graph_connected"] is True
    assert report.evidence["descending_word_member"] is True
    assert report.evidence["ascending_word_member"] is True
    assert report.evidence["full_support_member"] is True


def test_equivalences_disconnected_instance():
    B = matrix_from_strings([["2", "z"], ["z^-1", "2"]], 8)
    report = check_theorem_equivalences(B)
    assert report.verdict == CONFIRMED
    assert not any(
        report.evidence[k]
        for k in (
            "graph_connected",
            "descending_word_member",
            "ascending_word_member",
            "full_support_member",
        )
    )


def test_equivalences_rank_one():
    report = check_theorem_equivalences(rational_matrix([[-1]]))
    assert report.verdict == CONFIRMED
    assert report.evidence["full_support_witness"] == "x1"


def test_equivalences_rejects_too_small_bound():
    with pytest.raises(ValueError):
        check_theorem_equivalences(rational_matrix([[2, 2], [2, 2]]), d_max=1)


def test_equivalences_guardrail_inconclusive():
    B = rational_matrix([[2, 2], [2, 2]])
    report = check_theorem_equivalences(B, max_terms=1)
    assert report.verdict == INCONCLUSIVE
    assert "guardrail" in report.evidence


# -- max-support checker ---------------------------------------------------------

def test_max_support_path():
    B = realize_graph(3, [(1, 2), (2, 3)])
    report = check_theorem_max_support(B, d_max=4)
    assert report.verdict == CONFIRMED
    assert report.evidence["max_supports"] == [[1, 2, 3]]


def test_max_support_edge_plus_isolated():
    B = realize_graph(3, [(1, 2)])
    report = check_theorem_max_support(B, d_max=4)
    assert report.verdict == CONFIRMED
    assert report.evidence["max_supports"] == [[1, 2], [3]]


def test_max_support_disconnected_pair():
    B = matrix_from_strings([["2", "z"], ["z^-1", "2"]], 8)
    report = check_theorem_max_support(B)
    assert report.verdict == CONFIRMED
    assert report.evidence["max_supports"] == [[1], [2]]


# -- proposition checkers ----------------------------------------------------------

def test_prop_pair_generators():
    B = rational_matrix([[2, 1], [1, 2]])
    report = check_prop_disconnected_pair(B, (1,), (2,))
    assert report.verdict == CONFIRMED


def test_prop_pair_square_against_generator():
    B = rational_matrix([[2, 1], [1, 2]])
    report = check_prop_disconnected_pair(B, (1, 1), (2,))
    assert report.verdict == CONFIRMED


def test_prop_pair_precondition_not_met():
    B = rational_matrix([[2, 2], [1, 2]])
    report = check_prop_disconnected_pair(B, (1,), (2,))
    assert report.verdict == PRECONDITION_NOT_MET
    assert report.evidence["pair"] == [1, 2]


def test_prop_pair_shared_generator_allowed():
    # overlapping supports only constrain distinct pairs
    B = rational_matrix([[2, 1], [1, 2]])
    report = check_prop_disconnected_pair(B, (1, 2), (2,))
    assert report.verdict == CONFIRMED


def test_prop_brackets_power_word():
    B = matrix_from_strings([["z", "z^5"], ["z^2", "-1"]], 8)
    report = check_prop_all_bracketings(B, (1, 1, 1))
    assert report.verdict == CONFIRMED
    assert report.evidence["bracketings_checked"] == 2


def test_prop_brackets_disconnected_three_letter():
    B = rational_matrix([[2, 1], [1, 2]])
    report = check_prop_all_bracketings(B, (1, 2, 1))
    assert report.verdict == CONFIRMED


def test_prop_brackets_fully_disconnected_rank3():
    B = rational_matrix([[2, 1, 1], [1, 2, 1], [1, 1, 2]])
    report = check_prop_all_bracketings(B, (1, 2, 3))
    assert report.verdict == CONFIRMED
    assert report.evidence["bracketings_checked"] == 2


def test_prop_brackets_precondition_not_met():
    B = rational_matrix([[2, 2], [2, 2]])
    report = check_prop_all_bracketings(B, (1, 2))
    assert report.verdict == PRECONDITION_NOT_MET


def test_prop_brackets_needs_length_two():
    B = rational_matrix([[2]])
    with pytest.raises(ValueError):
        check_prop_all_bracketings(B, (1,))


# -- report determinism -------------------------------------------------------------

def test_reports_byte_identical_across_runs():
    B = matrix_from_strings([["2", "z"], ["z^-1", "2"]], 8)
    a = check_theorem_equivalences(B)
    b = check_theorem_equivalences(B)
    assert a.line() == b.line()
    assert a.to_dict() == b.to_dict()


def test_digest_distinguishes_instances():
    B1 = rational_matrix([[2, 2], [2, 2]])
    B2 = rational_matrix([[2, 1], [1, 2]])
    assert (
        check_theorem_equivalences(B1).digest
        != check_theorem_equivalences(B2).digest
    )


# -- batteries -----------------------------------------------------------------------

OFF = ["1", "-1", "2", "z"]
DIAG = ["-1", "2", "z"]


def test_grid_size_n2():
    assert grid_size(2, OFF, DIAG) == 4 ** 2 * 3 ** 2 == 144


def test_grid_matrices_exhaustive_and_distinct():
    seen = set()
    for B in grid_matrices(2, OFF, DIAG, order=3):
        seen.add(B.to_json())
    assert len(seen) == 144


def test_grid_decode_matches_iteration():
    for idx in (0, 17, 143):
        B = grid_matrix_at(idx, 2, OFF, DIAG, 3)
        assert B.n == 2 and B.order == 3


def test_sample_deterministic():
    a = [B.to_json() for B in sample_grid_matrices(3, OFF, DIAG, 3, count=5, seed=11)]
    b = [B.to_json() for B in sample_grid_matrices(3, OFF, DIAG, 3, count=5, seed=11)]
    assert a == b
    assert len(set(a)) == 5


def test_small_battery_soundness():
    # no Counterexample may ever appear on grid instances
    for B in sample_grid_matrices(2, OFF, DIAG, 3, count=20, seed=77):
        report = check_theorem_equivalences(B)
        assert report.verdict in (CONFIRMED, INCONCLUSIVE)
        report = check_theorem_max_support(B, d_max=3)
        assert report.verdict in (CONFIRMED, INCONCLUSIVE)
