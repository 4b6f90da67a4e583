from __future__ import annotations

import pytest

from starseq.embedding import (
    LITERAL,
    MONOTONE,
    CaptureStep,
    EmbeddingState,
    diagonal_pair,
    embed,
    partition_check,
    verify_numeric,
    verify_pfd,
)
from starseq.factoring import PrimePower
from starseq.mother import MotherSequence
from starseq.star_stream import star_prefix

ETA_1 = [2, 3, 7, 43, 13, 139, 3263443]  # star sequence of 1, seven terms


def test_diagonal_pair_prefix():
    assert [diagonal_pair(s) for s in range(10)] == [
        (0, 0),
        (0, 1), (1, 0),
        (0, 2), (1, 1), (2, 0),
        (0, 3), (1, 2), (2, 1), (3, 0),
    ]


def test_diagonal_pair_examples():
    assert diagonal_pair(0) == (0, 0)
    assert diagonal_pair(2) == (1, 0)
    assert diagonal_pair(9) == (3, 0)
    with pytest.raises(ValueError):
        diagonal_pair(-1)


def test_embed_literal_six_steps(shared_mother):
    state = embed(ETA_1, 6, LITERAL, shared_mother)
    assert state.captured_indices() == [0, 1, 4, 6, 5, 9]
    assert state.row_indices(0) == [0, 1, 6]
    assert state.row_indices(1) == [4, 5]
    assert state.row_indices(2) == [9]
    assert verify_pfd(state) and verify_numeric(state)


def test_embed_monotone_six_steps_same_here(shared_mother):
    lit = embed(ETA_1, 6, LITERAL, shared_mother)
    mon = embed(ETA_1, 6, MONOTONE, shared_mother)
    assert lit.captured_indices() == mon.captured_indices()


def test_embed_single_value_eta(shared_mother):
    state = embed([2], 3, LITERAL, shared_mother)
    assert [state.row_indices(u) for u in range(3)] == [[0], [4], [9]]


def test_embed_modes_diverge_at_depth(shared_mother):
    # position 3 holds 43, whose occurrences start late; position 4 holds
    # 13, which started much earlier, so the literal rule hands row 0 a
    # decreasing index pair and monotone mode must pick a later 13
    eta = [2, 3, 7, 43, 13]
    lit = embed(eta, 15, LITERAL, shared_mother)
    mon = embed(eta, 15, MONOTONE, shared_mother)
    assert lit.captured_indices() != mon.captured_indices()
    row0 = lit.row_indices(0)
    assert any(a > b for a, b in zip(row0, row0[1:]))
    for u in range(len(mon.rows)):
        r = mon.row_indices(u)
        assert all(a < b for a, b in zip(r, r[1:]))


def test_embed_accepts_prime_power_objects(shared_mother):
    from_ints = embed(ETA_1, 10, MONOTONE, shared_mother)
    from_pps = embed(
        [t.pp for t in star_prefix(1, 7)], 10, MONOTONE, shared_mother
    )
    assert from_ints.captured_indices() == from_pps.captured_indices()


def test_embed_rejects_non_prime_power():
    with pytest.raises(ValueError, match="6"):
        embed([2, 6], 3, LITERAL, MotherSequence())
    with pytest.raises(ValueError):
        embed([], 1, LITERAL, MotherSequence())


def test_verify_after_every_step(shared_mother):
    for mode in (LITERAL, MONOTONE):
        for steps in range(1, 40):
            state = embed(ETA_1, steps, mode, shared_mother)
            assert verify_pfd(state)
            assert verify_numeric(state)


def test_embed_deterministic(shared_mother):
    a = embed(ETA_1, 60, LITERAL, shared_mother)
    b = embed(ETA_1, 60, LITERAL, MotherSequence())  # fresh caches
    assert a.steps == b.steps


def test_fairness_of_the_schedule(shared_mother):
    # with an unbounded eta, finishing diagonal d gives every row u <= d
    # a term and row 0 exactly d + 1 terms
    def eta_m():
        v = 0
        while True:
            yield shared_mother.value_at(v)
            v += 1

    d = 5
    steps = (d + 1) * (d + 2) // 2
    state = embed(eta_m(), steps, LITERAL, shared_mother)
    assert len(state.rows) == d + 1
    assert all(state.rows[u] for u in range(d + 1))
    assert len(state.rows[0]) == d + 1


def test_finite_eta_cycles_positions(shared_mother):
    eta = [2, 3]
    state = embed(eta, 9, LITERAL, shared_mother)
    assert all(s.v < 2 for s in state.steps)
    assert verify_numeric(state)
    # rows fill fairly: 9 captures over positions {0,1} touch rows 0..4
    assert len(state.rows) == 5


def test_corrupted_state_fails_pfd():
    mom = MotherSequence()
    state = embed(ETA_1, 6, LITERAL, mom)
    bad = EmbeddingState(
        mode=state.mode,
        eta_terms=list(state.eta_terms),
        eta_finite=state.eta_finite,
        rows=[list(r) for r in state.rows],
        steps=list(state.steps),
        captured=set(state.captured),
    )
    dup = bad.rows[0][0]
    bad.rows[2][0] = CaptureStep(5, 2, 0, dup.captured_index, dup.value)
    assert not verify_pfd(bad)


def test_corrupted_state_fails_numeric():
    mom = MotherSequence()
    state = embed(ETA_1, 6, LITERAL, mom)
    bad = EmbeddingState(
        mode=state.mode,
        eta_terms=list(state.eta_terms),
        eta_finite=state.eta_finite,
        rows=[list(r) for r in state.rows],
        steps=list(state.steps),
        captured=set(state.captured),
    )
    step = bad.rows[1][0]
    bad.rows[1][0] = CaptureStep(
        step.step, step.u, step.v, step.captured_index, PrimePower(5, 1)
    )
    assert not verify_numeric(bad)


def test_empty_state_verifies():
    empty = EmbeddingState(mode=LITERAL, eta_terms=[], eta_finite=True)
    assert verify_pfd(empty)
    assert verify_numeric(empty)


def test_embed_truncates_at_mother_ceiling():
    mom = MotherSequence(source_ceiling=50)
    state = embed([2, 3], 40, LITERAL, mom)
    assert state.diagnostic is not None
    assert 0 < len(state.steps) < 40
    assert verify_pfd(state) and verify_numeric(state)


def test_partition_check_single_step(shared_mother):
    report = partition_check(1, shared_mother)
    assert report.frontier == 1
    assert report.captured_count == 1
    assert report.disjoint


def test_partition_check_no_duplicates(shared_mother):
    for steps in (10, 100):
        report = partition_check(steps, shared_mother)
        assert report.disjoint
        assert report.duplicates == ()
        assert report.captured_count == steps
        assert 0 < report.coverage_fraction <= 1.0
