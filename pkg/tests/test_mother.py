from __future__ import annotations

from math import prod

import pytest

from starseq.errors import MotherLimitError
from starseq.factoring import PrimePower
from starseq.mother import MotherSequence, mother_prefix, next_matching, occurrences

# the printed opening of the sequence: factorizations of 2, 3, 4, ..., 27
PRINTED_37 = [
    (2, 1), (3, 1), (2, 2), (5, 1), (2, 1), (3, 1), (7, 1), (2, 3), (3, 2),
    (2, 1), (5, 1), (11, 1), (2, 2), (3, 1), (13, 1), (2, 1), (7, 1), (3, 1),
    (5, 1), (2, 4), (17, 1), (2, 1), (3, 2), (19, 1), (2, 2), (5, 1), (3, 1),
    (7, 1), (2, 1), (11, 1), (23, 1), (2, 3), (3, 1), (5, 2), (2, 1), (13, 1),
    (3, 3),
]


def test_prefix_matches_printed_listing(shared_mother):
    terms = shared_mother.prefix(37)
    assert [(t.value.p, t.value.e) for t in terms] == PRINTED_37


def test_prefix_first_term(shared_mother):
    t = shared_mother.prefix(1)[0]
    assert (t.index, t.value, t.source, t.slot) == (0, PrimePower(2, 1), 2, 0)


def test_prefix_tail_sources(shared_mother):
    # the last three of the printed listing come from 26, 26 and 27
    terms = shared_mother.prefix(37)
    assert [(str(t.value), t.source) for t in terms[34:]] == [
        ("2", 26), ("13", 26), ("3^3", 27),
    ]


def test_sources_reconstruct_integers(shared_mother):
    terms = shared_mother.prefix(5000)
    by_source: dict[int, list] = {}
    for t in terms:
        by_source.setdefault(t.source, []).append(t)
    complete_sources = sorted(by_source)[:-1]  # last source may be cut off
    assert complete_sources == list(range(2, complete_sources[-1] + 1))
    for n in complete_sources:
        parts = by_source[n]
        assert prod(pp.value.value for pp in parts) == n
        assert [pp.slot for pp in parts] == list(range(len(parts)))
        primes = [pp.value.p for pp in parts]
        assert primes == sorted(primes) and len(set(primes)) == len(primes)


def test_occurrences_of_2(shared_mother):
    assert shared_mother.occurrences(PrimePower(2, 1), 5) == [0, 4, 9, 15, 21]


def test_occurrences_of_5(shared_mother):
    assert shared_mother.occurrences(PrimePower(5, 1), 3) == [3, 10, 18]


def test_occurrences_of_4(shared_mother):
    assert shared_mother.occurrences(PrimePower(2, 2), 2) == [2, 12]


def test_occurrences_ascend_and_match_values(shared_mother):
    probes = [
        PrimePower(2, 1), PrimePower(3, 1), PrimePower(2, 2), PrimePower(5, 1),
        PrimePower(7, 1), PrimePower(3, 2), PrimePower(2, 4), PrimePower(13, 1),
    ]
    for v in probes:
        idx = shared_mother.occurrences(v, 8)
        assert idx == sorted(set(idx))
        for i in idx:
            assert shared_mother.value_at(i) == v


def test_occurrences_agree_with_materialized_scan():
    # dual route: the analytic enumerator against a brute scan of the
    # actually materialized prefix
    mom = MotherSequence()
    terms = mom.prefix(60_000)
    brute: dict[PrimePower, list[int]] = {}
    for t in terms:
        brute.setdefault(t.value, []).append(t.index)
    for v in (
        PrimePower(2, 1), PrimePower(3, 1), PrimePower(5, 1), PrimePower(2, 3),
        PrimePower(3, 3), PrimePower(43, 1), PrimePower(139, 1),
        PrimePower(101, 1), PrimePower(31, 2),
    ):
        expect = brute[v][:10]
        assert mom.occurrences(v, len(expect)) == expect


def test_next_matching(shared_mother):
    two = PrimePower(2, 1)
    assert shared_mother.next_matching(two) == 0
    assert shared_mother.next_matching(two, excluded={0}) == 4
    # 3 occurs at 1, 5, 13, ...; first above floor 4 not excluded is 5
    assert shared_mother.next_matching(PrimePower(3, 1), excluded={1}, floor=4) == 5
    assert shared_mother.next_matching(two, excluded={0, 4, 9}, floor=None) == 15
    assert shared_mother.next_matching(two, floor=21) == 28


def test_large_value_occurrence_is_consistent(shared_mother):
    # first occurrence of a prime p sits at source p; cross-check the
    # analytic index against direct materialization at that index
    p = PrimePower(101, 1)
    first = shared_mother.occurrences(p, 1)[0]
    assert shared_mother.value_at(first) == p
    assert shared_mother.term(first).source == 101


def test_source_ceiling_diagnostic():
    mom = MotherSequence(source_ceiling=100)
    with pytest.raises(MotherLimitError):
        mom.occurrences(PrimePower(97, 1), 2)  # second occurrence is at 194
    # first occurrence is still reachable
    assert mom.occurrences(PrimePower(97, 1), 1) == [
        MotherSequence().occurrences(PrimePower(97, 1), 1)[0]
    ]


def test_prefix_ceiling_diagnostic():
    mom = MotherSequence(source_ceiling=10)
    with pytest.raises(MotherLimitError):
        mom.prefix(100)


def test_module_level_helpers():
    assert mother_prefix(9, MotherSequence())[8].value == PrimePower(3, 2)
    assert occurrences(PrimePower(2, 1), 2, MotherSequence()) == [0, 4]
    assert next_matching(PrimePower(2, 1), {0}, None, MotherSequence()) == 4


def test_index_of_source(shared_mother):
    assert shared_mother.index_of_source(2) == 0
    assert shared_mother.index_of_source(6) == 4
    assert shared_mother.index_of_source(27) == 36
    # agrees with the materialized prefix
    t = shared_mother.prefix(200)
    firsts = {}
    for item in t:
        firsts.setdefault(item.source, item.index)
    for source, idx in firsts.items():
        assert shared_mother.index_of_source(source) == idx
