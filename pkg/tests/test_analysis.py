from __future__ import annotations

import math
from fractions import Fraction

import pytest

from starseq.analysis import (
    MEISSEL_MERTENS,
    cor_pi_estimate,
    divergence_report,
    mertens_estimate,
    prime_reciprocal_sum,
    recip_check,
    sigma_partial,
    tail_bound,
)
from starseq.factoring import FactorBudget
from starseq.star_core import gross_prefix, star_pow


def test_sigma_partial_values():
    assert sigma_partial({2, 3, 7, 43}) == Fraction(1805, 1806)
    assert sigma_partial({1}) == Fraction(1)
    assert sigma_partial(set()) == Fraction(0)
    assert sigma_partial([2, 2, 3]) == Fraction(5, 6)  # duplicates collapse


def test_sigma_partial_rejects_nonpositive():
    with pytest.raises(ValueError):
        sigma_partial({0, 2})
    with pytest.raises(ValueError):
        sigma_partial({-1})


def test_recip_check_examples():
    r = recip_check(1, 1)  # 1 = 1/2 + 1/2
    assert r.equal and r.lhs == Fraction(1)
    r = recip_check(1, 4)  # 1 = 1/2 + 1/3 + 1/7 + 1/43 + 1/1806
    assert r.equal
    assert r.rhs == (
        Fraction(1, 2) + Fraction(1, 3) + Fraction(1, 7) + Fraction(1, 43)
        + Fraction(1, 1806)
    )
    r = recip_check(3, 2)  # 1/3 = 1/4 + 1/13 + 1/156
    assert r.equal
    assert r.rhs == Fraction(1, 4) + Fraction(1, 13) + Fraction(1, 156)


def test_recip_check_sweep():
    for x in range(1, 51):
        for n in range(1, 9):
            assert recip_check(x, n).equal, (x, n)


def test_recip_check_domain():
    with pytest.raises(ValueError):
        recip_check(0, 1)
    with pytest.raises(ValueError):
        recip_check(1, 0)


def test_tail_bound_values():
    assert tail_bound(1, 4) == Fraction(1, 1806)
    assert tail_bound(1, 1) == Fraction(1, 2)
    assert tail_bound(2, 2) == Fraction(1, 42)


def test_tail_bound_telescopes_exactly():
    for x in (1, 2, 3, 10, 50):
        for n in range(1, 8):
            partial = sum(
                (Fraction(1, t) for t in gross_prefix(x, n)), Fraction(0)
            )
            assert Fraction(1, x) - partial == tail_bound(x, n)
            assert tail_bound(x, n + 1) < tail_bound(x, n)


def test_divergence_report_depth_1():
    report = divergence_report(1, 1)
    rows = report.rows
    assert [(r.value, r.prime_base) for r in rows] == [(2, 2), (3, 3)]
    assert rows[0].sum_values == Fraction(1, 2)
    assert rows[1].sum_values == Fraction(5, 6)
    assert rows[1].sum_bases == Fraction(5, 6)


def test_divergence_report_prime_power_term():
    report = divergence_report(3, 1)
    first = report.rows[0]
    assert first.value == 4 and first.prime_base == 2
    assert first.sum_values == Fraction(1, 4)
    assert first.sum_bases == Fraction(1, 2)


def test_divergence_report_depth_4():
    report = divergence_report(1, 4)
    assert [r.value for r in report.rows] == [2, 3, 7, 43, 13, 139]
    expect = sum(
        (Fraction(1, v) for v in (2, 3, 7, 43, 13, 139)), Fraction(0)
    )
    assert report.rows[-1].sum_values == expect
    assert report.stalled_at is None
    assert report.estimate_n == 1807  # the largest fully processed gross term
    assert report.mertens_estimate == pytest.approx(
        math.log(math.log(1807)) + MEISSEL_MERTENS
    )


def test_divergence_sums_strictly_increase():
    for x in (1, 2, 3, 11):
        report = divergence_report(x, 5)
        values = [r.sum_values for r in report.rows]
        bases = [r.sum_bases for r in report.rows]
        assert all(a < b for a, b in zip(values, values[1:]))
        assert all(a < b for a, b in zip(bases, bases[1:]))


def test_value_sum_never_exceeds_base_sum():
    for x in (1, 2, 3, 7, 50):
        report = divergence_report(x, 5)
        for row in report.rows:
            assert row.sum_values <= row.sum_bases


def test_refinement_against_gross_reciprocals():
    # splitting a composite term into prime powers only increases the sum;
    # equality holds exactly when every processed term is a prime power
    for x in (1, 2, 3):
        report = divergence_report(x, 5)
        chain = gross_prefix(x, 6)
        for horizon in range(6):
            star_sum = max(
                (r.sum_values for r in report.rows if r.gross_index <= horizon),
                default=Fraction(0),
            )
            gross_sum = sum(
                (Fraction(1, t) for t in chain[: horizon + 1]), Fraction(0)
            )
            assert star_sum >= gross_sum
            prime_power_only = all(
                len({r for r in report.rows if r.gross_index == k}) == 1
                for k in range(horizon + 1)
            )
            if prime_power_only:
                assert star_sum == gross_sum


def test_divergence_report_records_stall():
    starved = FactorBudget(trial_bound=2, rho_rounds=1, rho_iterations=2)
    report = divergence_report(1, 5, starved)
    assert report.stalled_at == 4
    assert [r.value for r in report.rows] == [2, 3, 7, 43]
    assert report.estimate_n == 43


def test_mertens_estimate():
    assert mertens_estimate(10**6) == pytest.approx(2.8872891, abs=1e-6)
    assert mertens_estimate(15) == pytest.approx(1.2577261, abs=1e-6)
    with pytest.raises(ValueError):
        mertens_estimate(2)


def test_mertens_estimate_handles_huge_integers():
    n = star_pow(2, 12) + 1  # thousands of digits
    est = mertens_estimate(n)
    assert est > 2.0


def test_mertens_cross_check_against_sieve():
    # the and-a-constant estimate lands within 0.01 of the true prime
    # reciprocal sum at one million
    total = prime_reciprocal_sum(10**6)
    assert total == pytest.approx(2.8873281, abs=1e-6)
    assert abs(total - mertens_estimate(10**6)) < 0.01


def test_cor_pi_estimate_large():
    readings = cor_pi_estimate(10**100)
    assert readings.pi_reading == 3  # primes 2, 3, 5 up to floor(5.44)
    assert readings.ratio_reading == pytest.approx(
        (readings.n_loglog + MEISSEL_MERTENS) / math.log(readings.n_loglog)
    )
    assert not readings.fragile


def test_cor_pi_estimate_desk_scale_flagged():
    readings = cor_pi_estimate(10**6)
    assert readings.fragile
    assert readings.n_loglog == pytest.approx(2.6257919, abs=1e-6)
    assert readings.ratio_reading == pytest.approx(2.9908239, abs=1e-4)


def test_cor_pi_estimate_domain_guard():
    with pytest.raises(ValueError):
        cor_pi_estimate(15)  # e**e is about 15.15
    cor_pi_estimate(16)  # just above the bar is fine


def test_prime_reciprocal_sum_small():
    # 1/2 + 1/3 + 1/5 + 1/7
    assert prime_reciprocal_sum(10) == pytest.approx(1.1761904761904762)
    assert prime_reciprocal_sum(1) == 0.0
