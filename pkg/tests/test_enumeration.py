import itertools
import math

import pytest

from hallkit import (
    Relation,
    compose,
    count_hall,
    count_hall_inclusion_exclusion,
    count_reflexive,
    hall_idempotent_census,
    is_hall,
    is_reflexive,
    materialize_hall,
    reflexive_relations,
    verification_campaign,
)
from hallkit.enumeration import (
    _count_by_permanent_sweep,
    _count_by_union_fold,
    _hall_flags,
    _rows_of_codes,
)


def brute_hall_count(n):
    """Oracle: try every permutation against every matrix."""
    perms = list(itertools.permutations(range(n)))
    count = 0
    for code in range(1 << (n * n)):
        rows = [(code >> (i * n)) & ((1 << n) - 1) for i in range(n)]
        if any(all(rows[i] >> p[i] & 1 for i in range(n)) for p in perms):
            count += 1
    return count


def test_small_counts_match_brute_force():
    for n in (1, 2, 3):
        assert count_hall(n).total_hall == brute_hall_count(n)


def test_stream_kernel_matches_is_hall_per_matrix():
    import numpy as np

    for n in (1, 2, 3):
        codes = np.arange(1 << (n * n), dtype=np.uint64)
        flags = _hall_flags(_rows_of_codes(codes, n), n)
        for code, flag in enumerate(flags):
            assert bool(flag) == (is_hall(Relation.from_code(n, code)) is not None)


def test_known_small_counts():
    assert count_hall(1).total_hall == 1
    assert count_hall(2).total_hall == 7
    assert count_hall(3).total_hall == 247


def test_report_fields():
    report = count_hall(2)
    assert report.total_reflexive == 4
    assert report.idempotent_hall == 4
    assert report.idempotents_all_reflexive is True
    assert report.worker_count == 1
    assert report.elapsed_seconds >= 0


def test_report_bounds():
    for n in (1, 2, 3, 4):
        report = count_hall(n)
        assert report.total_reflexive == 1 << (n * (n - 1))
        assert math.factorial(n) <= report.total_hall <= 1 << (n * n)
        assert report.total_hall >= report.total_reflexive


def test_count_reflexive_by_scan():
    for n in (1, 2, 3, 4):
        assert count_reflexive(n) == 1 << (n * (n - 1))


def test_worker_invariance_small():
    base = count_hall(3, workers=1)
    two = count_hall(3, workers=2)
    assert base.total_hall == two.total_hall
    assert two.worker_count == 2


def test_oracle_matches_stream():
    for n in (1, 2, 3, 4):
        assert count_hall_inclusion_exclusion(n) == count_hall(n).total_hall


def test_oracle_small_terms():
    # two permutations of degree 2: 4 + 4 - 1 over the 16 matrices
    assert count_hall_inclusion_exclusion(2) == 7
    assert count_hall_inclusion_exclusion(1) == 1
    assert count_hall_inclusion_exclusion(3) == 247


def test_alternate_oracles_agree_at_4():
    assert _count_by_union_fold(4) == _count_by_permanent_sweep(4)


def test_range_errors():
    with pytest.raises(ValueError):
        count_hall(0)
    with pytest.raises(ValueError):
        count_hall(6)
    with pytest.raises(ValueError):
        count_hall(2, workers=0)
    with pytest.raises(ValueError):
        count_hall_inclusion_exclusion(6)
    with pytest.raises(ValueError):
        hall_idempotent_census(5)
    with pytest.raises(ValueError):
        materialize_hall(4)


def test_census_small():
    assert hall_idempotent_census(1) == (1, True)
    assert hall_idempotent_census(2) == (4, True)


def test_census_against_direct_squaring():
    for n in (2, 3):
        expected = sum(1 for r in reflexive_relations(n) if compose(r, r) == r)
        count, all_reflexive = hall_idempotent_census(n)
        assert count == expected
        assert all_reflexive


def test_materialize_reflexive(refl2):
    semi, elems = refl2
    assert semi.size == 4
    assert all(is_reflexive(r) for r in elems)
    assert elems[semi.identity] == Relation.identity(2)


def test_materialize_hall_sizes(hall2, hall3):
    assert hall2[0].size == 7
    assert hall3[0].size == 247
    assert hall3[0].size == count_hall(3).total_hall
    assert hall3[1][hall3[0].identity] == Relation.identity(3)


def test_campaign_degree1():
    report = verification_campaign(1)
    assert report.passed
    assert [c.name for c in report.checks] == [
        "reflexive-monoid-j-trivial",
        "hall-monoid-block-group",
        "block-group-idempotent-equivalence",
        "subset-embedding",
        "semidirect-surjection",
    ]


def test_campaign_degree2():
    report = verification_campaign(2)
    assert report.passed
    surjection = report.checks[-1]
    assert surjection.details["pairs"] == 8
    assert surjection.details["hall_size"] == 7
