"""Exhaustive classifier: enumeration, target sweeps, theorem checks, bounds."""

import itertools
import math

import pytest

from hsumset.bounds import (
    check_direct_bounds,
    check_two_fold_bounds,
    extremal_two_fold_family,
    golden_bound,
)
from hsumset.classifier import (
    EnumerationSpec,
    classify_by_cardinality,
    enumerate_normalized_sets,
    expected_sets,
    verify_classification,
    verify_containment,
)
from hsumset.errors import DomainError
from hsumset.intset import FiniteIntSet


def fis(*values):
    return FiniteIntSet.from_iterable(values)


# ---------------------------------------------------------------------------
# enumeration


def test_enumeration_examples():
    assert [s.text() for s in enumerate_normalized_sets(EnumerationSpec(3, 3))] == [
        "0,1,2", "0,1,3", "0,2,3",
    ]
    assert [s.text() for s in enumerate_normalized_sets(EnumerationSpec(2, 2))] == ["0,1"]
    assert [s.text() for s in enumerate_normalized_sets(EnumerationSpec(4, 3))] == ["0,1,2,3"]
    assert list(enumerate_normalized_sets(EnumerationSpec(5, 3))) == []


def test_enumeration_matches_bruteforce_subset_scan():
    for k, dmax, gcd_filter in [(3, 8, True), (4, 9, True), (4, 9, False), (2, 6, True)]:
        fast = [s.elements for s in enumerate_normalized_sets(EnumerationSpec(k, dmax, gcd_filter))]
        slow = []
        for subset in itertools.combinations(range(0, dmax + 1), k):
            if subset[0] != 0:
                continue
            g = 0
            for a in subset:
                g = math.gcd(g, a)
            if gcd_filter and g != 1:
                continue
            slow.append(subset)
        assert sorted(fast) == sorted(slow)
        assert len(fast) == len(set(fast))
        diameters = [t[-1] for t in fast]
        assert diameters == sorted(diameters)


# ---------------------------------------------------------------------------
# classification sweeps


def test_classify_one_deletion_target():
    report = classify_by_cardinality(3, 10, 23, 14)
    assert [s.text() for s in report.found] == [
        "0,1,2,3,4,5,6,7,8,10",
        "0,2,3,4,5,6,7,8,9,10",
    ]


def test_classify_below_direct_bound_is_empty():
    assert classify_by_cardinality(3, 10, 21, 14).found == []


def test_classify_extremal_is_the_interval():
    report = classify_by_cardinality(3, 10, 22, 14)
    assert [s.text() for s in report.found] == ["0,1,2,3,4,5,6,7,8,9"]


def test_classify_validates_domain():
    with pytest.raises(DomainError):
        classify_by_cardinality(5, 4, 10, 8)
    with pytest.raises(DomainError):
        classify_by_cardinality(2, 4, 0, 8)


def test_classify_duality_same_lists():
    k = 9
    for target in (15, 16):
        a = classify_by_cardinality(3, k, target, k + 4)
        b = classify_by_cardinality(k - 3, k, target, k + 4)
        assert a.found == b.found


def test_classify_matches_plain_enumeration():
    # pruning and sharding agree with a naive filter of the full stream
    from hsumset.engine import restricted_cardinality

    h, k, dmax, target = 3, 7, 11, 3 * 7 - 9 + 3
    slow = [
        A
        for A in enumerate_normalized_sets(EnumerationSpec(k, dmax))
        if restricted_cardinality(A, h) == target
    ]
    fast = classify_by_cardinality(h, k, target, dmax).found
    assert fast == sorted(slow)


def test_pruning_is_lossless():
    a = classify_by_cardinality(3, 10, 23, 14, prune=True)
    b = classify_by_cardinality(3, 10, 23, 14, prune=False)
    assert a.found == b.found
    assert a.pruned > 0 and b.pruned == 0
    assert b.scanned >= a.scanned


def test_thread_count_does_not_change_results():
    a = classify_by_cardinality(3, 10, 23, 14, threads=1)
    b = classify_by_cardinality(3, 10, 23, 14, threads=3)
    assert a.found == b.found
    assert (a.scanned, a.pruned) == (b.scanned, b.pruned)


# ---------------------------------------------------------------------------
# theorem lists


def test_expected_sets_examples():
    sets = expected_sets("one-element", 4, 13)
    assert sets == sorted(
        [
            FiniteIntSet.interval_minus(0, 13, [1]),
            FiniteIntSet.interval_minus(0, 13, [12]),
        ]
    )
    assert len(expected_sets("three-element-h3", 3, 13)) == 18
    assert len(expected_sets("three-element", 5, 19)) == 10
    assert len(expected_sets("two-element-h3", 3, 12)) == 7
    assert len(expected_sets("two-element", 4, 15)) == 5
    assert len(expected_sets("three-element-h4", 4, 16)) == 12


def test_expected_sets_hypothesis_violations():
    with pytest.raises(DomainError):
        expected_sets("one-element", 3, 9)
    with pytest.raises(DomainError):
        expected_sets("two-element-h3", 4, 15)
    with pytest.raises(DomainError):
        expected_sets("nonsense", 3, 13)


def test_verify_classification_small():
    report = verify_classification("one-element", 3, 10)
    assert report.verdict == "exact-match"
    assert report.dmax == 13
    report = verify_classification("two-element", 4, 15)
    assert report.verdict == "exact-match"
    assert len(report.found) == 5


def test_verify_containment_small():
    report = verify_containment(3, 10, 2, 14)
    assert report.ok
    assert report.bound == 10
    report = verify_containment(3, 12, 3)
    assert report.ok and report.dmax == 13 + 3
    with pytest.raises(DomainError):
        verify_containment(3, 10, 5)
    with pytest.raises(DomainError):
        verify_containment(3, 11, 3)  # k below 3h+3


# ---------------------------------------------------------------------------
# bound checkers


def test_direct_bound_examples():
    r = check_direct_bounds(FiniteIntSet.interval(0, 4), 2)
    assert r.violation is None and r.extremal and r.ap_asserted and r.is_ap

    r = check_direct_bounds(fis(0, 1, 3), 2)
    assert r.cardinality == 3 and r.extremal and not r.ap_asserted and r.is_ap is None

    r = check_direct_bounds(fis(0, 1, 4, 6), 2)
    assert r.cardinality == 6 and not r.extremal and r.violation is None

    with pytest.raises(ValueError):
        check_direct_bounds(fis(0, 1), 3)


def test_golden_bound_exact():
    theta_plus_1 = (1 + 5 ** 0.5) / 2 + 1
    for k in range(3, 200):
        n = golden_bound(k)
        assert n >= theta_plus_1 * k - 6 - 1e-9
        assert n - 1 < theta_plus_1 * k - 6 + 1e-9


def test_two_fold_checker_examples():
    r = check_two_fold_bounds(FiniteIntSet.interval(0, 9))
    assert r.branch == "linear"
    assert r.proven_bound == 17 == r.cardinality
    assert r.conjecture_applicable and r.conjecture_ok

    r = check_two_fold_bounds(fis(0, 1, 2))
    assert r.branch == "wide"
    assert r.linear_bound == 3 == r.cardinality
    assert r.proven_ok and not r.conjecture_applicable

    with pytest.raises(ValueError):
        check_two_fold_bounds(fis(1, 2, 3))  # min not 0
    with pytest.raises(ValueError):
        check_two_fold_bounds(fis(0, 2, 4))  # gcd 2


def test_extremal_two_fold_family():
    A = extremal_two_fold_family(10, 20)
    assert A.text() == "0,1,2,3,4,5,6,7,19,20"
    r = check_two_fold_bounds(A)
    assert r.branch == "wide"
    assert r.cardinality == 3 * 10 - 7
    assert r.conjecture_ok

    # the attained two-fold sumset has the stated three-piece shape
    from hsumset.engine import restricted_sumset

    k, a = 10, 20
    expected = sorted(
        set(range(1, 2 * k - 6)) | set(range(a - 1, a + k - 2)) | {2 * a - 1}
    )
    assert list(restricted_sumset(A, 2).elements) == expected
