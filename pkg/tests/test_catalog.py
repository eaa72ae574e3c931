"""Formula catalog: instantiation, case dispatch, coverage, duality."""

import pytest

import hsumset  # noqa: F401  (registers families)
from hsumset.catalog import (
    CoverageError,
    catalog_dump,
    crosscheck,
    enumerate_params,
    family_ids,
    get_family,
    instantiate,
    predict,
    predicted_cardinality,
    verification_grid,
)
from hsumset.errors import DomainError
from hsumset.intset import FiniteIntSet


def test_instantiate_examples():
    assert instantiate("one-deletion", 10, (1,)) == FiniteIntSet.interval_minus(0, 10, [1])
    assert instantiate("pair-x-k", 12, (5,)) == FiniteIntSet.interval_minus(0, 13, [5, 12])
    assert instantiate("triple-run", 13, (4,)) == FiniteIntSet.interval_minus(0, 15, [4, 5, 6])


def test_instantiate_validates_ranges():
    with pytest.raises(DomainError) as err:
        instantiate("one-deletion", 10, (10,))
    assert "[1, 9]" in str(err.value)
    with pytest.raises(DomainError):
        instantiate("general-pair", 15, (3, 5))  # gap < 3


def test_instantiated_sets_are_normalized_k_sets():
    for fid in family_ids():
        fam = get_family(fid)
        h = fam.h_min
        k = fam.k_min(h)
        for params in enumerate_params(fid, h, k):
            A = instantiate(fid, k, params)
            assert len(A) == k, (fid, params)
            assert A.min == 0
            from hsumset.intset import gcd_of_differences

            assert gcd_of_differences(A) == 1


def test_predicted_cardinality_examples():
    assert predicted_cardinality("one-deletion", 3, 10, (1,)) == (23, "i")
    assert predicted_cardinality("one-deletion", 3, 10, (3,)) == (24, "iii")
    assert predicted_cardinality("one-deletion", 3, 10, (5,)) == (25, "iv")
    # x = k-h-1 special value at h=3
    assert predicted_cardinality("pair-x-km1", 3, 13, (9,)) == (3 * 13 - 4, "iv")
    assert predicted_cardinality("pair-x-km1", 4, 15, (10,))[0] == 4 * 15 - 16 + 4 + 3


def test_regime_and_threshold_enforced():
    with pytest.raises(DomainError):
        predicted_cardinality("one-deletion", 2, 10, (1,))
    with pytest.raises(DomainError):
        predicted_cardinality("one-deletion", 3, 9, (1,))
    with pytest.raises(DomainError):
        enumerate_params("triple-xx1z-h3", 4, 20)  # h=3 only
    with pytest.raises(DomainError):
        predicted_cardinality("general-triple", 4, 15, (2, 4, 6))  # k below 3h+4


def test_enumerate_params_examples():
    assert enumerate_params("one-deletion", 3, 10) == [(x,) for x in range(1, 10)]
    assert enumerate_params("pair-adjacent", 3, 12) == [(x,) for x in range(1, 12)]
    pairs = enumerate_params("general-pair", 4, 15)
    assert all(3 <= x and y <= 13 and y - x >= 3 for x, y in pairs)
    assert pairs == sorted(pairs)
    assert len(set(pairs)) == len(pairs)


def test_uncovered_and_ambiguous_are_reported_not_guessed():
    # (1, 2) is outside every case of the h=3 {x, y, k+1} family
    pred = predict("triple-xy-kp1-h3", 3, 12, (1, 2))
    assert pred.status == "uncovered"
    with pytest.raises(CoverageError):
        predicted_cardinality("triple-xy-kp1-h3", 3, 12, (1, 2))


def test_subthreshold_cases_flagged():
    # below k=13 only the mirrored general-triple cases apply; a tuple matched
    # only by a threshold-gated case reports that case instead of nothing
    pred = predict("general-triple-h3", 3, 11, (2, 4, 6))
    assert pred.status == "uncovered"
    assert "A-i" in pred.subthreshold


def test_crosscheck_one_deletion_clean():
    for k in (10, 12, 14):
        report = crosscheck("one-deletion", 3, k)
        assert report.checked == k - 1
        assert report.ok, report.mismatches


def test_crosscheck_detects_a_wrong_formula():
    # sanity: the harness actually fails when a value is off by one
    import dataclasses

    from hsumset.catalog import _REGISTRY, CaseFormula, register

    fam = get_family("one-deletion")
    broken_case = CaseFormula(
        label="i", domain="1 <= x <= h-1", formula="off by one",
        applies=lambda h, k, p: 1 <= p[0] <= h - 1,
        value=lambda h, k, p: h * k - h * h + p[0] + 2,
    )
    broken = dataclasses.replace(
        fam, id="broken-one-deletion", cases=(broken_case,) + fam.cases[1:]
    )
    register(broken)
    try:
        report = crosscheck("broken-one-deletion", 3, 10)
        assert len(report.mismatches) == 2
        assert not report.ok
    finally:
        _REGISTRY.pop("broken-one-deletion")


DUAL_PAIRS = [
    # (family, dual, param map (h, k, params) -> dual params)
    ("pair-1-y", "pair-x-k", lambda h, k, p: (k + 1 - p[0],)),
    ("pair-2-y", "pair-x-km1", lambda h, k, p: (k + 1 - p[0],)),
    ("triple-xyy1-h3", "triple-xx1z-h3", lambda h, k, p: (k + 1 - p[1], k + 2 - p[0])),
    ("triple-xyy1", "triple-xx1z", lambda h, k, p: (k + 1 - p[1], k + 2 - p[0])),
    ("triple-1yy1", "triple-xx1-kp1", lambda h, k, p: (k + 1 - p[0],)),
    ("triple-1yz-h3", "triple-xy-kp1-h3", lambda h, k, p: (k + 2 - p[1], k + 2 - p[0])),
    ("triple-1yz", "triple-xy-kp1", lambda h, k, p: (k + 2 - p[1], k + 2 - p[0])),
]


@pytest.mark.parametrize("fid,dual_id,param_map", DUAL_PAIRS)
def test_dual_families_predict_equal_values(fid, dual_id, param_map):
    fam = get_family(fid)
    assert fam.dual == dual_id
    h = max(fam.h_min, get_family(dual_id).h_min)
    k = max(fam.k_min(h), get_family(dual_id).k_min(h)) + 1
    compared = 0
    for params in enumerate_params(fid, h, k):
        mine = predict(fid, h, k, params)
        theirs_params = param_map(h, k, params)
        try:
            theirs = predict(dual_id, h, k, theirs_params)
        except DomainError:
            continue
        if mine.status == "matched" and theirs.status == "matched":
            assert mine.value == theirs.value, (params, theirs_params)
            compared += 1
    assert compared > 0


def test_reflection_maps_deleted_patterns_onto_dual():
    for fid, dual_id, param_map in DUAL_PAIRS:
        fam, dual = get_family(fid), get_family(dual_id)
        h = max(fam.h_min, dual.h_min)
        k = max(fam.k_min(h), dual.k_min(h)) + 2
        top = k + fam.extension
        for params in list(enumerate_params(fid, h, k))[::7]:
            mirrored = tuple(sorted(top - d for d in fam.deleted(k, params)))
            assert mirrored == tuple(sorted(dual.deleted(k, param_map(h, k, params))))


def test_verification_grid_shape():
    grid = verification_grid("one-deletion")
    assert (3, 10) in grid and (3, 12) in grid
    assert (6, 19) in grid and (6, 21) in grid
    assert verification_grid("triple-xx1z-h3") == [(3, 13), (3, 15)]


def test_catalog_dump_schema():
    entries = catalog_dump()
    assert len(entries) > 150
    keys = {"family", "case", "h_regime", "k_min", "domain", "formula", "anchor"}
    for entry in entries:
        assert set(entry) == keys
    families = {e["family"] for e in entries}
    assert families == set(family_ids())
