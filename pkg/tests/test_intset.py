"""Core value types: construction, affine maps, canonical forms."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hsumset import (
    AffineMap,
    FiniteIntSet,
    ResourceLimitError,
    apply_affine,
    gcd_of_differences,
    make_set,
    normalize,
    reflect,
)

int_sets = st.sets(st.integers(-200, 200), min_size=0, max_size=12)


def fis(*values):
    return FiniteIntSet.from_iterable(values)


def test_make_set_sorts_and_dedups():
    s, dropped = make_set([3, 1, 0])
    assert s.elements == (0, 1, 3)
    assert not dropped

    s, dropped = make_set([])
    assert s.elements == ()
    assert not dropped

    s, dropped = make_set([5, 5, 2])
    assert s.elements == (2, 5)
    assert dropped


def test_strictly_increasing_enforced():
    with pytest.raises(ValueError):
        FiniteIntSet((1, 1, 2))
    with pytest.raises(ValueError):
        FiniteIntSet((3, 2))


def test_int64_range_guard():
    with pytest.raises(ResourceLimitError):
        FiniteIntSet((0, 1 << 63))
    FiniteIntSet((-(1 << 63), (1 << 63) - 1))  # extremes are allowed


def test_parse_and_text_round_trip():
    s = FiniteIntSet.parse("0,1,3,7")
    assert s.elements == (0, 1, 3, 7)
    assert s.text() == "0,1,3,7"
    assert FiniteIntSet.parse("  ").elements == ()
    assert FiniteIntSet.parse("3,1,1").elements == (1, 3)
    with pytest.raises(ValueError):
        FiniteIntSet.parse("1,a,3")


def test_apply_affine_examples():
    A = fis(0, 1, 3)
    assert apply_affine(A, AffineMap(2, 1)).elements == (1, 3, 7)
    assert apply_affine(A, AffineMap(-1, 3)).elements == (0, 2, 3)
    assert apply_affine(A, AffineMap(1, 0)) == A


def test_affine_zero_scale_rejected():
    with pytest.raises(ValueError):
        AffineMap(0, 5)


def test_reflect():
    assert reflect(fis(0, 1, 3), 3).elements == (0, 2, 3)


def test_normalize_examples():
    nf = normalize(fis(4, 6, 10))
    assert nf.set.elements == (0, 1, 3)
    assert (nf.map.scale, nf.map.shift) == (2, 4)
    assert nf.restore().elements == (4, 6, 10)

    nf = normalize(fis(0, 1, 3))
    assert nf.set.elements == (0, 1, 3)
    assert (nf.map.scale, nf.map.shift) == (1, 0)

    nf = normalize(fis(3, 9))
    assert nf.set.elements == (0, 1)
    assert (nf.map.scale, nf.map.shift) == (6, 3)


def test_normalize_undefined_below_two_elements():
    with pytest.raises(ValueError):
        normalize(fis(7))
    with pytest.raises(ValueError):
        normalize(FiniteIntSet(()))


def test_gcd_of_differences_examples():
    assert gcd_of_differences(fis(0, 2, 6)) == 2
    assert gcd_of_differences(fis(0, 1, 17)) == 1
    assert gcd_of_differences(fis(5, 11, 17)) == 6
    with pytest.raises(ValueError):
        gcd_of_differences(fis(3))


@given(int_sets.filter(lambda s: len(s) >= 2))
@settings(max_examples=200)
def test_normalize_round_trip_and_idempotence(values):
    A = FiniteIntSet.from_iterable(values)
    nf = normalize(A)
    assert nf.restore() == A
    assert nf.set.min == 0
    assert gcd_of_differences(nf.set) == 1
    assert nf.map.scale > 0
    again = normalize(nf.set)
    assert again.set == nf.set
    assert (again.map.scale, again.map.shift) == (1, 0)


@given(
    int_sets.filter(lambda s: len(s) >= 2),
    st.integers(-20, 20).filter(lambda a: a != 0),
    st.integers(-100, 100),
)
@settings(max_examples=200)
def test_gcd_translation_invariant_dilation_covariant(values, a, b):
    A = FiniteIntSet.from_iterable(values)
    g = gcd_of_differences(A)
    shifted = apply_affine(A, AffineMap(1, b))
    scaled = apply_affine(A, AffineMap(a, b))
    assert gcd_of_differences(shifted) == g
    assert gcd_of_differences(scaled) == abs(a) * g
