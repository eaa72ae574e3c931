"""Finite integer sets, affine images, and canonical normal forms.

Everything downstream works on a `FiniteIntSet`: a strictly increasing
tuple of signed 64-bit integers.  Sets are immutable values; every
operation returns a new set.

The canonical form of a set with at least two elements translates the
minimum to 0 and divides out the gcd of the differences, recording the
affine map that restores the original.  Two sets are affinely equivalent
exactly when they share a normal form, which is what lets extremal-set
lists be compared literally.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import ResourceLimitError

INT64_MIN = -(1 << 63)
INT64_MAX = (1 << 63) - 1


@dataclass(frozen=True, order=True)
class FiniteIntSet:
    """Strictly increasing tuple of integers in signed 64-bit range."""

    elements: tuple[int, ...]

    def __post_init__(self):
        prev = None
        for a in self.elements:
            if not isinstance(a, int):
                raise ValueError(f"non-integer element {a!r}")
            if a < INT64_MIN or a > INT64_MAX:
                raise ResourceLimitError(f"element {a} outside signed 64-bit range")
            if prev is not None and a <= prev:
                raise ValueError("elements must be strictly increasing")
            prev = a

    @classmethod
    def from_iterable(cls, values: Iterable[int]) -> "FiniteIntSet":
        """Sort and deduplicate arbitrary integer input."""
        return cls(tuple(sorted(set(values))))

    @classmethod
    def interval(cls, lo: int, hi: int) -> "FiniteIntSet":
        """The integer interval [lo, hi]; empty when hi < lo."""
        return cls(tuple(range(lo, hi + 1)))

    @classmethod
    def interval_minus(cls, lo: int, hi: int, deleted: Iterable[int]) -> "FiniteIntSet":
        """[lo, hi] with the given positions removed."""
        drop = set(deleted)
        return cls(tuple(a for a in range(lo, hi + 1) if a not in drop))

    @classmethod
    def parse(cls, text: str) -> "FiniteIntSet":
        """Parse the canonical comma-separated form, e.g. ``0,1,3,7``.

        Input order is irrelevant and duplicates are dropped; the result
        is always sorted.  An empty or whitespace-only string is the
        empty set.
        """
        text = text.strip()
        if not text:
            return cls(())
        try:
            values = [int(part) for part in text.split(",")]
        except ValueError:
            raise ValueError(f"cannot parse set {text!r}: expected comma-separated integers") from None
        return cls.from_iterable(values)

    def text(self) -> str:
        """Canonical textual form: comma-separated increasing integers."""
        return ",".join(str(a) for a in self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __contains__(self, value: int) -> bool:
        return value in set(self.elements)

    @property
    def min(self) -> int:
        if not self.elements:
            raise ValueError("empty set has no minimum")
        return self.elements[0]

    @property
    def max(self) -> int:
        if not self.elements:
            raise ValueError("empty set has no maximum")
        return self.elements[-1]

    @property
    def span(self) -> int:
        """Diameter max - min (0 for singletons)."""
        return self.max - self.min

    def total(self) -> int:
        """Sum of all elements."""
        return sum(self.elements)

    def __repr__(self) -> str:
        return f"FiniteIntSet(({self.text()}))"


@dataclass(frozen=True)
class AffineMap:
    """x -> scale*x + shift with nonzero integer scale."""

    scale: int
    shift: int

    def __post_init__(self):
        if self.scale == 0:
            raise ValueError("affine map must have nonzero scale")

    def __call__(self, x: int) -> int:
        return self.scale * x + self.shift


@dataclass(frozen=True)
class NormalForm:
    """A set in canonical position plus the map that restores the original.

    ``map(set) == original`` exactly; the canonical set has minimum 0 and,
    for k >= 2, gcd of elements 1; the scale is always positive.
    """

    set: FiniteIntSet
    map: AffineMap

    def restore(self) -> FiniteIntSet:
        return apply_affine(self.set, self.map)


def make_set(values: Sequence[int]) -> tuple[FiniteIntSet, bool]:
    """Build a set from raw values; flags whether duplicates were dropped."""
    result = FiniteIntSet.from_iterable(values)
    return result, len(result) != len(values)


def apply_affine(A: FiniteIntSet, m: AffineMap) -> FiniteIntSet:
    """Image {scale*a + shift : a in A}, re-sorted when scale < 0."""
    mapped = [m(a) for a in A.elements]
    if m.scale < 0:
        mapped.reverse()
    return FiniteIntSet(tuple(mapped))


def reflect(A: FiniteIntSet, c: int) -> FiniteIntSet:
    """The reflection c - A."""
    return apply_affine(A, AffineMap(-1, c))


def gcd_of_differences(A: FiniteIntSet) -> int:
    """gcd of {a - min(A)}; equals the element gcd once min(A) = 0."""
    if len(A) < 2:
        raise ValueError("gcd of differences needs at least two elements")
    a0 = A.elements[0]
    g = 0
    for a in A.elements[1:]:
        g = math.gcd(g, a - a0)
    return g


def normalize(A: FiniteIntSet) -> NormalForm:
    """Canonical position: minimum 0, element gcd 1, positive scale.

    Undefined for fewer than two elements (a singleton has no scale).
    """
    if len(A) < 2:
        raise ValueError("normalization undefined for sets with fewer than 2 elements")
    shift = A.min
    g = gcd_of_differences(A)
    canon = FiniteIntSet(tuple((a - shift) // g for a in A.elements))
    return NormalForm(set=canon, map=AffineMap(g, shift))
