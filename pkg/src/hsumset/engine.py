"""Exact h-fold sumsets via a layered bitmap dynamic program.

Layout.  The input set is translated so its minimum sits at 0; every
achievable sum of j distinct elements then lives in the common window
[0, h*(max-min)] of a Python integer used as a bitmap, and the result
is translated back by j*min at the end.  Keeping one window for all
layers makes the inner loop a single shifted OR.

Update order.  Elements form the outer loop and the layer index runs
*descending* in the inner loop, so each element lands in at most one
slot per subset -- the classic 0/1-knapsack ordering.  Ascending order
would silently compute sums with repetition instead.

Negative elements need no special handling beyond the translation.

Two guards protect each computation and fail loudly instead of
degrading: layer sums must stay inside signed 64-bit range, and the
bit window h*(max-min) must stay under a configurable cap (default
2^30, about 128 MiB of bitmap in the worst case).

`restricted_sumset_naive` is the independent oracle: it enumerates all
C(k, h) subsets with itertools and never touches a bitmap.  It refuses
(rather than truncates) above a configurable subset cap.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

from .errors import ResourceLimitError
from .intset import INT64_MAX, FiniteIntSet

DEFAULT_WINDOW_CAP = 1 << 30
DEFAULT_NAIVE_CAP = 10_000_000


def _guard(A: FiniteIntSet, h: int, window_cap: int | None) -> None:
    if len(A) == 0 or h == 0:
        return
    absmax = max(abs(A.min), abs(A.max))
    if h * absmax > INT64_MAX:
        raise ResourceLimitError(
            f"layer sums up to {h}*{absmax} exceed signed 64-bit range"
        )
    cap = DEFAULT_WINDOW_CAP if window_cap is None else window_cap
    window = h * A.span
    if window > cap:
        raise ResourceLimitError(
            f"bit window {window} exceeds cap {cap}; raise the bit-window cap to proceed"
        )


def _bits_to_values(bitmap: int, shift: int) -> tuple[int, ...]:
    values = []
    while bitmap:
        low = bitmap & -bitmap
        values.append(low.bit_length() - 1 + shift)
        bitmap ^= low
    return tuple(values)


@dataclass(frozen=True)
class SumLayers:
    """Per-layer bitmaps of exactly-j-distinct-element sums.

    ``layers[j]`` has bit s set iff s + j*offset is a sum of exactly j
    distinct elements, where ``offset`` is the translation applied to
    each summand (the minimum of the input set).  Layer 0 is always
    exactly {0}; layers beyond the set size are empty.
    """

    offset: int
    layers: tuple[int, ...]

    @property
    def depth(self) -> int:
        """Largest layer index stored (the h that was requested)."""
        return len(self.layers) - 1

    def layer_cardinality(self, j: int) -> int:
        return self.layers[j].bit_count()

    def layer_set(self, j: int) -> FiniteIntSet:
        return FiniteIntSet(_bits_to_values(self.layers[j], j * self.offset))


def push_element(layers: list[int], e: int, h: int, count: int) -> list[int]:
    """One DP step: fold a new translated element into a layer stack.

    ``count`` is the number of elements already folded in; layers above
    ``count + 1`` stay empty, so only indices 1..min(h, count+1) change.
    Returns a fresh list (the input is not mutated), which is what lets
    a backtracking search share prefixes.
    """
    top = min(h, count + 1)
    out = layers[:]
    for j in range(top, 0, -1):
        out[j] = layers[j] | (layers[j - 1] << e)
    return out


def layer_table(A: FiniteIntSet, h: int, *, window_cap: int | None = None) -> SumLayers:
    """All layers 0..h of exactly-j-distinct sums of A."""
    if h < 0:
        raise ValueError("h must be nonnegative")
    _guard(A, h, window_cap)
    base = A.min if len(A) else 0
    layers = [0] * (h + 1)
    layers[0] = 1
    count = 0
    for a in A.elements:
        e = a - base
        top = min(h, count + 1)
        for j in range(top, 0, -1):
            layers[j] |= layers[j - 1] << e
        count += 1
    return SumLayers(offset=base, layers=tuple(layers))


def restricted_sumset(A: FiniteIntSet, h: int, *, window_cap: int | None = None) -> FiniteIntSet:
    """Sums of exactly h distinct elements; {0} for h=0, empty for h > |A|."""
    if h < 0:
        raise ValueError("h must be nonnegative")
    if h == 0:
        return FiniteIntSet((0,))
    if h > len(A):
        return FiniteIntSet(())
    return layer_table(A, h, window_cap=window_cap).layer_set(h)


def restricted_cardinality(A: FiniteIntSet, h: int, *, window_cap: int | None = None) -> int:
    """|restricted_sumset(A, h)| by counting bits, never materializing the set."""
    if h < 0:
        raise ValueError("h must be nonnegative")
    if h == 0:
        return 1
    if h > len(A):
        return 0
    return layer_table(A, h, window_cap=window_cap).layer_cardinality(h)


def restricted_sumset_naive(
    A: FiniteIntSet, h: int, *, cap: int | None = None
) -> FiniteIntSet:
    """Oracle by explicit enumeration of all C(k, h) element subsets.

    Deliberately independent of the bitmap path.  Refuses outright when
    the subset count exceeds the cap.
    """
    if h < 0:
        raise ValueError("h must be nonnegative")
    if h == 0:
        return FiniteIntSet((0,))
    k = len(A)
    if h > k:
        return FiniteIntSet(())
    limit = DEFAULT_NAIVE_CAP if cap is None else cap
    n_subsets = math.comb(k, h)
    if n_subsets > limit:
        raise ResourceLimitError(
            f"naive enumeration of {n_subsets} subsets exceeds cap {limit}; "
            "raise the naive cap to run this deliberately"
        )
    return FiniteIntSet.from_iterable(sum(c) for c in combinations(A.elements, h))


def unrestricted_sumset(A: FiniteIntSet, h: int, *, window_cap: int | None = None) -> FiniteIntSet:
    """Sums of h elements with repetition allowed (h >= 1, A nonempty)."""
    if len(A) < 1:
        raise ValueError("sumset with repetition needs a nonempty set")
    if h < 1:
        raise ValueError("h must be positive")
    _guard(A, h, window_cap)
    base = A.min
    shifts = [a - base for a in A.elements]
    current = 0
    for e in shifts:
        current |= 1 << e
    for _ in range(h - 1):
        nxt = 0
        for e in shifts:
            nxt |= current << e
        current = nxt
    return FiniteIntSet(_bits_to_values(current, h * base))
