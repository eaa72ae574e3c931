"""Exhaustive search over normalized sets and extremal-classification checks.

The search space is every set A of k integers with min 0, max m, and
element gcd 1, swept by diameter m up to a configured bound.  A set is
encoded as 0 plus k-2 interior elements plus m, and candidates are
walked depth-first in lexicographic order with the sumset DP folded in
incrementally (one shifted OR per layer per element), so a prefix's
layer stack is shared by all its completions.

Two prunes, both lossless for an exact-cardinality query:

  * branch prune -- the exactly-h layer of a prefix only grows as
    elements are added, so once its popcount exceeds the target the
    whole subtree is skipped;
  * leaf prune -- (sum of h largest) - (sum of h smallest) + 1 is an
    upper bound on the cardinality, so a completed candidate below the
    target is skipped before its final DP fold.

Work is sharded by (diameter, first interior element).  Shards are
independent; results merge by sorting, so output is identical for any
worker count.  The `pruned` counter includes every completion skipped
by a branch prune, whether or not the gcd filter would have kept it.
"""

from __future__ import annotations

import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .engine import DEFAULT_WINDOW_CAP, push_element
from .errors import DomainError, ResourceLimitError
from .intset import INT64_MAX, FiniteIntSet

DEFAULT_MARGIN = 3


@dataclass(frozen=True)
class EnumerationSpec:
    """Search window: size k, diameter cap, and the gcd-1 filter."""

    k: int
    dmax: int
    gcd_filter: bool = True


def enumerate_normalized_sets(spec: EnumerationSpec) -> Iterator[FiniteIntSet]:
    """All A in [0, dmax] with |A| = k, 0 in A, grouped by diameter ascending.

    With the gcd filter on (the default), only sets with element gcd 1
    are emitted.  Each qualifying set appears exactly once; the stream
    is empty when the window cannot hold a k-set.
    """
    k, dmax = spec.k, spec.dmax
    if k <= 0 or dmax < k - 1:
        return
    if k == 1:
        if not spec.gcd_filter:
            yield FiniteIntSet((0,))
        return
    from itertools import combinations

    for m in range(k - 1, dmax + 1):
        for interior in combinations(range(1, m), k - 2):
            g = m
            for c in interior:
                g = math.gcd(g, c)
            if spec.gcd_filter and g != 1:
                continue
            yield FiniteIntSet((0, *interior, m))


@dataclass
class ClassificationReport:
    """Result of one exhaustive sweep for |h-fold restricted sumset| = target."""

    theorem: str | None
    h: int
    k: int
    dmax: int
    target: int
    found: list[FiniteIntSet]
    expected: list[FiniteIntSet] | None = None
    verdict: str | None = None
    scanned: int = 0
    pruned: int = 0
    wall_ms: float = 0.0

    @property
    def ok(self) -> bool:
        return self.verdict in (None, "exact-match")


def _leaf_check(elements, g, layers, h, target, gcd_filter, prune, stats, found):
    if gcd_filter and g != 1:
        return
    if prune and h >= 1:
        top = sum(elements[-h:])
        bot = sum(elements[:h])
        if top - bot + 1 < target:
            stats[1] += 1
            return
    stats[0] += 1
    if layers[h].bit_count() == target:
        found.append(elements)


def _scan_shard(args) -> tuple[list[tuple[int, ...]], int, int]:
    """Evaluate one (diameter, first-interior) shard; see module docstring."""
    h, k, target, m, first, gcd_filter, prune = args
    found: list[tuple[int, ...]] = []
    stats = [0, 0]  # scanned, pruned
    need = k - 2

    layers = [0] * (h + 1)
    layers[0] = 1
    layers = push_element(layers, 0, h, 0)
    layers = push_element(layers, m, h, 1)

    if need == 0:
        _leaf_check((0, m), m, layers, h, target, gcd_filter, prune, stats, found)
        return found, stats[0], stats[1]

    layers = push_element(layers, first, h, 2)
    g0 = math.gcd(m, first)
    if need == 1:
        _leaf_check((0, first, m), g0, layers, h, target, gcd_filter, prune, stats, found)
        return found, stats[0], stats[1]

    def rec(cur_layers, chosen, g, depth):
        count = 2 + depth
        if prune and count >= h and cur_layers[h].bit_count() > target:
            stats[1] += math.comb(m - 1 - chosen[-1], need - depth)
            return
        last = chosen[-1]
        remaining = need - depth
        if remaining == 1:
            for c in range(last + 1, m):
                elements = (0, *chosen, c, m)
                g2 = math.gcd(g, c)
                if gcd_filter and g2 != 1:
                    continue
                if prune and h >= 1:
                    top = sum(elements[-h:])
                    bot = sum(elements[:h])
                    if top - bot + 1 < target:
                        stats[1] += 1
                        continue
                stats[0] += 1
                leaf = push_element(cur_layers, c, h, count)
                if leaf[h].bit_count() == target:
                    found.append(elements)
            return
        for c in range(last + 1, m - remaining + 1):
            rec(
                push_element(cur_layers, c, h, count),
                chosen + (c,),
                math.gcd(g, c),
                depth + 1,
            )

    rec(layers, (first,), g0, 1)
    return found, stats[0], stats[1]


def _shard_args(h, k, target, dmax, gcd_filter, prune):
    tasks = []
    for m in range(max(k - 1, 1), dmax + 1):
        if k == 2:
            tasks.append((h, k, target, m, 0, gcd_filter, prune))
        else:
            for first in range(1, m - k + 3):
                tasks.append((h, k, target, m, first, gcd_filter, prune))
    return tasks


def classify_by_cardinality(
    h: int,
    k: int,
    target: int,
    dmax: int,
    *,
    gcd_filter: bool = True,
    prune: bool = True,
    threads: int = 1,
    window_cap: int | None = None,
) -> ClassificationReport:
    """Every normalized k-set with diameter <= dmax whose exactly-h sumset
    has the requested cardinality, in lexicographic order."""
    if h < 0 or h > k:
        raise DomainError(f"need 0 <= h <= k, got h={h}, k={k}")
    if target < 1:
        raise DomainError(f"target must be >= 1, got {target}")
    cap = DEFAULT_WINDOW_CAP if window_cap is None else window_cap
    if h * dmax > cap:
        raise ResourceLimitError(f"bit window {h * dmax} exceeds cap {cap}")
    if h * dmax > INT64_MAX:
        raise ResourceLimitError("layer sums exceed signed 64-bit range")

    t0 = time.perf_counter()
    report = ClassificationReport(None, h, k, dmax, target, [])
    if k >= 1:
        tasks = _shard_args(h, k, target, dmax, gcd_filter, prune)
        if threads > 1 and len(tasks) > 1:
            with ProcessPoolExecutor(max_workers=threads) as pool:
                chunk = max(1, len(tasks) // (threads * 8))
                results = list(pool.map(_scan_shard, tasks, chunksize=chunk))
        else:
            results = [_scan_shard(t) for t in tasks]
        raw: list[tuple[int, ...]] = []
        for shard_found, scanned, pruned in results:
            raw.extend(shard_found)
            report.scanned += scanned
            report.pruned += pruned
        report.found = [FiniteIntSet(t) for t in sorted(raw)]
    report.wall_ms = (time.perf_counter() - t0) * 1000.0
    return report


# ---------------------------------------------------------------------------
# extremal classifications: expected set lists and their verification


@dataclass(frozen=True)
class Classification:
    """One cardinality-level classification: hypotheses and the full set list."""

    id: str
    h_min: int
    h_max: int | None
    k_min: Callable[[int], int]
    k_min_label: str
    extension: int
    target: Callable[[int, int], int]
    target_label: str
    deletions: Callable[[int], list[tuple[int, ...]]]

    def check_hk(self, h: int, k: int) -> None:
        if h < self.h_min or (self.h_max is not None and h > self.h_max):
            regime = (
                f"h = {self.h_min}"
                if self.h_max == self.h_min
                else f"h >= {self.h_min}"
            )
            raise DomainError(f"classification {self.id} is stated for {regime}, got h={h}")
        if k < self.k_min(h):
            raise DomainError(
                f"classification {self.id} requires k >= {self.k_min_label} = "
                f"{self.k_min(h)}, got k={k}"
            )


def _three_element_h3_deletions(k: int) -> list[tuple[int, ...]]:
    fixed = [
        (1, 2, 3), (k - 1, k, k + 1), (1, 2, k + 1), (1, k, k + 1),
        (1, 3, k + 2), (k - 2, k, k + 2), (1, 4, k + 2), (k - 3, k, k + 2),
        (2, k, k + 2), (1, k - 1, k + 2), (1, k - 2, k + 2), (3, k, k + 2),
    ]
    fixed.extend((r, k + 1, k + 2) for r in range(4, k - 3))
    return fixed


CLASSIFICATIONS: dict[str, Classification] = {
    c.id: c
    for c in (
        Classification(
            id="one-element", h_min=3, h_max=None,
            k_min=lambda h: 3 * h + 1, k_min_label="3h+1",
            extension=0,
            target=lambda h, k: h * k - h * h + 2, target_label="h*k - h^2 + 2",
            deletions=lambda k: [(1,), (k - 1,)],
        ),
        Classification(
            id="two-element-h3", h_min=3, h_max=3,
            k_min=lambda h: 12, k_min_label="12",
            extension=1,
            target=lambda h, k: 3 * k - 6, target_label="3k - 6",
            deletions=lambda k: [
                (1, 2), (k - 1, k), (1, k), (2, k + 1), (3, k + 1),
                (k - 2, k + 1), (k - 3, k + 1),
            ],
        ),
        Classification(
            id="two-element", h_min=4, h_max=None,
            k_min=lambda h: 3 * h + 3, k_min_label="3h+3",
            extension=1,
            target=lambda h, k: h * k - h * h + 3, target_label="h*k - h^2 + 3",
            deletions=lambda k: [(1, 2), (k - 1, k), (1, k), (2, k + 1), (k - 2, k + 1)],
        ),
        Classification(
            id="three-element-h3", h_min=3, h_max=3,
            k_min=lambda h: 13, k_min_label="13",
            extension=2,
            target=lambda h, k: 3 * k - 5, target_label="3k - 5",
            deletions=_three_element_h3_deletions,
        ),
        Classification(
            id="three-element-h4", h_min=4, h_max=4,
            k_min=lambda h: 16, k_min_label="16",
            extension=2,
            target=lambda h, k: 4 * k - 12, target_label="4k - 12",
            deletions=lambda k: [
                (1, 2, 3), (k - 1, k, k + 1), (1, 2, k + 1), (1, k, k + 1),
                (1, 3, k + 2), (k - 2, k, k + 2), (2, k, k + 2), (1, k - 1, k + 2),
                (3, k + 1, k + 2), (k - 3, k + 1, k + 2), (4, k + 1, k + 2),
                (k - 4, k + 1, k + 2),
            ],
        ),
        Classification(
            id="three-element", h_min=5, h_max=None,
            k_min=lambda h: 3 * h + 4, k_min_label="3h+4",
            extension=2,
            target=lambda h, k: h * k - h * h + 4, target_label="h*k - h^2 + 4",
            deletions=lambda k: [
                (1, 2, 3), (k - 1, k, k + 1), (1, 2, k + 1), (1, k, k + 1),
                (1, 3, k + 2), (k - 2, k, k + 2), (2, k, k + 2), (1, k - 1, k + 2),
                (3, k + 1, k + 2), (k - 3, k + 1, k + 2),
            ],
        ),
    )
}


def classification_ids() -> list[str]:
    return list(CLASSIFICATIONS)


def get_classification(theorem_id: str) -> Classification:
    try:
        return CLASSIFICATIONS[theorem_id]
    except KeyError:
        raise DomainError(
            f"unknown classification {theorem_id!r}; known: {', '.join(CLASSIFICATIONS)}"
        ) from None


def expected_sets(theorem_id: str, h: int, k: int) -> list[FiniteIntSet]:
    """The full expanded extremal-set list a classification asserts at (h, k)."""
    cls = get_classification(theorem_id)
    cls.check_hk(h, k)
    top = k + cls.extension
    sets = {FiniteIntSet.interval_minus(0, top, d) for d in cls.deletions(k)}
    return sorted(sets)


def verify_classification(
    theorem_id: str,
    h: int,
    k: int,
    dmax: int | None = None,
    *,
    margin: int = DEFAULT_MARGIN,
    gcd_filter: bool = True,
    prune: bool = True,
    threads: int = 1,
    window_cap: int | None = None,
) -> ClassificationReport:
    """Exhaustively reproduce a classification's set list at (h, k).

    The search window defaults to the asserted interval end plus a
    safety margin, so containment inside the interval is itself
    re-derived from the sweep rather than assumed.
    """
    cls = get_classification(theorem_id)
    cls.check_hk(h, k)
    if dmax is None:
        dmax = k + cls.extension + margin
    target = cls.target(h, k)
    report = classify_by_cardinality(
        h, k, target, dmax,
        gcd_filter=gcd_filter, prune=prune, threads=threads, window_cap=window_cap,
    )
    report.theorem = theorem_id
    report.expected = expected_sets(theorem_id, h, k)
    missing = [s for s in report.expected if s not in report.found]
    extra = [s for s in report.found if s not in report.expected]
    if not missing and not extra:
        report.verdict = "exact-match"
    elif missing and extra:
        report.verdict = "missing+extra"
    elif missing:
        report.verdict = "missing"
    else:
        report.verdict = "extra"
    return report


@dataclass
class ContainmentReport:
    """Check that every set at a near-minimal cardinality stays in its interval."""

    h: int
    k: int
    c: int
    dmax: int
    target: int
    bound: int
    found: list[FiniteIntSet] = field(default_factory=list)
    violators: list[FiniteIntSet] = field(default_factory=list)
    scanned: int = 0
    pruned: int = 0
    wall_ms: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.violators


_CONTAINMENT_KMIN = {2: ("3h+1", lambda h: 3 * h + 1),
                     3: ("3h+3", lambda h: 3 * h + 3),
                     4: ("3h+4", lambda h: 3 * h + 4)}


def verify_containment(
    h: int,
    k: int,
    c: int,
    dmax: int | None = None,
    *,
    margin: int = DEFAULT_MARGIN,
    prune: bool = True,
    threads: int = 1,
    window_cap: int | None = None,
) -> ContainmentReport:
    """Every normalized set with |h-fold sumset| = h*k - h^2 + c must have
    max <= k + c - 2; any set found beyond that bound is a violator."""
    if c not in _CONTAINMENT_KMIN:
        raise DomainError(f"containment part must have c in {{2, 3, 4}}, got {c}")
    if h < 3:
        raise DomainError(f"containment is stated for h >= 3, got h={h}")
    label, k_min = _CONTAINMENT_KMIN[c]
    if k < k_min(h):
        raise DomainError(f"containment with c={c} requires k >= {label} = {k_min(h)}, got k={k}")
    bound = k + c - 2
    if dmax is None:
        dmax = bound + margin
    target = h * k - h * h + c
    inner = classify_by_cardinality(
        h, k, target, dmax, prune=prune, threads=threads, window_cap=window_cap
    )
    report = ContainmentReport(h=h, k=k, c=c, dmax=dmax, target=target, bound=bound)
    report.found = inner.found
    report.violators = [A for A in inner.found if A.max > bound]
    report.scanned = inner.scanned
    report.pruned = inner.pruned
    report.wall_ms = inner.wall_ms
    return report
