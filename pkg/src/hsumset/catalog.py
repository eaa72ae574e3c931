"""Executable catalog of closed-form cardinalities for deletion families.

A *deletion family* is an interval [0, k+e] with e+1 symbolic positions
removed; for each family the catalog stores the case-split closed form
of the exactly-h-distinct sumset cardinality as data: one
(domain predicate, formula) pair per case, so coverage of the parameter
space can be analyzed mechanically and every case can be replayed
against the exact engine.

The engine is the ground truth in every crosscheck; the closed forms
are the claims under test.  A parameter tuple can come back as

  * matched   -- exactly one case value applies;
  * uncovered -- no case claims the tuple (reported, with the labels of
    nearby cases and of cases that match only below their stated
    k-threshold);
  * ambiguous -- several cases claim it with *different* values
    (reported, never resolved by guessing).

Benign multi-coverage (several cases, one value) is tracked separately
as an overlap.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable, Iterator, Sequence

from .engine import restricted_cardinality
from .errors import CoverageError, DomainError
from .intset import FiniteIntSet

Params = tuple[int, ...]


@dataclass(frozen=True)
class CaseFormula:
    """One case of one family: predicate, closed form, and display strings."""

    label: str
    domain: str
    formula: str
    applies: Callable[[int, int, Params], bool]
    value: Callable[[int, int, Params], int]
    h_min: int = 0
    h_max: int | None = None
    k_min: Callable[[int], int] | None = None  # per-case threshold override
    k_min_label: str = ""

    def h_allows(self, h: int) -> bool:
        return h >= self.h_min and (self.h_max is None or h <= self.h_max)

    def k_allows(self, h: int, k: int) -> bool:
        return self.k_min is None or k >= self.k_min(h)


@dataclass(frozen=True)
class DeletionFamily:
    """[0, k+extension] minus a parameterized deletion pattern."""

    id: str
    extension: int
    shape: str
    param_names: tuple[str, ...]
    h_min: int
    h_max: int | None
    k_min: Callable[[int], int]
    k_min_label: str
    deleted: Callable[[int, Params], tuple[int, ...]]
    param_iter: Callable[[int, int], Iterator[Params]]
    param_check: Callable[[int, Params], str | None]
    cases: tuple[CaseFormula, ...]
    dual: str | None = None

    def h_regime(self) -> str:
        if self.h_max is None:
            return f"h>={self.h_min}"
        if self.h_max == self.h_min:
            return f"h={self.h_min}"
        return f"{self.h_min}<=h<={self.h_max}"

    def check_hk(self, h: int, k: int) -> None:
        if h < self.h_min or (self.h_max is not None and h > self.h_max):
            raise DomainError(f"family {self.id} is stated for {self.h_regime()}, got h={h}")
        if k < self.k_min(h):
            raise DomainError(
                f"family {self.id} requires k >= {self.k_min_label} = {self.k_min(h)}, got k={k}"
            )


@dataclass(frozen=True)
class Prediction:
    """Outcome of evaluating the catalog on one parameter tuple."""

    status: str  # "matched" | "uncovered" | "ambiguous"
    value: int | None = None
    labels: tuple[str, ...] = ()
    values: tuple[int, ...] = ()
    subthreshold: tuple[str, ...] = ()
    near: tuple[str, ...] = ()


@dataclass
class CoverageReport:
    """Crosscheck result for one family at one (h, k)."""

    family: str
    h: int
    k: int
    checked: int = 0
    mismatches: list[dict] = field(default_factory=list)
    uncovered: list[dict] = field(default_factory=list)
    ambiguous: list[dict] = field(default_factory=list)
    overlaps: list[dict] = field(default_factory=list)
    wall_ms: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.mismatches and not self.uncovered and not self.ambiguous

    @property
    def clean(self) -> bool:
        """No wrong values: mismatch-free and conflict-free (gaps allowed)."""
        return not self.mismatches and not self.ambiguous


_REGISTRY: dict[str, DeletionFamily] = {}


def register(family: DeletionFamily) -> DeletionFamily:
    if family.id in _REGISTRY:
        raise ValueError(f"duplicate family id {family.id}")
    _REGISTRY[family.id] = family
    return family


def family_ids() -> list[str]:
    return list(_REGISTRY)


def get_family(family_id: str) -> DeletionFamily:
    try:
        return _REGISTRY[family_id]
    except KeyError:
        raise DomainError(f"unknown family {family_id!r}; known: {', '.join(_REGISTRY)}") from None


def instantiate(family_id: str, k: int, params: Params) -> FiniteIntSet:
    """The concrete k-element set [0, k+e] minus the instantiated deletions."""
    fam = get_family(family_id)
    err = fam.param_check(k, params)
    if err:
        raise DomainError(f"family {fam.id}: {err}")
    top = k + fam.extension
    return FiniteIntSet.interval_minus(0, top, fam.deleted(k, params))


def enumerate_params(family_id: str, h: int, k: int) -> list[Params]:
    """Every legal parameter tuple at (h, k), lexicographic, each once."""
    fam = get_family(family_id)
    fam.check_hk(h, k)
    return list(fam.param_iter(h, k))


def predict(family_id: str, h: int, k: int, params: Params) -> Prediction:
    """Evaluate the catalog on one tuple without raising on coverage gaps."""
    fam = get_family(family_id)
    fam.check_hk(h, k)
    err = fam.param_check(k, params)
    if err:
        raise DomainError(f"family {fam.id}: {err}")

    matched: list[tuple[CaseFormula, int]] = []
    subthreshold: list[str] = []
    for case in fam.cases:
        if not case.h_allows(h):
            continue
        if not case.applies(h, k, params):
            continue
        if not case.k_allows(h, k):
            subthreshold.append(case.label)
            continue
        matched.append((case, case.value(h, k, params)))

    if not matched:
        return Prediction(
            status="uncovered",
            subthreshold=tuple(subthreshold),
            near=_near_labels(fam, h, k, params),
        )
    values = sorted({v for _, v in matched})
    labels = tuple(c.label for c, _ in matched)
    if len(values) > 1:
        return Prediction(status="ambiguous", labels=labels, values=tuple(values))
    return Prediction(status="matched", value=values[0], labels=labels)


def _near_labels(fam: DeletionFamily, h: int, k: int, params: Params) -> tuple[str, ...]:
    """Labels of cases matching within L-inf distance 1 of the tuple."""
    near: list[str] = []
    for case in fam.cases:
        if not case.h_allows(h):
            continue
        hit = False
        for i in range(len(params)):
            for delta in (-1, 1):
                probe = params[:i] + (params[i] + delta,) + params[i + 1 :]
                if case.applies(h, k, probe):
                    hit = True
                    break
            if hit:
                break
        if hit:
            near.append(case.label)
    return tuple(near)


def predicted_cardinality(family_id: str, h: int, k: int, params: Params) -> tuple[int, str]:
    """The catalog's cardinality and the case that fired; raises on gaps."""
    pred = predict(family_id, h, k, params)
    if pred.status == "uncovered":
        raise CoverageError(
            f"family {family_id} (h={h}, k={k}): params {params} uncovered"
            + (f"; subthreshold cases: {', '.join(pred.subthreshold)}" if pred.subthreshold else "")
        )
    if pred.status == "ambiguous":
        raise CoverageError(
            f"family {family_id} (h={h}, k={k}): params {params} ambiguous between "
            + ", ".join(f"({lab})" for lab in pred.labels)
            + f" with values {list(pred.values)}"
        )
    return pred.value, pred.labels[0]


def crosscheck(
    family_id: str, h: int, k: int, *, window_cap: int | None = None
) -> CoverageReport:
    """Replay every tuple of a family against the exact engine."""
    fam = get_family(family_id)
    fam.check_hk(h, k)
    report = CoverageReport(family=fam.id, h=h, k=k)
    t0 = time.perf_counter()
    for params in fam.param_iter(h, k):
        pred = predict(family_id, h, k, params)
        report.checked += 1
        if pred.status == "uncovered":
            report.uncovered.append(
                {"params": params, "subthreshold": list(pred.subthreshold), "near": list(pred.near)}
            )
            continue
        if pred.status == "ambiguous":
            report.ambiguous.append(
                {"params": params, "labels": list(pred.labels), "values": list(pred.values)}
            )
            continue
        if len(pred.labels) > 1:
            report.overlaps.append(
                {"params": params, "labels": list(pred.labels), "value": pred.value}
            )
        actual = restricted_cardinality(instantiate(family_id, k, params), h, window_cap=window_cap)
        if actual != pred.value:
            report.mismatches.append(
                {
                    "params": params,
                    "predicted": pred.value,
                    "case": list(pred.labels),
                    "engine": actual,
                }
            )
    report.wall_ms = (time.perf_counter() - t0) * 1000.0
    return report


def verification_grid(family_id: str, h_values: Sequence[int] = (3, 4, 5, 6)) -> list[tuple[int, int]]:
    """Default (h, k) grid: each admissible h at its k-threshold and threshold+2."""
    fam = get_family(family_id)
    grid: list[tuple[int, int]] = []
    for h in h_values:
        if h < fam.h_min or (fam.h_max is not None and h > fam.h_max):
            continue
        kmin = fam.k_min(h)
        grid.append((h, kmin))
        grid.append((h, kmin + 2))
    return grid


def catalog_dump() -> list[dict]:
    """The whole catalog as data, one entry per case (JSON-friendly)."""
    entries = []
    for fam in _REGISTRY.values():
        for case in fam.cases:
            h_lo = max(fam.h_min, case.h_min)
            if case.h_max is not None:
                regime = f"h={h_lo}" if case.h_max == h_lo else f"{h_lo}<=h<={case.h_max}"
            elif fam.h_max is not None:
                regime = f"h={fam.h_max}" if fam.h_max == h_lo else f"{h_lo}<=h<={fam.h_max}"
            else:
                regime = f"h>={h_lo}"
            entries.append(
                {
                    "family": fam.id,
                    "case": case.label,
                    "h_regime": regime,
                    "k_min": case.k_min_label or fam.k_min_label,
                    "domain": case.domain,
                    "formula": case.formula,
                    "anchor": f"{fam.shape} case ({case.label})",
                }
            )
    return entries
