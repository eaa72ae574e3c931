"""The deletion-family tables.

Each family below removes e+1 positions from [0, k+e] (e = 0, 1, 2) and
carries the complete case split of |h^(A)| over its parameter ranges.
Formulas are data, not branching code: predicates and value lambdas take
(h, k, params) so the whole catalog can be swept mechanically.

Several families are reflections of one another ((k+e) - A maps one
deletion pattern onto its mirror); for those the `dual` field names the
partner and the test suite checks that predicted values agree under the
reflection of parameters.  Where a reflected family's own printed
boundary split disagreed with the value forced by the reflection
identity, the encoding follows the reflection (the engine crosscheck is
the arbiter); those spots are marked inline.

The two variants of the h=3 general-triple family carry different
k-thresholds on different cases (13 for the direct cases, 11 for the
mirrored ones); a tuple matched only by a case whose threshold is not
yet met is reported as uncovered with that case flagged, so the binding
threshold is visible in coverage reports.
"""

from __future__ import annotations

from typing import Iterator

from .catalog import CaseFormula, DeletionFamily, Params, register

# ---------------------------------------------------------------------------
# small helpers


def _one_param_check(name: str, lo_expr, hi_expr):
    def check(k: int, p: Params) -> str | None:
        if len(p) != 1:
            return f"expects one parameter {name}"
        lo, hi = lo_expr(k), hi_expr(k)
        if not lo <= p[0] <= hi:
            return f"{name} must be in [{lo}, {hi}], got {p[0]}"
        return None

    return check


def _pair_check(names: str, valid):
    def check(k: int, p: Params) -> str | None:
        if len(p) != 2:
            return f"expects two parameters ({names})"
        msg = valid(k, p[0], p[1])
        return msg

    return check


def _triple_check(names: str, valid):
    def check(k: int, p: Params) -> str | None:
        if len(p) != 3:
            return f"expects three parameters ({names})"
        return valid(k, p[0], p[1], p[2])

    return check


# ---------------------------------------------------------------------------
# single deletion: [0,k] \ {x}


def _one_deletion() -> DeletionFamily:
    cases = (
        CaseFormula(
            "i", "1 <= x <= h-1", "h*k - h^2 + x + 1",
            lambda h, k, p: 1 <= p[0] <= h - 1,
            lambda h, k, p: h * k - h * h + p[0] + 1,
        ),
        CaseFormula(
            "ii", "k-h+1 <= x <= k-1", "(h+1)*k - h^2 - x + 1",
            lambda h, k, p: k - h + 1 <= p[0] <= k - 1,
            lambda h, k, p: (h + 1) * k - h * h - p[0] + 1,
        ),
        CaseFormula(
            "iii", "x in {h, k-h}", "h*k - h^2 + h",
            lambda h, k, p: p[0] in (h, k - h),
            lambda h, k, p: h * k - h * h + h,
        ),
        CaseFormula(
            "iv", "h+1 <= x <= k-h-1", "h*k - h^2 + h + 1",
            lambda h, k, p: h + 1 <= p[0] <= k - h - 1,
            lambda h, k, p: h * k - h * h + h + 1,
        ),
    )
    return DeletionFamily(
        id="one-deletion", extension=0, shape="[0,k] minus {x}", param_names=("x",),
        h_min=3, h_max=None, k_min=lambda h: 3 * h + 1, k_min_label="3h+1",
        deleted=lambda k, p: (p[0],),
        param_iter=lambda h, k: ((x,) for x in range(1, k)),
        param_check=_one_param_check("x", lambda k: 1, lambda k: k - 1),
        cases=cases,
    )


# ---------------------------------------------------------------------------
# adjacent pair: [0,k+1] \ {x, x+1}


def _pair_adjacent() -> DeletionFamily:
    cases = (
        CaseFormula(
            "i", "1 <= x <= h-1", "h*k - h^2 + 2x + 1",
            lambda h, k, p: 1 <= p[0] <= h - 1,
            lambda h, k, p: h * k - h * h + 2 * p[0] + 1,
        ),
        CaseFormula(
            "ii", "k-h+1 <= x <= k-1", "(h+2)*k - h^2 - 2x + 1",
            lambda h, k, p: k - h + 1 <= p[0] <= k - 1,
            lambda h, k, p: (h + 2) * k - h * h - 2 * p[0] + 1,
        ),
        CaseFormula(
            "iii", "x in {h, k-h}", "h*k - h^2 + 2h - 1",
            lambda h, k, p: p[0] in (h, k - h),
            lambda h, k, p: h * k - h * h + 2 * h - 1,
        ),
        CaseFormula(
            "iv", "h+1 <= x <= k-h-1", "h*k - h^2 + 2h + 1",
            lambda h, k, p: h + 1 <= p[0] <= k - h - 1,
            lambda h, k, p: h * k - h * h + 2 * h + 1,
        ),
    )
    return DeletionFamily(
        id="pair-adjacent", extension=1, shape="[0,k+1] minus {x,x+1}", param_names=("x",),
        h_min=3, h_max=None, k_min=lambda h: 3 * h + 3, k_min_label="3h+3",
        deleted=lambda k, p: (p[0], p[0] + 1),
        param_iter=lambda h, k: ((x,) for x in range(1, k)),
        param_check=_one_param_check("x", lambda k: 1, lambda k: k - 1),
        cases=cases,
    )


# ---------------------------------------------------------------------------
# gapped pair: [0,k+1] \ {x, x+2}


def _pair_skip() -> DeletionFamily:
    cases = (
        CaseFormula(
            "i", "1 <= x <= h-2", "h*k - h^2 + 2x + 2",
            lambda h, k, p: 1 <= p[0] <= h - 2,
            lambda h, k, p: h * k - h * h + 2 * p[0] + 2,
        ),
        CaseFormula(
            "ii", "k-h+1 <= x <= k-2", "(h+2)*k - h^2 - 2x",
            lambda h, k, p: k - h + 1 <= p[0] <= k - 2,
            lambda h, k, p: (h + 2) * k - h * h - 2 * p[0],
        ),
        CaseFormula(
            "iii", "x in {h-1, k-h}", "h*k - h^2 + 2h - 1",
            lambda h, k, p: p[0] in (h - 1, k - h),
            lambda h, k, p: h * k - h * h + 2 * h - 1,
        ),
        CaseFormula(
            "iv", "x in {h, k-h-1}", "h*k - h^2 + 2h",
            lambda h, k, p: p[0] in (h, k - h - 1),
            lambda h, k, p: h * k - h * h + 2 * h,
        ),
        CaseFormula(
            "v", "h+1 <= x <= k-h-2", "h*k - h^2 + 2h + 1",
            lambda h, k, p: h + 1 <= p[0] <= k - h - 2,
            lambda h, k, p: h * k - h * h + 2 * h + 1,
        ),
    )
    return DeletionFamily(
        id="pair-skip", extension=1, shape="[0,k+1] minus {x,x+2}", param_names=("x",),
        h_min=3, h_max=None, k_min=lambda h: 3 * h + 3, k_min_label="3h+3",
        deleted=lambda k, p: (p[0], p[0] + 2),
        param_iter=lambda h, k: ((x,) for x in range(1, k - 1)),
        param_check=_one_param_check("x", lambda k: 1, lambda k: k - 2),
        cases=cases,
    )


# ---------------------------------------------------------------------------
# pair {x, k}: [0,k+1] \ {x, k}


def _pair_x_k() -> DeletionFamily:
    cases = (
        CaseFormula(
            "i", "1 <= x <= h-1", "h*k - h^2 + x + 2",
            lambda h, k, p: 1 <= p[0] <= h - 1,
            lambda h, k, p: h * k - h * h + p[0] + 2,
        ),
        CaseFormula(
            "ii", "x in {h, k-h}", "h*k - h^2 + h + 1",
            lambda h, k, p: p[0] in (h, k - h),
            lambda h, k, p: h * k - h * h + h + 1,
        ),
        CaseFormula(
            "iii", "h+1 <= x <= k-h-1", "h*k - h^2 + h + 2",
            lambda h, k, p: h + 1 <= p[0] <= k - h - 1,
            lambda h, k, p: h * k - h * h + h + 2,
        ),
        CaseFormula(
            "iv", "k-h+1 <= x <= k-3", "(h+1)*k - h^2 - x + 2",
            lambda h, k, p: k - h + 1 <= p[0] <= k - 3,
            lambda h, k, p: (h + 1) * k - h * h - p[0] + 2,
        ),
    )
    return DeletionFamily(
        id="pair-x-k", extension=1, shape="[0,k+1] minus {x,k}", param_names=("x",),
        h_min=3, h_max=None, k_min=lambda h: 3 * h + 3, k_min_label="3h+3",
        deleted=lambda k, p: (p[0], k),
        param_iter=lambda h, k: ((x,) for x in range(1, k - 2)),
        param_check=_one_param_check("x", lambda k: 1, lambda k: k - 3),
        cases=cases,
        dual="pair-1-y",
    )


# ---------------------------------------------------------------------------
# pair {1, y}: [0,k+1] \ {1, y} -- mirror of pair-x-k under (k+1) - A


def _pair_1_y() -> DeletionFamily:
    cases = (
        CaseFormula(
            "i", "k-h+2 <= y <= k", "(h+1)*k - h^2 - y + 3",
            lambda h, k, p: k - h + 2 <= p[0] <= k,
            lambda h, k, p: (h + 1) * k - h * h - p[0] + 3,
        ),
        CaseFormula(
            "ii", "y in {h+1, k-h+1}", "h*k - h^2 + h + 1",
            lambda h, k, p: p[0] in (h + 1, k - h + 1),
            lambda h, k, p: h * k - h * h + h + 1,
        ),
        CaseFormula(
            "iii", "h+2 <= y <= k-h", "h*k - h^2 + h + 2",
            lambda h, k, p: h + 2 <= p[0] <= k - h,
            lambda h, k, p: h * k - h * h + h + 2,
        ),
        # value forced by the reflection onto pair-x-k case (iv)
        CaseFormula(
            "iv", "4 <= y <= h", "h*k - h^2 + y + 1",
            lambda h, k, p: 4 <= p[0] <= h,
            lambda h, k, p: h * k - h * h + p[0] + 1,
        ),
    )
    return DeletionFamily(
        id="pair-1-y", extension=1, shape="[0,k+1] minus {1,y}", param_names=("y",),
        h_min=3, h_max=None, k_min=lambda h: 3 * h + 3, k_min_label="3h+3",
        deleted=lambda k, p: (1, p[0]),
        param_iter=lambda h, k: ((y,) for y in range(4, k + 1)),
        param_check=_one_param_check("y", lambda k: 4, lambda k: k),
        cases=cases,
        dual="pair-x-k",
    )


# ---------------------------------------------------------------------------
# pair {x, k-1}: [0,k+1] \ {x, k-1}


def _pair_x_km1() -> DeletionFamily:
    cases = (
        CaseFormula(
            "i", "1 <= x <= h-1", "h*k - h^2 + x + 3",
            lambda h, k, p: 1 <= p[0] <= h - 1,
            lambda h, k, p: h * k - h * h + p[0] + 3,
        ),
        CaseFormula(
            "ii", "x in {h, k-h}", "h*k - h^2 + h + 2",
            lambda h, k, p: p[0] in (h, k - h),
            lambda h, k, p: h * k - h * h + h + 2,
        ),
        CaseFormula(
            "iii", "h+1 <= x <= k-h-2", "h*k - h^2 + h + 3",
            lambda h, k, p: h + 1 <= p[0] <= k - h - 2,
            lambda h, k, p: h * k - h * h + h + 3,
        ),
        CaseFormula(
            "iv", "x = k-h-1", "3k-4 for h=3; h*k - h^2 + h + 3 for h>=4",
            lambda h, k, p: p[0] == k - h - 1,
            lambda h, k, p: 3 * k - 4 if h == 3 else h * k - h * h + h + 3,
        ),
        CaseFormula(
            "v", "k-h+1 <= x <= k-4", "(h+1)*k - h^2 - x + 3",
            lambda h, k, p: k - h + 1 <= p[0] <= k - 4,
            lambda h, k, p: (h + 1) * k - h * h - p[0] + 3,
        ),
    )
    return DeletionFamily(
        id="pair-x-km1", extension=1, shape="[0,k+1] minus {x,k-1}", param_names=("x",),
        h_min=3, h_max=None, k_min=lambda h: 3 * h + 3, k_min_label="3h+3",
        deleted=lambda k, p: (p[0], k - 1),
        param_iter=lambda h, k: ((x,) for x in range(1, k - 3)),
        param_check=_one_param_check("x", lambda k: 1, lambda k: k - 4),
        cases=cases,
        dual="pair-2-y",
    )


# ---------------------------------------------------------------------------
# pair {2, y}: [0,k+1] \ {2, y} -- mirror of pair-x-km1


def _pair_2_y() -> DeletionFamily:
    cases = (
        CaseFormula(
            "i", "k-h+2 <= y <= k", "(h+1)*k - h^2 - y + 4",
            lambda h, k, p: k - h + 2 <= p[0] <= k,
            lambda h, k, p: (h + 1) * k - h * h - p[0] + 4,
        ),
        CaseFormula(
            "ii", "y in {h+1, k-h+1}", "h*k - h^2 + h + 2",
            lambda h, k, p: p[0] in (h + 1, k - h + 1),
            lambda h, k, p: h * k - h * h + h + 2,
        ),
        CaseFormula(
            "iii", "h+3 <= y <= k-h", "h*k - h^2 + h + 3",
            lambda h, k, p: h + 3 <= p[0] <= k - h,
            lambda h, k, p: h * k - h * h + h + 3,
        ),
        CaseFormula(
            "iv", "y = h+2", "3k-4 for h=3; h*k - h^2 + h + 3 for h>=4",
            lambda h, k, p: p[0] == h + 2,
            lambda h, k, p: 3 * k - 4 if h == 3 else h * k - h * h + h + 3,
        ),
        CaseFormula(
            "v", "5 <= y <= h", "h*k - h^2 + y + 2",
            lambda h, k, p: 5 <= p[0] <= h,
            lambda h, k, p: h * k - h * h + p[0] + 2,
        ),
    )
    return DeletionFamily(
        id="pair-2-y", extension=1, shape="[0,k+1] minus {2,y}", param_names=("y",),
        h_min=3, h_max=None, k_min=lambda h: 3 * h + 3, k_min_label="3h+3",
        deleted=lambda k, p: (2, p[0]),
        param_iter=lambda h, k: ((y,) for y in range(5, k + 1)),
        param_check=_one_param_check("y", lambda k: 5, lambda k: k),
        cases=cases,
        dual="pair-x-km1",
    )


# ---------------------------------------------------------------------------
# general pair: [0,k+1] \ {x, y} with 3 <= x, y <= k-2, y-x >= 3


def _general_pair() -> DeletionFamily:
    cases = (
        CaseFormula(
            "i", "3 <= x <= h-3, 6 <= y <= h", "h*k - h^2 + x + y",
            lambda h, k, p: 3 <= p[0] <= h - 3 and 6 <= p[1] <= h,
            lambda h, k, p: h * k - h * h + p[0] + p[1],
            h_min=6,
        ),
        CaseFormula(
            "ii", "3 <= x <= h-2, y = h+1", "h*k - h*(h-1) + x",
            lambda h, k, p: 3 <= p[0] <= h - 2 and p[1] == h + 1,
            lambda h, k, p: h * k - h * (h - 1) + p[0],
            h_min=5,
        ),
        CaseFormula(
            "iii.a", "3 <= x <= h-1, h+2 <= y <= k-h, (x,y) != (h-1,h+2)",
            "h*k - h*(h-1) + x + 1",
            lambda h, k, p: 3 <= p[0] <= h - 1 and h + 2 <= p[1] <= k - h
            and p != (h - 1, h + 2),
            lambda h, k, p: h * k - h * (h - 1) + p[0] + 1,
            h_min=4,
        ),
        CaseFormula(
            "iii.b", "(x, y) = (h-1, h+2)", "h*k - h*(h-1) + x",
            lambda h, k, p: p == (h - 1, h + 2),
            lambda h, k, p: h * k - h * (h - 1) + p[0],
            h_min=4,
        ),
        CaseFormula(
            "iv", "3 <= x <= h-1, y = k-h+1", "h*k - h*(h-1) + x",
            lambda h, k, p: 3 <= p[0] <= h - 1 and p[1] == k - h + 1,
            lambda h, k, p: h * k - h * (h - 1) + p[0],
            h_min=4,
        ),
        CaseFormula(
            "v", "3 <= x <= h-1, k-h+2 <= y <= k-2", "(h+1)*k - h^2 + x - y + 2",
            lambda h, k, p: 3 <= p[0] <= h - 1 and k - h + 2 <= p[1] <= k - 2,
            lambda h, k, p: (h + 1) * k - h * h + p[0] - p[1] + 2,
            h_min=4,
        ),
        CaseFormula(
            "vi", "x = h, h+3 <= y <= k-h; or h+1 <= x <= k-h-2, y = k-h+1",
            "h*k - h^2 + 2h",
            lambda h, k, p: (p[0] == h and h + 3 <= p[1] <= k - h)
            or (h + 1 <= p[0] <= k - h - 2 and p[1] == k - h + 1),
            lambda h, k, p: h * k - h * h + 2 * h,
        ),
        CaseFormula(
            "vii", "(x, y) = (h, k-h+1)", "h*k - h^2 + 2h - 1",
            lambda h, k, p: p[0] == h and p[1] == k - h + 1,
            lambda h, k, p: h * k - h * h + 2 * h - 1,
        ),
        CaseFormula(
            "viii", "x = h, k-h+2 <= y <= k-2", "(h+1)*k - h*(h-1) - y + 1",
            lambda h, k, p: p[0] == h and k - h + 2 <= p[1] <= k - 2,
            lambda h, k, p: (h + 1) * k - h * (h - 1) - p[1] + 1,
            h_min=4,
        ),
        CaseFormula(
            "ix", "h+1 <= x <= k-h-3, h+4 <= y <= k-h", "h*k - h^2 + 2h + 1",
            lambda h, k, p: h + 1 <= p[0] <= k - h - 3 and h + 4 <= p[1] <= k - h,
            lambda h, k, p: h * k - h * h + 2 * h + 1,
        ),
        CaseFormula(
            "x.a", "h+1 <= x <= k-h-1, k-h+2 <= y <= k-2, (x,y) != (k-h-1,k-h+2)",
            "(h+1)*k - h*(h-1) - y + 2",
            lambda h, k, p: h + 1 <= p[0] <= k - h - 1 and k - h + 2 <= p[1] <= k - 2
            and p != (k - h - 1, k - h + 2),
            lambda h, k, p: (h + 1) * k - h * (h - 1) - p[1] + 2,
            h_min=4,
        ),
        CaseFormula(
            "x.b", "(x, y) = (k-h-1, k-h+2)", "(h+1)*k - h*(h-1) - y + 1",
            lambda h, k, p: p == (k - h - 1, k - h + 2),
            lambda h, k, p: (h + 1) * k - h * (h - 1) - p[1] + 1,
            h_min=4,
        ),
        CaseFormula(
            "xi", "x = k-h, k-h+3 <= y <= k-2", "(h+1)*k - h*(h-1) - y + 1",
            lambda h, k, p: p[0] == k - h and k - h + 3 <= p[1] <= k - 2,
            lambda h, k, p: (h + 1) * k - h * (h - 1) - p[1] + 1,
            h_min=5,
        ),
        CaseFormula(
            "xii", "k-h+1 <= x <= k-5, k-h+4 <= y <= k-2", "(h+2)*k - h^2 - x - y + 2",
            lambda h, k, p: k - h + 1 <= p[0] <= k - 5 and k - h + 4 <= p[1] <= k - 2,
            lambda h, k, p: (h + 2) * k - h * h - p[0] - p[1] + 2,
            h_min=6,
        ),
    )

    def it(h: int, k: int) -> Iterator[Params]:
        for x in range(3, k - 1):
            for y in range(x + 3, k - 1):
                yield (x, y)

    return DeletionFamily(
        id="general-pair", extension=1, shape="[0,k+1] minus {x,y}, y-x>=3",
        param_names=("x", "y"),
        h_min=3, h_max=None, k_min=lambda h: 3 * h + 3, k_min_label="3h+3",
        deleted=lambda k, p: (p[0], p[1]),
        param_iter=it,
        param_check=_pair_check(
            "x, y",
            lambda k, x, y: None
            if (3 <= x <= k - 2 and 3 <= y <= k - 2 and y - x >= 3)
            else f"need 3 <= x, y <= {k - 2} with y - x >= 3, got ({x}, {y})",
        ),
        cases=cases,
        dual="general-pair",
    )


# ---------------------------------------------------------------------------
# run of three: [0,k+2] \ {x, x+1, x+2}


def _triple_run() -> DeletionFamily:
    cases = (
        CaseFormula(
            "i", "1 <= x <= h-1", "h*k - h^2 + 3x + 1",
            lambda h, k, p: 1 <= p[0] <= h - 1,
            lambda h, k, p: h * k - h * h + 3 * p[0] + 1,
        ),
        CaseFormula(
            "ii", "k-h+1 <= x <= k-1", "(h+3)*k - h^2 - 3x + 1",
            lambda h, k, p: k - h + 1 <= p[0] <= k - 1,
            lambda h, k, p: (h + 3) * k - h * h - 3 * p[0] + 1,
        ),
        CaseFormula(
            "iii", "x in {h, k-h}", "h*k - h^2 + 3h - 2",
            lambda h, k, p: p[0] in (h, k - h),
            lambda h, k, p: h * k - h * h + 3 * h - 2,
        ),
        CaseFormula(
            "iv", "x in {h+1, k-h-1}", "3k for h=3; h*k - h^2 + 3h + 1 for h>=4",
            lambda h, k, p: p[0] in (h + 1, k - h - 1),
            lambda h, k, p: 3 * k if h == 3 else h * k - h * h + 3 * h + 1,
        ),
        CaseFormula(
            "v", "h+2 <= x <= k-h-2", "h*k - h^2 + 3h + 1",
            lambda h, k, p: h + 2 <= p[0] <= k - h - 2,
            lambda h, k, p: h * k - h * h + 3 * h + 1,
        ),
    )
    return DeletionFamily(
        id="triple-run", extension=2, shape="[0,k+2] minus {x,x+1,x+2}", param_names=("x",),
        h_min=3, h_max=None, k_min=lambda h: 3 * h + 4, k_min_label="3h+4",
        deleted=lambda k, p: (p[0], p[0] + 1, p[0] + 2),
        param_iter=lambda h, k: ((x,) for x in range(1, k)),
        param_check=_one_param_check("x", lambda k: 1, lambda k: k - 1),
        cases=cases,
    )


# ---------------------------------------------------------------------------
# h=3 triples: [0,k+2] \ {x,x+1,z} and its mirror [0,k+2] \ {x,y,y+1}


def _triple_xx1z_h3() -> DeletionFamily:
    cases = (
        CaseFormula(
            "i", "x = 2, z in {5,6,7,k-1,k}", "3k - 2",
            lambda h, k, p: p[0] == 2 and p[1] in (5, 6, 7, k - 1, k),
            lambda h, k, p: 3 * k - 2,
        ),
        CaseFormula(
            "ii", "x = 2, 8 <= z <= k-2", "3k - 1",
            lambda h, k, p: p[0] == 2 and 8 <= p[1] <= k - 2,
            lambda h, k, p: 3 * k - 1,
        ),
        CaseFormula(
            "iii", "x = 3, z in {k-1, k}", "3k - 2",
            lambda h, k, p: p[0] == 3 and p[1] in (k - 1, k),
            lambda h, k, p: 3 * k - 2,
        ),
        # value forced by the mirror family's case (iv) under (k+2) - A
        CaseFormula(
            "iv", "x = 3, 6 <= z <= k-2", "3k - 1",
            lambda h, k, p: p[0] == 3 and 6 <= p[1] <= k - 2,
            lambda h, k, p: 3 * k - 1,
        ),
        CaseFormula(
            "v", "4 <= x <= k-4, z = k-1", "3k",
            lambda h, k, p: 4 <= p[0] <= k - 4 and p[1] == k - 1,
            lambda h, k, p: 3 * k,
        ),
        CaseFormula(
            "vi", "4 <= x <= k-5, z = k", "3k",
            lambda h, k, p: 4 <= p[0] <= k - 5 and p[1] == k,
            lambda h, k, p: 3 * k,
        ),
        CaseFormula(
            "vii", "x in {k-4, k-3}, z = k", "3k-1 for x=k-4; 3k-2 for x=k-3",
            lambda h, k, p: p[0] in (k - 4, k - 3) and p[1] == k,
            lambda h, k, p: 3 * k - 1 if p[0] == k - 4 else 3 * k - 2,
        ),
        CaseFormula(
            "viii", "4 <= x <= k-5, 7 <= z <= k-2", "3k + 1",
            lambda h, k, p: 4 <= p[0] <= k - 5 and 7 <= p[1] <= k - 2,
            lambda h, k, p: 3 * k + 1,
        ),
    )

    def it(h: int, k: int) -> Iterator[Params]:
        for x in range(2, k - 2):
            for z in range(x + 3, k + 1):
                yield (x, z)

    return DeletionFamily(
        id="triple-xx1z-h3", extension=2, shape="[0,k+2] minus {x,x+1,z}, z-x>=3",
        param_names=("x", "z"),
        h_min=3, h_max=3, k_min=lambda h: 13, k_min_label="13",
        deleted=lambda k, p: (p[0], p[0] + 1, p[1]),
        param_iter=it,
        param_check=_pair_check(
            "x, z",
            lambda k, x, z: None
            if (2 <= x <= k - 3 and 5 <= z <= k and z - x >= 3)
            else f"need 2 <= x <= {k - 3}, 5 <= z <= {k}, z - x >= 3, got ({x}, {z})",
        ),
        cases=cases,
        dual="triple-xyy1-h3",
    )


def _triple_xyy1_h3() -> DeletionFamily:
    cases = (
        CaseFormula(
            "i", "x in {2,3,k-5,k-4,k-3}, y = k-1", "3k - 2",
            lambda h, k, p: p[0] in (2, 3, k - 5, k - 4, k - 3) and p[1] == k - 1,
            lambda h, k, p: 3 * k - 2,
        ),
        CaseFormula(
            "ii", "4 <= x <= k-6, y = k-1", "3k - 1",
            lambda h, k, p: 4 <= p[0] <= k - 6 and p[1] == k - 1,
            lambda h, k, p: 3 * k - 1,
        ),
        CaseFormula(
            "iii", "x in {2, 3}, y = k-2", "3k - 2",
            lambda h, k, p: p[0] in (2, 3) and p[1] == k - 2,
            lambda h, k, p: 3 * k - 2,
        ),
        CaseFormula(
            "iv", "4 <= x <= k-4, y = k-2", "3k - 1",
            lambda h, k, p: 4 <= p[0] <= k - 4 and p[1] == k - 2,
            lambda h, k, p: 3 * k - 1,
        ),
        CaseFormula(
            "v", "x = 3, 5 <= y <= k-3", "3k",
            lambda h, k, p: p[0] == 3 and 5 <= p[1] <= k - 3,
            lambda h, k, p: 3 * k,
        ),
        CaseFormula(
            "vi", "x = 2, 6 <= y <= k-3", "3k",
            lambda h, k, p: p[0] == 2 and 6 <= p[1] <= k - 3,
            lambda h, k, p: 3 * k,
        ),
        CaseFormula(
            "vii", "x = 2, y in {4, 5}", "3k-1 for y=5; 3k-2 for y=4",
            lambda h, k, p: p[0] == 2 and p[1] in (4, 5),
            lambda h, k, p: 3 * k - 1 if p[1] == 5 else 3 * k - 2,
        ),
        CaseFormula(
            "viii", "4 <= x <= k-5, 6 <= y <= k-3", "3k + 1",
            lambda h, k, p: 4 <= p[0] <= k - 5 and 6 <= p[1] <= k - 3,
            lambda h, k, p: 3 * k + 1,
        ),
    )

    def it(h: int, k: int) -> Iterator[Params]:
        for x in range(2, k - 2):
            for y in range(x + 2, k):
                yield (x, y)

    return DeletionFamily(
        id="triple-xyy1-h3", extension=2, shape="[0,k+2] minus {x,y,y+1}, y-x>=2",
        param_names=("x", "y"),
        h_min=3, h_max=3, k_min=lambda h: 13, k_min_label="13",
        deleted=lambda k, p: (p[0], p[1], p[1] + 1),
        param_iter=it,
        param_check=_pair_check(
            "x, y",
            lambda k, x, y: None
            if (2 <= x <= k - 3 and 4 <= y <= k - 1 and y - x >= 2)
            else f"need 2 <= x <= {k - 3}, 4 <= y <= {k - 1}, y - x >= 2, got ({x}, {y})",
        ),
        cases=cases,
        dual="triple-xx1z-h3",
    )


# ---------------------------------------------------------------------------
# h=3 general triple: [0,k+2] \ {x,y,z}, gaps >= 2 on both sides.
# Two groups of cases with different k-thresholds (13 direct, 11 mirrored).


def _general_triple_h3() -> DeletionFamily:
    k13 = (lambda h: 13, "13")
    k11 = (lambda h: 11, "11")

    def a_i(k):
        return {(2, 4, 6), (2, 4, k - 1), (2, 4, k), (2, 5, k - 1), (2, 5, k)}

    def b_i(k):
        return {(k - 4, k - 2, k), (3, k - 2, k), (2, k - 2, k), (2, k - 3, k), (3, k - 3, k)}

    cases = (
        CaseFormula(
            "A-i", "{x,y,z} in {{2,4,6},{2,4,k-1},{2,4,k},{2,5,k-1},{2,5,k}}", "3k - 2",
            lambda h, k, p: p in a_i(k), lambda h, k, p: 3 * k - 2,
            k_min=k13[0], k_min_label=k13[1],
        ),
        CaseFormula(
            "A-ii",
            "{2,4,t} or {2,5,t} with 7<=t<=k-2; {2,s,k-1} with 6<=s<=k-3; "
            "{2,s,k} with 6<=s<=k-4; {3,s,k-1} with 5<=s<=k-3",
            "3k - 1",
            lambda h, k, p: (p[0] == 2 and p[1] in (4, 5) and 7 <= p[2] <= k - 2)
            or (p[0] == 2 and 6 <= p[1] <= k - 3 and p[2] == k - 1)
            or (p[0] == 2 and 6 <= p[1] <= k - 4 and p[2] == k)
            or (p[0] == 3 and 5 <= p[1] <= k - 3 and p[2] == k - 1),
            lambda h, k, p: 3 * k - 1,
            k_min=k13[0], k_min_label=k13[1],
        ),
        CaseFormula(
            "A-iii",
            "{r,s,k} with 4<=r<s-1, s<=k-4; {3,s,t} with 5<=s<t-1, t<=k-2",
            "3k",
            lambda h, k, p: (4 <= p[0] and p[0] + 2 <= p[1] <= k - 4 and p[2] == k)
            or (p[0] == 3 and 5 <= p[1] and p[1] + 2 <= p[2] <= k - 2),
            lambda h, k, p: 3 * k,
            k_min=k13[0], k_min_label=k13[1],
        ),
        CaseFormula(
            "A-iv", "4 <= r < s < t <= k-2 with s-r>=2, t-s>=2", "3k + 1",
            lambda h, k, p: 4 <= p[0] and p[0] + 2 <= p[1] and p[1] + 2 <= p[2] <= k - 2,
            lambda h, k, p: 3 * k + 1,
            k_min=k13[0], k_min_label=k13[1],
        ),
        CaseFormula(
            "B-i", "{x,y,z} in {{k-4,k-2,k},{3,k-2,k},{2,k-2,k},{2,k-3,k},{3,k-3,k}}", "3k - 2",
            lambda h, k, p: p in b_i(k), lambda h, k, p: 3 * k - 2,
            k_min=k11[0], k_min_label=k11[1],
        ),
        CaseFormula(
            "B-ii",
            "{r,k-2,k} or {r,k-3,k} with 4<=r<=k-5; {3,s,k} with 5<=s<=k-4",
            "3k - 1",
            lambda h, k, p: (4 <= p[0] <= k - 5 and p[1] in (k - 3, k - 2) and p[2] == k)
            or (p[0] == 3 and 5 <= p[1] <= k - 4 and p[2] == k),
            lambda h, k, p: 3 * k - 1,
            k_min=k11[0], k_min_label=k11[1],
        ),
        CaseFormula(
            "B-iii",
            "{2,s,t} with 6<=s<t-1, t<=k-2; {r,s,k-1} with 4<=r<s-1, s<=k-3",
            "3k",
            lambda h, k, p: (p[0] == 2 and 6 <= p[1] and p[1] + 2 <= p[2] <= k - 2)
            or (4 <= p[0] and p[0] + 2 <= p[1] <= k - 3 and p[2] == k - 1),
            lambda h, k, p: 3 * k,
            k_min=k11[0], k_min_label=k11[1],
        ),
    )

    def it(h: int, k: int) -> Iterator[Params]:
        for x in range(2, k + 1):
            for y in range(x + 2, k + 1):
                for z in range(y + 2, k + 1):
                    yield (x, y, z)

    return DeletionFamily(
        id="general-triple-h3", extension=2,
        shape="[0,k+2] minus {x,y,z}, 2<=x, z<=k, y-x>=2, z-y>=2",
        param_names=("x", "y", "z"),
        h_min=3, h_max=3, k_min=lambda h: 11, k_min_label="11 (13 for the A-cases)",
        deleted=lambda k, p: p,
        param_iter=it,
        param_check=_triple_check(
            "x, y, z",
            lambda k, x, y, z: None
            if (2 <= x and y - x >= 2 and z - y >= 2 and z <= k)
            else f"need 2 <= x < y < z <= {k} with gaps >= 2, got ({x}, {y}, {z})",
        ),
        cases=cases,
        dual="general-triple-h3",
    )


# ---------------------------------------------------------------------------
# h=3 triples containing 1 or k+1: [0,k+2] \ {1,y,z} and [0,k+2] \ {x,y,k+1}


def _triple_1yz_h3() -> DeletionFamily:
    def iii_fixed(k):
        return {
            (3, 4), (3, 5), (3, 6), (3, k - 1), (3, k), (4, 5), (4, k - 1), (4, k),
            (k - 1, k), (k - 2, k - 1), (k - 3, k), (k - 2, k),
        }

    cases = (
        CaseFormula(
            "i", "{y,z} = {2, k+1}", "3k - 5",
            lambda h, k, p: p == (2, k + 1), lambda h, k, p: 3 * k - 5,
        ),
        CaseFormula(
            "ii", "{y,z} in {{2,4},{2,5},{2,k-1},{2,k},{3,k+1},{4,k+1}}", "3k - 4",
            lambda h, k, p: p in {(2, 4), (2, 5), (2, k - 1), (2, k), (3, k + 1), (4, k + 1)},
            lambda h, k, p: 3 * k - 4,
        ),
        CaseFormula(
            "iii",
            "12 fixed pairs; {2,t} with 6<=t<=k-2; {s,k+1} with 5<=s<=k-3",
            "3k - 3",
            lambda h, k, p: p in iii_fixed(k)
            or (p[0] == 2 and 6 <= p[1] <= k - 2)
            or (5 <= p[0] <= k - 3 and p[1] == k + 1),
            lambda h, k, p: 3 * k - 3,
        ),
        CaseFormula(
            "iv",
            "{5,6}; {3,t} with 7<=t<=k-2; {4,t} with 6<=t<=k-2; "
            "{s,k-1} with 5<=s<=k-3; {s,k} with 5<=s<=k-4",
            "3k - 2",
            lambda h, k, p: p == (5, 6)
            or (p[0] == 3 and 7 <= p[1] <= k - 2)
            or (p[0] == 4 and 6 <= p[1] <= k - 2)
            or (5 <= p[0] <= k - 3 and p[1] == k - 1)
            or (5 <= p[0] <= k - 4 and p[1] == k),
            lambda h, k, p: 3 * k - 2,
        ),
        CaseFormula(
            "v",
            "{s,s+1} with 6<=s<=k-3; {s,t} with 5<=s<t-1, t<=k-2",
            "3k - 1",
            lambda h, k, p: (6 <= p[0] <= k - 3 and p[1] == p[0] + 1)
            or (5 <= p[0] and p[0] + 2 <= p[1] <= k - 2),
            lambda h, k, p: 3 * k - 1,
        ),
    )

    def it(h: int, k: int) -> Iterator[Params]:
        for y in range(2, k + 1):
            for z in range(y + 1, k + 2):
                yield (y, z)

    return DeletionFamily(
        id="triple-1yz-h3", extension=2, shape="[0,k+2] minus {1,y,z}", param_names=("y", "z"),
        h_min=3, h_max=3, k_min=lambda h: 13, k_min_label="13",
        deleted=lambda k, p: (1, p[0], p[1]),
        param_iter=it,
        param_check=_pair_check(
            "y, z",
            lambda k, y, z: None
            if (2 <= y < z <= k + 1)
            else f"need 2 <= y < z <= {k + 1}, got ({y}, {z})",
        ),
        cases=cases,
        dual="triple-xy-kp1-h3",
    )


def _triple_xy_kp1_h3() -> DeletionFamily:
    def iii_fixed(k):
        return {
            (k - 2, k - 1), (k - 3, k - 1), (k - 4, k - 1), (3, k - 1), (2, k - 1),
            (k - 3, k - 2), (3, k - 2), (2, k - 2), (2, 3), (3, 4), (2, 5), (2, 4),
        }

    cases = (
        CaseFormula(
            "i", "{x,y} = {1, k}", "3k - 5",
            lambda h, k, p: p == (1, k), lambda h, k, p: 3 * k - 5,
        ),
        CaseFormula(
            "ii", "{x,y} in {{k-2,k},{k-3,k},{3,k},{2,k},{1,k-1},{1,k-2}}", "3k - 4",
            lambda h, k, p: p in {(k - 2, k), (k - 3, k), (3, k), (2, k), (1, k - 1), (1, k - 2)},
            lambda h, k, p: 3 * k - 4,
        ),
        CaseFormula(
            "iii",
            "12 fixed pairs; {r,k} with 4<=r<=k-4; {1,s} with 5<=s<=k-3",
            "3k - 3",
            lambda h, k, p: p in iii_fixed(k)
            or (4 <= p[0] <= k - 4 and p[1] == k)
            or (p[0] == 1 and 5 <= p[1] <= k - 3),
            lambda h, k, p: 3 * k - 3,
        ),
        CaseFormula(
            "iv",
            "{k-4,k-3}; {r,k-1} with 4<=r<=k-5; {r,k-2} with 4<=r<=k-4; "
            "{3,s} with 5<=s<=k-3; {2,s} with 6<=s<=k-3",
            "3k - 2",
            lambda h, k, p: p == (k - 4, k - 3)
            or (4 <= p[0] <= k - 5 and p[1] == k - 1)
            or (4 <= p[0] <= k - 4 and p[1] == k - 2)
            or (p[0] == 3 and 5 <= p[1] <= k - 3)
            or (p[0] == 2 and 6 <= p[1] <= k - 3),
            lambda h, k, p: 3 * k - 2,
        ),
        CaseFormula(
            "v",
            "{r,r+1} with 4<=r<=k-5; {r,s} with 4<=r<s-1, s<=k-3",
            "3k - 1",
            lambda h, k, p: (4 <= p[0] <= k - 5 and p[1] == p[0] + 1)
            or (4 <= p[0] and p[0] + 2 <= p[1] <= k - 3),
            lambda h, k, p: 3 * k - 1,
        ),
    )

    def it(h: int, k: int) -> Iterator[Params]:
        for x in range(1, k):
            for y in range(x + 1, k + 1):
                yield (x, y)

    return DeletionFamily(
        id="triple-xy-kp1-h3", extension=2, shape="[0,k+2] minus {x,y,k+1}", param_names=("x", "y"),
        h_min=3, h_max=3, k_min=lambda h: 11, k_min_label="11",
        deleted=lambda k, p: (p[0], p[1], k + 1),
        param_iter=it,
        param_check=_pair_check(
            "x, y",
            lambda k, x, y: None
            if (1 <= x < y <= k)
            else f"need 1 <= x < y <= {k}, got ({x}, {y})",
        ),
        cases=cases,
        dual="triple-1yz-h3",
    )


# ---------------------------------------------------------------------------
# h>=4 triples with a forced endpoint: [0,k+2] \ {x,x+1,k+1} and [0,k+2] \ {1,y,y+1}


def _triple_xx1_kp1() -> DeletionFamily:
    cases = (
        CaseFormula(
            "i", "1 <= x <= h-1", "h*k - h^2 + 2x + 2",
            lambda h, k, p: 1 <= p[0] <= h - 1,
            lambda h, k, p: h * k - h * h + 2 * p[0] + 2,
        ),
        CaseFormula(
            "ii", "x in {h, k-h}", "h*k - h^2 + 2h",
            lambda h, k, p: p[0] in (h, k - h),
            lambda h, k, p: h * k - h * h + 2 * h,
        ),
        CaseFormula(
            "iii", "h+1 <= x <= k-h-1", "h*k - h^2 + 2h + 2",
            lambda h, k, p: h + 1 <= p[0] <= k - h - 1,
            lambda h, k, p: h * k - h * h + 2 * h + 2,
        ),
        CaseFormula(
            "iv", "k-h+1 <= x <= k-1", "(h+2)*k - h^2 - 2x + 2",
            lambda h, k, p: k - h + 1 <= p[0] <= k - 1,
            lambda h, k, p: (h + 2) * k - h * h - 2 * p[0] + 2,
        ),
    )
    return DeletionFamily(
        id="triple-xx1-kp1", extension=2, shape="[0,k+2] minus {x,x+1,k+1}", param_names=("x",),
        h_min=4, h_max=None, k_min=lambda h: 3 * h + 4, k_min_label="3h+4",
        deleted=lambda k, p: (p[0], p[0] + 1, k + 1),
        param_iter=lambda h, k: ((x,) for x in range(1, k)),
        param_check=_one_param_check("x", lambda k: 1, lambda k: k - 1),
        cases=cases,
        dual="triple-1yy1",
    )


def _triple_1yy1() -> DeletionFamily:
    cases = (
        # value forced by the reflection onto triple-xx1-kp1 case (i)
        CaseFormula(
            "i", "k-h+2 <= y <= k", "h*k - h^2 + 2(k+1-y) + 2",
            lambda h, k, p: k - h + 2 <= p[0] <= k,
            lambda h, k, p: h * k - h * h + 2 * (k + 1 - p[0]) + 2,
        ),
        CaseFormula(
            "ii", "y in {h+1, k-h+1}", "h*k - h^2 + 2h",
            lambda h, k, p: p[0] in (h + 1, k - h + 1),
            lambda h, k, p: h * k - h * h + 2 * h,
        ),
        CaseFormula(
            "iii", "h+2 <= y <= k-h", "h*k - h^2 + 2h + 2",
            lambda h, k, p: h + 2 <= p[0] <= k - h,
            lambda h, k, p: h * k - h * h + 2 * h + 2,
        ),
        CaseFormula(
            "iv", "2 <= y <= h", "h*k - h^2 + 2y",
            lambda h, k, p: 2 <= p[0] <= h,
            lambda h, k, p: h * k - h * h + 2 * p[0],
        ),
    )
    return DeletionFamily(
        id="triple-1yy1", extension=2, shape="[0,k+2] minus {1,y,y+1}", param_names=("y",),
        h_min=4, h_max=None, k_min=lambda h: 3 * h + 2, k_min_label="3h+2",
        deleted=lambda k, p: (1, p[0], p[0] + 1),
        param_iter=lambda h, k: ((y,) for y in range(2, k + 1)),
        param_check=_one_param_check("y", lambda k: 2, lambda k: k),
        cases=cases,
        dual="triple-xx1-kp1",
    )


# ---------------------------------------------------------------------------
# h>=4 triple {x, x+1, z}: [0,k+2] \ {x,x+1,z}, z - x >= 3


def _triple_xx1z_h4() -> DeletionFamily:
    cases = (
        CaseFormula(
            "i", "2 <= x <= h-2, 5 <= z <= h+1", "h*k - h^2 + 2x + z - 1",
            lambda h, k, p: 2 <= p[0] <= h - 2 and 5 <= p[1] <= h + 1,
            lambda h, k, p: h * k - h * h + 2 * p[0] + p[1] - 1,
        ),
        CaseFormula(
            "ii.a", "2 <= x <= h-1, z = h+2", "h*k - h*(h-1) + 2x",
            lambda h, k, p: 2 <= p[0] <= h - 1 and p[1] == h + 2,
            lambda h, k, p: h * k - h * (h - 1) + 2 * p[0],
        ),
        CaseFormula(
            "ii.b", "2 <= x <= h-2, h+3 <= z <= k-h+1", "h*k - h*(h-1) + 2x + 1",
            lambda h, k, p: 2 <= p[0] <= h - 2 and h + 3 <= p[1] <= k - h + 1,
            lambda h, k, p: h * k - h * (h - 1) + 2 * p[0] + 1,
        ),
        CaseFormula(
            "ii.c", "x = h-1, z in {h+3, h+4}", "h*k - h*(h-3) - 2",
            lambda h, k, p: p[0] == h - 1 and p[1] in (h + 3, h + 4),
            lambda h, k, p: h * k - h * (h - 3) - 2,
        ),
        CaseFormula(
            "ii.d", "x = h-1, h+5 <= z <= k-h+1", "h*k - h*(h-3) - 1",
            lambda h, k, p: p[0] == h - 1 and h + 5 <= p[1] <= k - h + 1,
            lambda h, k, p: h * k - h * (h - 3) - 1,
        ),
        CaseFormula(
            "iii", "x = h, h+3 <= z <= k-h+1", "h*k - h*(h-3) - 1",
            lambda h, k, p: p[0] == h and h + 3 <= p[1] <= k - h + 1,
            lambda h, k, p: h * k - h * (h - 3) - 1,
        ),
        CaseFormula(
            "iv.a", "2 <= x <= h-1, z = k-h+2", "h*k - h*(h-1) + 2x",
            lambda h, k, p: 2 <= p[0] <= h - 1 and p[1] == k - h + 2,
            lambda h, k, p: h * k - h * (h - 1) + 2 * p[0],
        ),
        CaseFormula(
            "iv.b", "x = h, z = k-h+2", "h*k - h*(h-3) - 2",
            lambda h, k, p: p[0] == h and p[1] == k - h + 2,
            lambda h, k, p: h * k - h * (h - 3) - 2,
        ),
        CaseFormula(
            "v.a", "2 <= x <= h-1, k-h+3 <= z <= k", "(h+1)*k - h^2 + 2x - z + 3",
            lambda h, k, p: 2 <= p[0] <= h - 1 and k - h + 3 <= p[1] <= k,
            lambda h, k, p: (h + 1) * k - h * h + 2 * p[0] - p[1] + 3,
        ),
        CaseFormula(
            "v.b", "x = h, k-h+3 <= z <= k", "(h+1)*k - h*(h-2) - z + 1",
            lambda h, k, p: p[0] == h and k - h + 3 <= p[1] <= k,
            lambda h, k, p: (h + 1) * k - h * (h - 2) - p[1] + 1,
        ),
        CaseFormula(
            "vi.a", "h+1 <= x <= k-h-1, h+4 <= z <= k-h+1", "h*k - h*(h-3) + 1",
            lambda h, k, p: h + 1 <= p[0] <= k - h - 1 and h + 4 <= p[1] <= k - h + 1,
            lambda h, k, p: h * k - h * (h - 3) + 1,
        ),
        CaseFormula(
            "vi.b", "h+1 <= x <= k-h-1, z = k-h+2", "h*k - h*(h-3)",
            lambda h, k, p: h + 1 <= p[0] <= k - h - 1 and p[1] == k - h + 2,
            lambda h, k, p: h * k - h * (h - 3),
        ),
        CaseFormula(
            "vii.a",
            "h+1 <= x <= k-h-1, k-h+3 <= z <= k, not (x = k-h-1, z <= k-h+4)",
            "(h+1)*k - h*(h-2) - z + 3",
            lambda h, k, p: h + 1 <= p[0] <= k - h - 1 and k - h + 3 <= p[1] <= k
            and not (p[0] == k - h - 1 and p[1] in (k - h + 3, k - h + 4)),
            lambda h, k, p: (h + 1) * k - h * (h - 2) - p[1] + 3,
        ),
        CaseFormula(
            "vii.b", "x = k-h, k-h+3 <= z <= k", "(h+1)*k - h*(h-2) - z + 1",
            lambda h, k, p: p[0] == k - h and k - h + 3 <= p[1] <= k,
            lambda h, k, p: (h + 1) * k - h * (h - 2) - p[1] + 1,
        ),
        # mirror corner of case (ii.c)
        CaseFormula(
            "vii.c", "x = k-h-1, z in {k-h+3, k-h+4}", "(h+1)*k - h*(h-2) - z + 2",
            lambda h, k, p: p[0] == k - h - 1 and p[1] in (k - h + 3, k - h + 4),
            lambda h, k, p: (h + 1) * k - h * (h - 2) - p[1] + 2,
        ),
        CaseFormula(
            "viii", "k-h+1 <= x <= k-3, k-h+4 <= z <= k", "(h+3)*k - h^2 - 2x - z + 3",
            lambda h, k, p: k - h + 1 <= p[0] <= k - 3 and k - h + 4 <= p[1] <= k,
            lambda h, k, p: (h + 3) * k - h * h - 2 * p[0] - p[1] + 3,
        ),
    )

    def it(h: int, k: int) -> Iterator[Params]:
        for x in range(2, k - 2):
            for z in range(x + 3, k + 1):
                yield (x, z)

    return DeletionFamily(
        id="triple-xx1z", extension=2, shape="[0,k+2] minus {x,x+1,z}, z-x>=3",
        param_names=("x", "z"),
        h_min=4, h_max=None, k_min=lambda h: 3 * h + 4, k_min_label="3h+4",
        deleted=lambda k, p: (p[0], p[0] + 1, p[1]),
        param_iter=it,
        param_check=_pair_check(
            "x, z",
            lambda k, x, z: None
            if (2 <= x < z <= k and z - x >= 3)
            else f"need 2 <= x < z <= {k} with z - x >= 3, got ({x}, {z})",
        ),
        cases=cases,
        dual="triple-xyy1",
    )


# ---------------------------------------------------------------------------
# h>=4 triple {x, y, y+1}: mirror of triple-xx1z under (k+2) - A.
# Case (ii) boundaries follow the reflection of the partner family's split.


def _triple_xyy1_h4() -> DeletionFamily:
    cases = (
        CaseFormula(
            "i", "k-h+1 <= x <= k-3, k-h+3 <= y <= k-1", "(h+3)*k - h^2 - x - 2y + 3",
            lambda h, k, p: k - h + 1 <= p[0] <= k - 3 and k - h + 3 <= p[1] <= k - 1,
            lambda h, k, p: (h + 3) * k - h * h - p[0] - 2 * p[1] + 3,
        ),
        CaseFormula(
            "ii.a", "x = k-h, k-h+2 <= y <= k-1", "(h+2)*k - h*(h-1) - 2y + 2",
            lambda h, k, p: p[0] == k - h and k - h + 2 <= p[1] <= k - 1,
            lambda h, k, p: (h + 2) * k - h * (h - 1) - 2 * p[1] + 2,
        ),
        CaseFormula(
            "ii.b", "h+1 <= x <= k-h-1, k-h+3 <= y <= k-1", "(h+2)*k - h*(h-1) - 2y + 3",
            lambda h, k, p: h + 1 <= p[0] <= k - h - 1 and k - h + 3 <= p[1] <= k - 1,
            lambda h, k, p: (h + 2) * k - h * (h - 1) - 2 * p[1] + 3,
        ),
        CaseFormula(
            "ii.c", "x in {k-h-2, k-h-1}, y = k-h+2", "h*k - h*(h-3) - 2",
            lambda h, k, p: p[0] in (k - h - 2, k - h - 1) and p[1] == k - h + 2,
            lambda h, k, p: h * k - h * (h - 3) - 2,
        ),
        CaseFormula(
            "ii.d", "h+1 <= x <= k-h-3, y = k-h+2", "h*k - h*(h-3) - 1",
            lambda h, k, p: h + 1 <= p[0] <= k - h - 3 and p[1] == k - h + 2,
            lambda h, k, p: h * k - h * (h - 3) - 1,
        ),
        CaseFormula(
            "iii", "h+1 <= x <= k-h-1, y = k-h+1", "h*k - h*(h-3) - 1",
            lambda h, k, p: h + 1 <= p[0] <= k - h - 1 and p[1] == k - h + 1,
            lambda h, k, p: h * k - h * (h - 3) - 1,
        ),
        CaseFormula(
            "iv.a", "x = h, k-h+2 <= y <= k-1", "(h+2)*k - h*(h-1) - 2y + 2",
            lambda h, k, p: p[0] == h and k - h + 2 <= p[1] <= k - 1,
            lambda h, k, p: (h + 2) * k - h * (h - 1) - 2 * p[1] + 2,
        ),
        CaseFormula(
            "iv.b", "x = h, y = k-h+1", "h*k - h*(h-3) - 2",
            lambda h, k, p: p[0] == h and p[1] == k - h + 1,
            lambda h, k, p: h * k - h * (h - 3) - 2,
        ),
        CaseFormula(
            "v.a", "2 <= x <= h-1, k-h+2 <= y <= k-1", "(h+2)*k - h^2 + x - 2y + 3",
            lambda h, k, p: 2 <= p[0] <= h - 1 and k - h + 2 <= p[1] <= k - 1,
            lambda h, k, p: (h + 2) * k - h * h + p[0] - 2 * p[1] + 3,
        ),
        CaseFormula(
            "v.b", "2 <= x <= h-1, y = k-h+1", "h*k - h*(h-2) + x - 1",
            lambda h, k, p: 2 <= p[0] <= h - 1 and p[1] == k - h + 1,
            lambda h, k, p: h * k - h * (h - 2) + p[0] - 1,
        ),
        CaseFormula(
            "vi.a", "h+1 <= x <= k-h-2, h+2 <= y <= k-h", "h*k - h*(h-3) + 1",
            lambda h, k, p: h + 1 <= p[0] <= k - h - 2 and h + 2 <= p[1] <= k - h,
            lambda h, k, p: h * k - h * (h - 3) + 1,
        ),
        CaseFormula(
            "vi.b", "x = h, h+2 <= y <= k-h", "h*k - h*(h-3)",
            lambda h, k, p: p[0] == h and h + 2 <= p[1] <= k - h,
            lambda h, k, p: h * k - h * (h - 3),
        ),
        CaseFormula(
            "vii.a", "2 <= x <= h-1, h+2 <= y <= k-h, not (x >= h-2, y = h+2)",
            "h*k - h*(h-2) + x + 1",
            lambda h, k, p: 2 <= p[0] <= h - 1 and h + 2 <= p[1] <= k - h
            and not (p[0] in (h - 2, h - 1) and p[1] == h + 2),
            lambda h, k, p: h * k - h * (h - 2) + p[0] + 1,
        ),
        CaseFormula(
            "vii.b", "2 <= x <= h-1, y = h+1", "h*k - h*(h-2) + x - 1",
            lambda h, k, p: 2 <= p[0] <= h - 1 and p[1] == h + 1,
            lambda h, k, p: h * k - h * (h - 2) + p[0] - 1,
        ),
        # mirror corner of the partner family's case (ii.c)
        CaseFormula(
            "vii.c", "x in {h-2, h-1}, y = h+2", "h*k - h*(h-2) + x",
            lambda h, k, p: p[0] in (h - 2, h - 1) and p[1] == h + 2,
            lambda h, k, p: h * k - h * (h - 2) + p[0],
        ),
        CaseFormula(
            "viii", "2 <= x <= h-2, 4 <= y <= h", "h*k - h^2 + x + 2y - 1",
            lambda h, k, p: 2 <= p[0] <= h - 2 and 4 <= p[1] <= h,
            lambda h, k, p: h * k - h * h + p[0] + 2 * p[1] - 1,
        ),
    )

    def it(h: int, k: int) -> Iterator[Params]:
        for x in range(2, k - 2):
            for y in range(x + 2, k):
                yield (x, y)

    return DeletionFamily(
        id="triple-xyy1", extension=2, shape="[0,k+2] minus {x,y,y+1}, y-x>=2",
        param_names=("x", "y"),
        h_min=4, h_max=None, k_min=lambda h: 3 * h + 4, k_min_label="3h+4",
        deleted=lambda k, p: (p[0], p[1], p[1] + 1),
        param_iter=it,
        param_check=_pair_check(
            "x, y",
            lambda k, x, y: None
            if (2 <= x < y <= k - 1 and y - x >= 2)
            else f"need 2 <= x < y <= {k - 1} with y - x >= 2, got ({x}, {y})",
        ),
        cases=cases,
        dual="triple-xx1z",
    )


# ---------------------------------------------------------------------------
# h>=4 general triple: [0,k+2] \ {x,y,z}, gaps >= 2 on both sides


def _general_triple_h4() -> DeletionFamily:
    cases = (
        CaseFormula(
            "i", "2 <= x < y < z <= h+1", "h*k - h^2 + x + y + z - 2",
            lambda h, k, p: 2 <= p[0] and p[2] <= h + 1,
            lambda h, k, p: h * k - h * h + p[0] + p[1] + p[2] - 2,
        ),
        CaseFormula(
            "ii", "k-h+1 <= x < y < z <= k", "(h+3)*k - h^2 - (x+y+z) + 4",
            lambda h, k, p: k - h + 1 <= p[0] and p[2] <= k,
            lambda h, k, p: (h + 3) * k - h * h - (p[0] + p[1] + p[2]) + 4,
        ),
        # the y = h+1 edge of the printed (iii) belongs to (vi.b)
        CaseFormula(
            "iii.a", "2 <= x <= h-2, 4 <= y <= h, k-h+3 <= z <= k",
            "(h+1)*k - h^2 + x + y - z + 2",
            lambda h, k, p: 2 <= p[0] <= h - 2 and 4 <= p[1] <= h and k - h + 3 <= p[2] <= k,
            lambda h, k, p: (h + 1) * k - h * h + p[0] + p[1] - p[2] + 2,
        ),
        CaseFormula(
            "iii.b", "x = h-1, y = h+1, k-h+3 <= z <= k", "(h+1)*k - h*(h-2) - z + 1",
            lambda h, k, p: p[0] == h - 1 and p[1] == h + 1 and k - h + 3 <= p[2] <= k,
            lambda h, k, p: (h + 1) * k - h * (h - 2) - p[2] + 1,
        ),
        CaseFormula(
            "iv.a",
            "2 <= x <= h-2, 4 <= y <= h, h+3 <= z <= k-h+1, not (y = h, z = h+3)",
            "h*k - h*(h-1) + x + y",
            lambda h, k, p: 2 <= p[0] <= h - 2 and 4 <= p[1] <= h
            and h + 3 <= p[2] <= k - h + 1 and not (p[1] == h and p[2] == h + 3),
            lambda h, k, p: h * k - h * (h - 1) + p[0] + p[1],
        ),
        CaseFormula(
            "iv.b", "2 <= x <= h-2, 4 <= y <= h, z = k-h+2", "h*k - h*(h-1) + x + y - 1",
            lambda h, k, p: 2 <= p[0] <= h - 2 and 4 <= p[1] <= h and p[2] == k - h + 2,
            lambda h, k, p: h * k - h * (h - 1) + p[0] + p[1] - 1,
        ),
        # mirror edge of case (xii.a): the deletion next above z = h+1 costs one more
        CaseFormula(
            "iv.c", "2 <= x <= h-2, 4 <= y <= h, z = h+2 or (y, z) = (h, h+3)",
            "h*k - h*(h-1) + x + y - 1",
            lambda h, k, p: 2 <= p[0] <= h - 2 and 4 <= p[1] <= h
            and (p[2] == h + 2 or (p[1] == h and p[2] == h + 3)),
            lambda h, k, p: h * k - h * (h - 1) + p[0] + p[1] - 1,
        ),
        CaseFormula(
            "v", "2 <= x <= h-1, k-h+2 <= y <= k-2, k-h+4 <= z <= k",
            "(h+2)*k - h^2 + x - y - z + 4",
            lambda h, k, p: 2 <= p[0] <= h - 1
            and k - h + 2 <= p[1] <= k - 2
            and k - h + 4 <= p[2] <= k,
            lambda h, k, p: (h + 2) * k - h * h + p[0] - p[1] - p[2] + 4,
        ),
        CaseFormula(
            "vi.a",
            "2 <= x <= h-1, h+2 <= y <= k-h, k-h+3 <= z <= k, "
            "not (y = k-h, z = k-h+3) and not (x = h-1, y = h+2)",
            "(h+1)*k - h*(h-1) + x - z + 3",
            lambda h, k, p: 2 <= p[0] <= h - 1
            and h + 2 <= p[1] <= k - h
            and k - h + 3 <= p[2] <= k
            and not (p[1] == k - h and p[2] == k - h + 3)
            and not (p[0] == h - 1 and p[1] == h + 2),
            lambda h, k, p: (h + 1) * k - h * (h - 1) + p[0] - p[2] + 3,
        ),
        CaseFormula(
            "vi.c",
            "2 <= x <= h-1, k-h+3 <= z <= k, (y, z) = (k-h, k-h+3) or (x, y) = (h-1, h+2)",
            "(h+1)*k - h*(h-1) + x - z + 2",
            lambda h, k, p: 2 <= p[0] <= h - 1
            and k - h + 3 <= p[2] <= k
            and (
                (p[1] == k - h and p[2] == k - h + 3)
                or (p[0] == h - 1 and p[1] == h + 2)
            ),
            lambda h, k, p: (h + 1) * k - h * (h - 1) + p[0] - p[2] + 2,
        ),
        CaseFormula(
            "vi.b", "2 <= x <= h-1, y in {h+1, k-h+1}, k-h+3 <= z <= k",
            "(h+1)*k - h*(h-1) + x - z + 2",
            lambda h, k, p: 2 <= p[0] <= h - 1
            and p[1] in (h + 1, k - h + 1)
            and k - h + 3 <= p[2] <= k,
            lambda h, k, p: (h + 1) * k - h * (h - 1) + p[0] - p[2] + 2,
        ),
        CaseFormula(
            "vii.a", "2 <= x <= h-1, y = h+1, z = k-h+2", "h*k - h*(h-2) + x - 1",
            lambda h, k, p: 2 <= p[0] <= h - 1 and p[1] == h + 1 and p[2] == k - h + 2,
            lambda h, k, p: h * k - h * (h - 2) + p[0] - 1,
        ),
        CaseFormula(
            "vii.b",
            "2 <= x <= h-1, h+2 <= y <= k-h, z = k-h+2, (x,y) != (h-1,h+2)",
            "h*k - h*(h-2) + x",
            lambda h, k, p: 2 <= p[0] <= h - 1 and h + 2 <= p[1] <= k - h
            and p[2] == k - h + 2 and not (p[0] == h - 1 and p[1] == h + 2),
            lambda h, k, p: h * k - h * (h - 2) + p[0],
        ),
        CaseFormula(
            "vii.c", "(x,y,z) = (h-1, h+2, k-h+2)", "h*k - h*(h-2) + x - 1",
            lambda h, k, p: p == (h - 1, h + 2, k - h + 2),
            lambda h, k, p: h * k - h * (h - 2) + p[0] - 1,
        ),
        CaseFormula(
            "viii.a", "(x,y,z) = (h-1, h+1, h+3)", "h*k - h*(h-3) - 2",
            lambda h, k, p: p == (h - 1, h + 1, h + 3),
            lambda h, k, p: h * k - h * (h - 3) - 2,
        ),
        CaseFormula(
            "viii.c", "2 <= x <= h-1, y = h+1, h+4 <= z <= k-h+1", "h*k - h*(h-2) + x",
            lambda h, k, p: 2 <= p[0] <= h - 1 and p[1] == h + 1 and h + 4 <= p[2] <= k - h + 1,
            lambda h, k, p: h * k - h * (h - 2) + p[0],
        ),
        CaseFormula(
            "viii.d",
            "2 <= x <= h-2, h+2 <= y <= k-h-2, h+4 <= z <= k-h+1; or x = h-1 with y >= h+3",
            "h*k - h*(h-2) + x + 1",
            lambda h, k, p: 2 <= p[0] <= h - 1
            and h + 2 <= p[1] <= k - h - 2
            and h + 4 <= p[2] <= k - h + 1
            and not (p[0] == h - 1 and p[1] == h + 2),
            lambda h, k, p: h * k - h * (h - 2) + p[0] + 1,
        ),
        CaseFormula(
            "viii.e", "(x, y) = (h-1, h+2), h+4 <= z <= k-h+1", "h*k - h*(h-2) + x",
            lambda h, k, p: p[0] == h - 1 and p[1] == h + 2 and h + 4 <= p[2] <= k - h + 1,
            lambda h, k, p: h * k - h * (h - 2) + p[0],
        ),
        CaseFormula(
            "ix.a",
            "x = h, h+2 <= y <= k-h, k-h+3 <= z <= k, (y,z) != (k-h,k-h+3)",
            "(h+1)*k - h*(h-2) - z + 2",
            lambda h, k, p: p[0] == h and h + 2 <= p[1] <= k - h and k - h + 3 <= p[2] <= k
            and not (p[1] == k - h and p[2] == k - h + 3),
            lambda h, k, p: (h + 1) * k - h * (h - 2) - p[2] + 2,
        ),
        CaseFormula(
            "ix.d", "(x,y,z) = (h, k-h, k-h+3)", "(h+1)*k - h*(h-2) - z + 1",
            lambda h, k, p: p == (h, k - h, k - h + 3),
            lambda h, k, p: (h + 1) * k - h * (h - 2) - p[2] + 1,
        ),
        CaseFormula(
            "ix.b", "x = h, h+2 <= y <= k-h, z = k-h+2", "h*k - h*(h-3) - 1",
            lambda h, k, p: p[0] == h and h + 2 <= p[1] <= k - h and p[2] == k - h + 2,
            lambda h, k, p: h * k - h * (h - 3) - 1,
        ),
        CaseFormula(
            "ix.c", "x = h, h+2 <= y <= k-h, h+4 <= z <= k-h+1", "h*k - h*(h-3)",
            lambda h, k, p: p[0] == h and h + 2 <= p[1] <= k - h and h + 4 <= p[2] <= k - h + 1,
            lambda h, k, p: h * k - h * (h - 3),
        ),
        CaseFormula(
            "x.a", "(x,y,z) = (h, k-h+1, k-h+3)", "h*k - h*(h-3) - 2",
            lambda h, k, p: p == (h, k - h + 1, k - h + 3),
            lambda h, k, p: h * k - h * (h - 3) - 2,
        ),
        CaseFormula(
            "x.b", "x = h, y = k-h+1, k-h+4 <= z <= k", "(h+1)*k - h*(h-2) - z + 1",
            lambda h, k, p: p[0] == h and p[1] == k - h + 1 and k - h + 4 <= p[2] <= k,
            lambda h, k, p: (h + 1) * k - h * (h - 2) - p[2] + 1,
        ),
        CaseFormula(
            "x.c", "(x,y,z) = (h, k-h+2, k-h+4)", "h*k - h*(h-3) - 3",
            lambda h, k, p: p == (h, k - h + 2, k - h + 4),
            lambda h, k, p: h * k - h * (h - 3) - 3,
        ),
        CaseFormula(
            "x.d", "x = h, y = k-h+2, k-h+5 <= z <= k", "(h+1)*k - h*(h-2) - z + 1",
            lambda h, k, p: p[0] == h and p[1] == k - h + 2 and k - h + 5 <= p[2] <= k,
            lambda h, k, p: (h + 1) * k - h * (h - 2) - p[2] + 1,
        ),
        CaseFormula(
            "x.e", "x = h, k-h+3 <= y <= k-2, k-h+5 <= z <= k",
            "(h+2)*k - h*(h-1) - (y+z) + 3",
            lambda h, k, p: p[0] == h
            and k - h + 3 <= p[1] <= k - 2
            and k - h + 5 <= p[2] <= k,
            lambda h, k, p: (h + 2) * k - h * (h - 1) - (p[1] + p[2]) + 3,
        ),
        CaseFormula(
            "xi.a", "(x,y,z) = (k-h-1, k-h+1, k-h+3)", "h*k - h*(h-3) - 2",
            lambda h, k, p: p == (k - h - 1, k - h + 1, k - h + 3),
            lambda h, k, p: h * k - h * (h - 3) - 2,
        ),
        CaseFormula(
            "xi.b",
            "h+1 <= x <= k-h-2, y = k-h+1, k-h+3 <= z <= k, (x,z) != (k-h-1,k-h+3)",
            "(h+1)*k - h*(h-2) - z + 2",
            lambda h, k, p: h + 1 <= p[0] <= k - h - 1 and p[1] == k - h + 1
            and k - h + 3 <= p[2] <= k
            and not (p[0] == k - h - 1 and p[2] == k - h + 3),
            lambda h, k, p: (h + 1) * k - h * (h - 2) - p[2] + 2,
        ),
        CaseFormula(
            "xi.c", "h+1 <= x <= k-h-2, y = k-h, z = k-h+3", "(h+1)*k - h*(h-2) - z + 2",
            lambda h, k, p: h + 1 <= p[0] <= k - h - 2 and p[1] == k - h and p[2] == k - h + 3,
            lambda h, k, p: (h + 1) * k - h * (h - 2) - p[2] + 2,
        ),
        CaseFormula(
            "xi.d",
            "h+1 <= x < y <= k-h, k-h+3 <= z <= k, not (y = k-h and z = k-h+3)",
            "(h+1)*k - h*(h-2) - z + 3",
            lambda h, k, p: h + 1 <= p[0]
            and p[1] <= k - h
            and k - h + 3 <= p[2] <= k
            and not (p[1] == k - h and p[2] == k - h + 3),
            lambda h, k, p: (h + 1) * k - h * (h - 2) - p[2] + 3,
        ),
        CaseFormula(
            "xii.a", "x = k-h, k-h+2 <= y < z <= k", "(h+2)*k - h*(h-1) - (y+z) + 3",
            lambda h, k, p: p[0] == k - h and k - h + 2 <= p[1] and p[2] <= k,
            lambda h, k, p: (h + 2) * k - h * (h - 1) - (p[1] + p[2]) + 3,
        ),
        CaseFormula(
            "xii.b",
            "h+1 <= x <= k-h-1, k-h+2 <= y < z <= k, (x,y) != (k-h-1,k-h+2)",
            "(h+2)*k - h*(h-1) - (y+z) + 4",
            lambda h, k, p: h + 1 <= p[0] <= k - h - 1 and k - h + 2 <= p[1] and p[2] <= k
            and not (p[0] == k - h - 1 and p[1] == k - h + 2),
            lambda h, k, p: (h + 2) * k - h * (h - 1) - (p[1] + p[2]) + 4,
        ),
        CaseFormula(
            "xii.c", "x = k-h-1, y = k-h+2, k-h+4 <= z <= k", "(h+2)*k - h*(h-1) - (y+z) + 3",
            lambda h, k, p: p[0] == k - h - 1 and p[1] == k - h + 2 and p[2] <= k,
            lambda h, k, p: (h + 2) * k - h * (h - 1) - (p[1] + p[2]) + 3,
        ),
        CaseFormula(
            "xiii.a", "h+1 <= x < y < z = k-h+2", "h*k - h*(h-3)",
            lambda h, k, p: h + 1 <= p[0] and p[2] == k - h + 2,
            lambda h, k, p: h * k - h * (h - 3),
        ),
        CaseFormula(
            "xiii.b", "h+1 <= x < y < z <= k-h+1", "h*k - h*(h-3) + 1",
            lambda h, k, p: h + 1 <= p[0] and p[2] <= k - h + 1,
            lambda h, k, p: h * k - h * (h - 3) + 1,
        ),
    )

    def it(h: int, k: int) -> Iterator[Params]:
        for x in range(2, k + 1):
            for y in range(x + 2, k + 1):
                for z in range(y + 2, k + 1):
                    yield (x, y, z)

    return DeletionFamily(
        id="general-triple", extension=2,
        shape="[0,k+2] minus {x,y,z}, 2<=x, z<=k, y-x>=2, z-y>=2",
        param_names=("x", "y", "z"),
        h_min=4, h_max=None, k_min=lambda h: 3 * h + 4, k_min_label="3h+4",
        deleted=lambda k, p: p,
        param_iter=it,
        param_check=_triple_check(
            "x, y, z",
            lambda k, x, y, z: None
            if (2 <= x and y - x >= 2 and z - y >= 2 and z <= k)
            else f"need 2 <= x < y < z <= {k} with gaps >= 2, got ({x}, {y}, {z})",
        ),
        cases=cases,
        dual="general-triple",
    )


# ---------------------------------------------------------------------------
# h>=4 triples containing 1 or k+1: [0,k+2] \ {1,y,z} and [0,k+2] \ {x,y,k+1}


def _triple_1yz_h4() -> DeletionFamily:
    cases = (
        CaseFormula(
            "i.a", "2 <= y <= h-1, 4 <= z <= h+1", "h*k - h^2 + y + z - 1",
            lambda h, k, p: 2 <= p[0] <= h - 1 and 4 <= p[1] <= h + 1,
            lambda h, k, p: h * k - h * h + p[0] + p[1] - 1,
        ),
        CaseFormula(
            "i.b", "(y, z) = (h, h+2)", "h*k - h*(h-2)",
            lambda h, k, p: p == (h, h + 2),
            lambda h, k, p: h * k - h * (h - 2),
        ),
        # the z = h+2 edge loses one more value than the printed interval form
        CaseFormula(
            "i.c", "2 <= y <= h-1, z = h+2", "h*k - h^2 + y + z - 2",
            lambda h, k, p: 2 <= p[0] <= h - 1 and p[1] == h + 2,
            lambda h, k, p: h * k - h * h + p[0] + p[1] - 2,
        ),
        CaseFormula(
            "ii.a", "2 <= y <= h, h+3 <= z <= k-h+1, (y,z) != (h,h+3)",
            "h*k - h*(h-1) + y + 1",
            lambda h, k, p: 2 <= p[0] <= h and h + 3 <= p[1] <= k - h + 1
            and p != (h, h + 3),
            lambda h, k, p: h * k - h * (h - 1) + p[0] + 1,
        ),
        CaseFormula(
            "ii.d", "(y, z) = (h, h+3)", "h*k - h*(h-1) + y",
            lambda h, k, p: p == (h, h + 3),
            lambda h, k, p: h * k - h * (h - 1) + p[0],
        ),
        CaseFormula(
            "ii.b", "2 <= y <= h, z = k-h+2", "h*k - h*(h-1) + y",
            lambda h, k, p: 2 <= p[0] <= h and p[1] == k - h + 2,
            lambda h, k, p: h * k - h * (h - 1) + p[0],
        ),
        CaseFormula(
            "ii.c", "2 <= y <= h, k-h+3 <= z <= k+1", "(h+1)*k - h^2 + y - z + 3",
            lambda h, k, p: 2 <= p[0] <= h and k - h + 3 <= p[1] <= k + 1,
            lambda h, k, p: (h + 1) * k - h * h + p[0] - p[1] + 3,
        ),
        CaseFormula(
            "iii.a", "y = h+1, k-h+3 <= z <= k+1", "(h+1)*k - h*(h-1) - z + 3",
            lambda h, k, p: p[0] == h + 1 and k - h + 3 <= p[1] <= k + 1,
            lambda h, k, p: (h + 1) * k - h * (h - 1) - p[1] + 3,
        ),
        CaseFormula(
            "iii.b", "(y, z) = (h+1, k-h+2)", "h*k - h*(h-2)",
            lambda h, k, p: p == (h + 1, k - h + 2),
            lambda h, k, p: h * k - h * (h - 2),
        ),
        CaseFormula(
            "iv", "(y, z) = (k-h, k-h+2)", "h*k - h*(h-2) + 1",
            lambda h, k, p: p == (k - h, k - h + 2),
            lambda h, k, p: h * k - h * (h - 2) + 1,
        ),
        CaseFormula(
            "v.a", "h+2 <= y <= k-h, k-h+3 <= z <= k+1, (y,z) != (k-h,k-h+3)",
            "(h+1)*k - h*(h-1) - z + 4",
            lambda h, k, p: h + 2 <= p[0] <= k - h and k - h + 3 <= p[1] <= k + 1
            and p != (k - h, k - h + 3),
            lambda h, k, p: (h + 1) * k - h * (h - 1) - p[1] + 4,
        ),
        CaseFormula(
            "v.c", "(y, z) = (k-h, k-h+3)", "(h+1)*k - h*(h-1) - z + 3",
            lambda h, k, p: p == (k - h, k - h + 3),
            lambda h, k, p: (h + 1) * k - h * (h - 1) - p[1] + 3,
        ),
        CaseFormula(
            "v.b", "y = k-h+1, k-h+3 <= z <= k+1", "(h+1)*k - h*(h-1) - z + 3",
            lambda h, k, p: p[0] == k - h + 1 and k - h + 3 <= p[1] <= k + 1,
            lambda h, k, p: (h + 1) * k - h * (h - 1) - p[1] + 3,
        ),
        CaseFormula(
            "vi", "k-h+2 <= y <= k-1, k-h+4 <= z <= k+1", "(h+2)*k - h^2 - (y+z) + 5",
            lambda h, k, p: k - h + 2 <= p[0] <= k - 1 and k - h + 4 <= p[1] <= k + 1,
            lambda h, k, p: (h + 2) * k - h * h - (p[0] + p[1]) + 5,
        ),
        CaseFormula(
            "vii.a", "y = h+1, h+3 <= z <= k-h+1", "h*k - h^2 + 2h + 1",
            lambda h, k, p: p[0] == h + 1 and h + 3 <= p[1] <= k - h + 1,
            lambda h, k, p: h * k - h * h + 2 * h + 1,
        ),
        CaseFormula(
            "vii.b", "h+2 <= y <= k-h-1, h+4 <= z <= k-h+1", "h*k - h^2 + 2h + 2",
            lambda h, k, p: h + 2 <= p[0] <= k - h - 1 and h + 4 <= p[1] <= k - h + 1,
            lambda h, k, p: h * k - h * h + 2 * h + 2,
        ),
    )

    def it(h: int, k: int) -> Iterator[Params]:
        for y in range(2, k):
            for z in range(y + 2, k + 2):
                yield (y, z)

    return DeletionFamily(
        id="triple-1yz", extension=2, shape="[0,k+2] minus {1,y,z}, z-y>=2",
        param_names=("y", "z"),
        h_min=4, h_max=None, k_min=lambda h: 3 * h + 4, k_min_label="3h+4",
        deleted=lambda k, p: (1, p[0], p[1]),
        param_iter=it,
        param_check=_pair_check(
            "y, z",
            lambda k, y, z: None
            if (2 <= y < z <= k + 1 and z - y >= 2)
            else f"need 2 <= y < z <= {k + 1} with z - y >= 2, got ({y}, {z})",
        ),
        cases=cases,
        dual="triple-xy-kp1",
    )


def _triple_xy_kp1_h4() -> DeletionFamily:
    cases = (
        CaseFormula(
            "i.a", "k-h+1 <= x <= k-2, k-h+3 <= y <= k", "(h+2)*k - h^2 - (x+y) + 3",
            lambda h, k, p: k - h + 1 <= p[0] <= k - 2 and k - h + 3 <= p[1] <= k,
            lambda h, k, p: (h + 2) * k - h * h - (p[0] + p[1]) + 3,
        ),
        CaseFormula(
            "i.b", "(x, y) = (k-h, k-h+2)", "h*k - h*(h-2)",
            lambda h, k, p: p == (k - h, k - h + 2),
            lambda h, k, p: h * k - h * (h - 2),
        ),
        # the x = k-h edge sits one below the printed interval form
        CaseFormula(
            "i.c", "x = k-h, k-h+3 <= y <= k", "(h+2)*k - h^2 - (x+y) + 2",
            lambda h, k, p: p[0] == k - h and k - h + 3 <= p[1] <= k,
            lambda h, k, p: (h + 2) * k - h * h - (p[0] + p[1]) + 2,
        ),
        CaseFormula(
            "ii.a", "h+1 <= x <= k-h-1, k-h+2 <= y <= k, (x,y) != (k-h-1,k-h+2)",
            "(h+1)*k - h*(h-1) - y + 3",
            lambda h, k, p: h + 1 <= p[0] <= k - h - 1 and k - h + 2 <= p[1] <= k
            and p != (k - h - 1, k - h + 2),
            lambda h, k, p: (h + 1) * k - h * (h - 1) - p[1] + 3,
        ),
        CaseFormula(
            "ii.d", "(x, y) = (k-h-1, k-h+2)", "(h+1)*k - h*(h-1) - y + 2",
            lambda h, k, p: p == (k - h - 1, k - h + 2),
            lambda h, k, p: (h + 1) * k - h * (h - 1) - p[1] + 2,
        ),
        CaseFormula(
            "ii.b", "x = h, k-h+2 <= y <= k", "(h+1)*k - h*(h-1) - y + 2",
            lambda h, k, p: p[0] == h and k - h + 2 <= p[1] <= k,
            lambda h, k, p: (h + 1) * k - h * (h - 1) - p[1] + 2,
        ),
        CaseFormula(
            "ii.c", "1 <= x <= h-1, k-h+2 <= y <= k", "(h+1)*k - h^2 + x - y + 3",
            lambda h, k, p: 1 <= p[0] <= h - 1 and k - h + 2 <= p[1] <= k,
            lambda h, k, p: (h + 1) * k - h * h + p[0] - p[1] + 3,
        ),
        CaseFormula(
            "iii.a", "1 <= x <= h-1, y = k-h+1", "h*k - h*(h-1) + x + 1",
            lambda h, k, p: 1 <= p[0] <= h - 1 and p[1] == k - h + 1,
            lambda h, k, p: h * k - h * (h - 1) + p[0] + 1,
        ),
        CaseFormula(
            "iii.b", "(x, y) = (h, k-h+1)", "h*k - h*(h-2)",
            lambda h, k, p: p == (h, k - h + 1),
            lambda h, k, p: h * k - h * (h - 2),
        ),
        CaseFormula(
            "iv", "(x, y) = (h, h+2)", "h*k - h*(h-2) + 1",
            lambda h, k, p: p == (h, h + 2),
            lambda h, k, p: h * k - h * (h - 2) + 1,
        ),
        CaseFormula(
            "v.a", "1 <= x <= h-1, h+2 <= y <= k-h, (x,y) != (h-1,h+2)",
            "h*k - h*(h-1) + x + 2",
            lambda h, k, p: 1 <= p[0] <= h - 1 and h + 2 <= p[1] <= k - h
            and p != (h - 1, h + 2),
            lambda h, k, p: h * k - h * (h - 1) + p[0] + 2,
        ),
        CaseFormula(
            "v.c", "(x, y) = (h-1, h+2)", "h*k - h*(h-1) + x + 1",
            lambda h, k, p: p == (h - 1, h + 2),
            lambda h, k, p: h * k - h * (h - 1) + p[0] + 1,
        ),
        CaseFormula(
            "v.b", "1 <= x <= h-1, y = h+1", "h*k - h*(h-1) + x + 1",
            lambda h, k, p: 1 <= p[0] <= h - 1 and p[1] == h + 1,
            lambda h, k, p: h * k - h * (h - 1) + p[0] + 1,
        ),
        CaseFormula(
            "vi", "1 <= x <= h-2, 3 <= y <= h", "h*k - h^2 + x + y + 1",
            lambda h, k, p: 1 <= p[0] <= h - 2 and 3 <= p[1] <= h,
            lambda h, k, p: h * k - h * h + p[0] + p[1] + 1,
        ),
        CaseFormula(
            "vii.a", "h+1 <= x <= k-h-1, y = k-h+1", "h*k - h^2 + 2h + 1",
            lambda h, k, p: h + 1 <= p[0] <= k - h - 1 and p[1] == k - h + 1,
            lambda h, k, p: h * k - h * h + 2 * h + 1,
        ),
        CaseFormula(
            "vii.b", "h+1 <= x <= k-h-1, h+3 <= y <= k-h", "h*k - h^2 + 2h + 2",
            lambda h, k, p: h + 1 <= p[0] <= k - h - 1 and h + 3 <= p[1] <= k - h,
            lambda h, k, p: h * k - h * h + 2 * h + 2,
        ),
    )

    def it(h: int, k: int) -> Iterator[Params]:
        for x in range(1, k - 1):
            for y in range(x + 2, k + 1):
                yield (x, y)

    return DeletionFamily(
        id="triple-xy-kp1", extension=2, shape="[0,k+2] minus {x,y,k+1}, y-x>=2",
        param_names=("x", "y"),
        h_min=4, h_max=None, k_min=lambda h: 3 * h + 2, k_min_label="3h+2",
        deleted=lambda k, p: (p[0], p[1], k + 1),
        param_iter=it,
        param_check=_pair_check(
            "x, y",
            lambda k, x, y: None
            if (1 <= x < y <= k and y - x >= 2)
            else f"need 1 <= x < y <= {k} with y - x >= 2, got ({x}, {y})",
        ),
        cases=cases,
        dual="triple-1yz",
    )


ALL_FAMILIES = tuple(
    register(build())
    for build in (
        _one_deletion,
        _pair_adjacent,
        _pair_skip,
        _pair_x_k,
        _pair_1_y,
        _pair_x_km1,
        _pair_2_y,
        _general_pair,
        _triple_run,
        _triple_xx1z_h3,
        _triple_xyy1_h3,
        _general_triple_h3,
        _triple_1yz_h3,
        _triple_xy_kp1_h3,
        _triple_xx1_kp1,
        _triple_1yy1,
        _triple_xx1z_h4,
        _triple_xyy1_h4,
        _general_triple_h4,
        _triple_1yz_h4,
        _triple_xy_kp1_h4,
    )
)
