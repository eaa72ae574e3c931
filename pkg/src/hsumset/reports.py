"""Rendering of report objects to plain text, JSON, and CSV.

Output is byte-identical across runs and worker counts for fixed
inputs: set lists are sorted, dict key order is fixed, and the wall-ms
field is only emitted when timing output is requested explicitly.
"""

from __future__ import annotations

import csv
import io
import json

from .catalog import CoverageReport
from .classifier import ClassificationReport, ContainmentReport
from .intset import FiniteIntSet


def render_set(A: FiniteIntSet) -> str:
    """Human form: interval shorthand for runs, braces otherwise."""
    if len(A) == 0:
        return "{}"
    if len(A) == 1:
        return "{%d}" % A.elements[0]
    if A.max - A.min + 1 == len(A):
        return f"{A.min}..{A.max}"
    return "{" + A.text() + "}"


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _dump_csv(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


# ---------------------------------------------------------------------------
# compute


def render_compute(A: FiniteIntSet, h: int, result: FiniteIntSet, fmt: str) -> str:
    if fmt == "json":
        return _dump_json(
            {
                "set": A.text(),
                "h": h,
                "sumset": result.text(),
                "cardinality": len(result),
            }
        )
    if fmt == "csv":
        return _dump_csv(["set", "h", "sumset", "cardinality"],
                         [[A.text(), h, result.text(), len(result)]])
    return f"{render_set(result)} ({len(result)})\n"


# ---------------------------------------------------------------------------
# classification / containment


def classification_dict(report: ClassificationReport, timing: bool = False) -> dict:
    d = {
        "theorem": report.theorem,
        "h": report.h,
        "k": report.k,
        "dmax": report.dmax,
        "target": report.target,
        "found": [s.text() for s in report.found],
        "expected": None if report.expected is None else [s.text() for s in report.expected],
        "verdict": report.verdict,
        "scanned": report.scanned,
        "pruned": report.pruned,
    }
    if timing:
        d["wall_ms"] = report.wall_ms
    return d


def render_classification(report: ClassificationReport, fmt: str, timing: bool = False) -> str:
    if fmt == "json":
        return _dump_json(classification_dict(report, timing))
    if fmt == "csv":
        rows = [
            [report.theorem or "", report.h, report.k, report.dmax, report.target,
             report.verdict or "", s.text()]
            for s in report.found
        ]
        return _dump_csv(["theorem", "h", "k", "dmax", "target", "verdict", "set"], rows)
    lines = []
    head = f"h={report.h} k={report.k} target={report.target} dmax={report.dmax}"
    if report.theorem:
        head = f"theorem={report.theorem} " + head
    lines.append(head)
    lines.append(f"found ({len(report.found)}):")
    for s in report.found:
        lines.append(f"  {s.text()}")
    if report.expected is not None:
        missing = [s for s in report.expected if s not in report.found]
        extra = [s for s in report.found if s not in report.expected]
        lines.append(f"expected ({len(report.expected)}): "
                     f"{len(missing)} missing, {len(extra)} extra")
        for s in missing:
            lines.append(f"  missing: {s.text()}")
        for s in extra:
            lines.append(f"  extra:   {s.text()}")
    if report.verdict:
        lines.append(f"verdict: {report.verdict}")
    lines.append(f"scanned={report.scanned} pruned={report.pruned}"
                 + (f" wall_ms={report.wall_ms:.1f}" if timing else ""))
    return "\n".join(lines) + "\n"


def containment_dict(report: ContainmentReport, timing: bool = False) -> dict:
    d = {
        "theorem": "containment",
        "h": report.h,
        "k": report.k,
        "c": report.c,
        "dmax": report.dmax,
        "target": report.target,
        "bound": report.bound,
        "found": [s.text() for s in report.found],
        "violators": [s.text() for s in report.violators],
        "verdict": "no-violators" if report.ok else "violated",
        "scanned": report.scanned,
        "pruned": report.pruned,
    }
    if timing:
        d["wall_ms"] = report.wall_ms
    return d


def render_containment(report: ContainmentReport, fmt: str, timing: bool = False) -> str:
    if fmt == "json":
        return _dump_json(containment_dict(report, timing))
    if fmt == "csv":
        rows = [
            ["containment", report.h, report.k, report.dmax, report.target,
             "violator" if s in report.violators else "contained", s.text()]
            for s in report.found
        ]
        return _dump_csv(["theorem", "h", "k", "dmax", "target", "verdict", "set"], rows)
    lines = [
        f"containment h={report.h} k={report.k} c={report.c} dmax={report.dmax} "
        f"target={report.target} max-allowed={report.bound}",
        f"sets at target: {len(report.found)}; violators: {len(report.violators)}",
    ]
    for s in report.violators:
        lines.append(f"  VIOLATOR {s.text()} (max {s.max})")
    lines.append("verdict: " + ("no-violators" if report.ok else "violated"))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# catalog crosschecks


def coverage_dict(report: CoverageReport, timing: bool = False) -> dict:
    d = {
        "family": report.family,
        "h": report.h,
        "k": report.k,
        "checked": report.checked,
        "mismatches": [
            {
                "params": list(m["params"]),
                "case": m["case"],
                "predicted": m["predicted"],
                "engine": m["engine"],
            }
            for m in report.mismatches
        ],
        "uncovered": [
            {"params": list(u["params"]), "subthreshold": u["subthreshold"], "near": u["near"]}
            for u in report.uncovered
        ],
        "ambiguous": [
            {"params": list(a["params"]), "labels": a["labels"], "values": a["values"]}
            for a in report.ambiguous
        ],
        "overlaps": [
            {"params": list(o["params"]), "labels": o["labels"], "value": o["value"]}
            for o in report.overlaps
        ],
        "ok": report.ok,
    }
    if timing:
        d["wall_ms"] = report.wall_ms
    return d


def render_coverage(reports: list[CoverageReport], fmt: str, timing: bool = False) -> str:
    if fmt == "json":
        return _dump_json([coverage_dict(r, timing) for r in reports])
    if fmt == "csv":
        rows = []
        for r in reports:
            for m in r.mismatches:
                rows.append([r.family, r.h, r.k, "mismatch",
                             " ".join(map(str, m["params"])),
                             f"predicted {m['predicted']} ({'/'.join(m['case'])}) engine {m['engine']}"])
            for u in r.uncovered:
                note = "subthreshold " + "/".join(u["subthreshold"]) if u["subthreshold"] else ""
                rows.append([r.family, r.h, r.k, "uncovered",
                             " ".join(map(str, u["params"])), note])
            for a in r.ambiguous:
                rows.append([r.family, r.h, r.k, "ambiguous",
                             " ".join(map(str, a["params"])),
                             f"{'/'.join(a['labels'])} values {a['values']}"])
        return _dump_csv(["family", "h", "k", "kind", "params", "detail"], rows)
    lines = []
    for r in reports:
        status = "pass" if not r.mismatches and not r.ambiguous else "FAIL"
        extra = ""
        if r.uncovered:
            extra += f" uncovered={len(r.uncovered)}"
        if r.ambiguous:
            extra += f" ambiguous={len(r.ambiguous)}"
        lines.append(
            f"{status} {r.family} h={r.h} k={r.k}: {r.checked} tuples, "
            f"{len(r.mismatches)} mismatches{extra}"
        )
        for m in r.mismatches:
            lines.append(
                f"   mismatch {m['params']}: predicted {m['predicted']} "
                f"({'/'.join(m['case'])}), engine {m['engine']}"
            )
        for a in r.ambiguous:
            lines.append(f"   ambiguous {a['params']}: {a['labels']} -> {a['values']}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# enumerate


def render_sets(sets: list[FiniteIntSet], fmt: str) -> str:
    if fmt == "json":
        return _dump_json([s.text() for s in sets])
    if fmt == "csv":
        return _dump_csv(["set"], [[s.text()] for s in sets])
    return "".join(s.text() + "\n" for s in sets)
