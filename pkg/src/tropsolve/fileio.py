"""Problem documents and reports as JSON.

A problem document holds the semifield tag, the problem kind, the named
arrays the kind's solver needs, and optional grid/verify settings.  The
semifield zero is JSON ``null``; non-integer rationals travel as strings
(``"7/2"``) so nothing is rounded.  Report serialization is stable:
sorted keys, fixed separators, versioned schema tags.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .errors import DocumentError
from .linalg import Matrix
from .oracle import VerificationReport
from .problems import PROBLEM_KINDS
from .semifield import SEMIFIELDS, Scalar, Semifield
from .solvers import ComponentwiseFamily, OptimumReport, RaySolution
from .systems import BoxSolutionSet, GeneratedSolutionSet

REPORT_SCHEMA = "tropsolve.report/1"
VERIFY_SCHEMA = "tropsolve.verify/1"


@dataclass(frozen=True)
class ProblemDocument:
    semifield: Semifield
    kind: str
    data: dict
    grid: dict | None = None
    verify: dict | None = None


# ----------------------------------------------------------------------
# scalar/matrix encoding

def encode_scalar(s: Scalar | None):
    if s is None or s.is_zero:
        return None
    if isinstance(s.v, Fraction):
        return int(s.v) if s.v.denominator == 1 else str(s.v)
    return s.v


def encode_vector(v: Matrix | None):
    if v is None:
        return None
    return [encode_scalar(v[i]) for i in range(v.dim)]


def encode_matrix(m: Matrix | None):
    if m is None:
        return None
    return [[encode_scalar(s) for s in row] for row in m.data]


def _decode_scalar(sf: Semifield, raw, field: str) -> Scalar:
    if raw is None:
        return sf.zero
    if isinstance(raw, bool) or not isinstance(raw, (int, float, str)):
        raise DocumentError(f"expected a number, rational string or null, "
                            f"got {raw!r}", field)
    try:
        return sf.scalar(raw)
    except (ValueError, ArithmeticError) as exc:
        raise DocumentError(str(exc), field) from exc


def _decode_vector(sf: Semifield, raw, field: str) -> Matrix:
    if not isinstance(raw, list) or not raw or any(isinstance(v, list) for v in raw):
        raise DocumentError("expected a flat non-empty array", field)
    return Matrix(sf, tuple(
        (_decode_scalar(sf, v, f"{field}[{i}]"),) for i, v in enumerate(raw)))


def _decode_matrix(sf: Semifield, raw, field: str) -> Matrix:
    if (not isinstance(raw, list) or not raw
            or any(not isinstance(r, list) or not r for r in raw)):
        raise DocumentError("expected a non-empty array of arrays", field)
    width = len(raw[0])
    rows = []
    for i, r in enumerate(raw):
        if len(r) != width:
            raise DocumentError(f"row has {len(r)} entries, expected {width}",
                                f"{field}[{i}]")
        rows.append(tuple(_decode_scalar(sf, v, f"{field}[{i}][{j}]")
                          for j, v in enumerate(r)))
    return Matrix(sf, tuple(rows))


# ----------------------------------------------------------------------
# documents

def parse_document(text: str) -> ProblemDocument:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc}") from exc
    if not isinstance(raw, dict):
        raise DocumentError("document must be a JSON object")
    tag = raw.get("semifield", "max-plus")
    if tag not in SEMIFIELDS:
        raise DocumentError(f"unknown semifield {tag!r}", "semifield")
    sf = SEMIFIELDS[tag]
    kind = raw.get("kind")
    if kind not in PROBLEM_KINDS:
        raise DocumentError(f"unknown problem kind {kind!r}", "kind")
    pk = PROBLEM_KINDS[kind]
    data = {}
    for f in pk.matrix_fields:
        if f not in raw:
            raise DocumentError("required matrix field missing", f)
        data[f] = _decode_matrix(sf, raw[f], f)
    for f in pk.vector_fields:
        if f not in raw:
            raise DocumentError("required vector field missing", f)
        data[f] = _decode_vector(sf, raw[f], f)
    for f in pk.scalar_fields:
        if f not in raw:
            raise DocumentError("required scalar field missing", f)
        data[f] = _decode_scalar(sf, raw[f], f)
    grid = raw.get("grid")
    verify = raw.get("verify")
    for name, section in (("grid", grid), ("verify", verify)):
        if section is not None and not isinstance(section, dict):
            raise DocumentError("expected an object", name)
    return ProblemDocument(sf, kind, data, grid, verify)


def load_document(path) -> ProblemDocument:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_document(fh.read())


def document_to_dict(doc: ProblemDocument) -> dict:
    pk = PROBLEM_KINDS[doc.kind]
    out = {"semifield": doc.semifield.tag, "kind": doc.kind}
    for f in pk.matrix_fields:
        out[f] = encode_matrix(doc.data[f])
    for f in pk.vector_fields:
        out[f] = encode_vector(doc.data[f])
    for f in pk.scalar_fields:
        out[f] = encode_scalar(doc.data[f])
    if doc.grid is not None:
        out["grid"] = doc.grid
    if doc.verify is not None:
        out["verify"] = doc.verify
    return out


def dumps(obj: dict) -> str:
    """Canonical JSON: sorted keys, two-space indent, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


# ----------------------------------------------------------------------
# reports

def _encode_solution(sol) -> dict | None:
    if sol is None:
        return None
    if isinstance(sol, BoxSolutionSet):
        return {"type": "box",
                "lower": encode_vector(sol.lower),
                "upper": encode_vector(sol.upper)}
    if isinstance(sol, GeneratedSolutionSet):
        return {"type": "generated",
                "generator": encode_matrix(sol.generator),
                "lower": encode_vector(sol.lower),
                "upper": encode_vector(sol.upper)}
    if isinstance(sol, RaySolution):
        return {"type": "ray", "direction": encode_vector(sol.direction)}
    if isinstance(sol, ComponentwiseFamily):
        return {"type": "componentwise",
                "pinned_index": sol.pinned_index,
                "pinned_value": encode_scalar(sol.pinned_value),
                "upper_bounds": [None if b is None else encode_scalar(b)
                                 for b in sol.upper_bounds],
                "support_index": sol.support_index,
                "tied_pinned_indices": list(sol.tied_pinned_indices),
                "generator": encode_matrix(sol.generator)}
    raise TypeError(f"cannot encode solution {sol!r}")


def report_to_dict(report: OptimumReport, sf: Semifield) -> dict:
    return {"schema": REPORT_SCHEMA,
            "semifield": sf.tag,
            "kind": report.kind,
            "status": report.status,
            "optimum": encode_scalar(report.optimum),
            "reason": report.reason,
            "solution": _encode_solution(report.solution),
            "diagnostics": [[name, ok] for name, ok in report.diagnostics]}


def _encode_gap(gap):
    if gap is None:
        return None
    if isinstance(gap, Fraction):
        return int(gap) if gap.denominator == 1 else str(gap)
    return gap


def verification_to_dict(vr: VerificationReport, sf: Semifield) -> dict:
    return {"schema": VERIFY_SCHEMA,
            "semifield": sf.tag,
            "kind": vr.kind,
            "passed": vr.passed,
            "solver_status": vr.solver_status,
            "solver_optimum": encode_scalar(vr.solver_optimum),
            "grid_optimum": encode_scalar(vr.grid_optimum),
            "gap": _encode_gap(vr.gap),
            "grid_beats_solver": vr.grid_beats_solver,
            "samples_checked": vr.samples_checked,
            "feasibility_failures": list(vr.feasibility_failures),
            "attainment_failures": list(vr.attainment_failures),
            "grid_points": vr.grid_points}
