"""Named verification suites and their text / JSON reports."""

import json
from dataclasses import asdict, dataclass

from . import __version__
from .algebra import AlgebraElement, NormalizationError, PresentationError
from .coefficients import Poly, format_poly
from .expr import format_element
from .presentations import Report, get_algebra

SUITES = ("presentations", "matrices", "covariance", "forms", "connection", "curvature", "metric")

CONFLUENCE_ALGEBRAS = ("superspace", "forms", "wedge", "calculus", "group", "combined", "combined-forms")


@dataclass(frozen=True)
class CheckResult:
    check_id: str
    paper_anchor: str
    status: str
    residual: str

    @property
    def passed(self):
        return self.status == "pass"

    def to_dict(self):
        return asdict(self)


@dataclass
class SuiteOutcome:
    name: str
    results: list
    notes: list

    @property
    def ok(self):
        return all(r.passed for r in self.results)


def format_residual(value):
    """Printed normal form of a residual; empty when it is zero."""
    if value is None:
        return ""
    if isinstance(value, AlgebraElement):
        return "" if value.is_zero() else format_element(value)
    if isinstance(value, Poly):
        return "" if not value else format_poly(value)
    if isinstance(value, str):
        return value
    if isinstance(value, tuple) and len(value) == 2 and isinstance(value[0], tuple):
        pos, entry = value
        text = format_residual(entry)
        return f"[{','.join(str(i + 1) for i in pos)}] {text}" if text else ""
    if isinstance(value, (list, tuple)):
        return "; ".join(t for t in (format_residual(v) for v in value) if t)
    return "" if value == 0 else str(value)


def _results(report):
    out = []
    for check in report.checks:
        residual = format_residual(check.residual)
        status = "pass" if check.passed else "fail"
        if status == "fail" and not residual:
            residual = "nonzero"
        out.append(CheckResult(check.check_id, check.anchor, status, residual))
    return out


def confluence_report():
    report = Report("confluence")
    for algebra_id in CONFLUENCE_ALGEBRAS:
        for overlap in get_algebra(algebra_id).check_confluence().overlaps:
            report.add(
                f"presentations.confluence.{algebra_id}[{'*'.join(overlap.word)}]",
                "overlap resolves to one normal form",
                overlap.via_left - overlap.via_right,
            )
    return report


def _classical(prefixes):
    from .forms import check_classical_limit

    full = check_classical_limit()
    part = Report("classical")
    part.checks = [c for c in full.checks if c.check_id.startswith(prefixes)]
    return part


def _reports(name, params):
    from . import forms, geometry, matrices, presentations

    if name == "presentations":
        return [confluence_report(), presentations.verify_presentation_theorems(), _classical("classical.superspace")]
    if name == "matrices":
        return [matrices.check_matrix_identities(), _classical(("classical.R", "classical.B"))]
    if name == "covariance":
        return [presentations.check_covariance(), matrices.check_rtt_b()]
    if name == "forms":
        return [forms.check_form_identities(), _classical("classical.sigma")]
    if name == "connection":
        return [geometry.check_connection()]
    if name == "curvature":
        return [geometry.check_curvature(params=params)]
    if name == "metric":
        return [geometry.check_metric(params=params)]
    raise KeyError(f"unknown suite {name!r}; expected one of {', '.join(SUITES)} or 'all'")


def run_suite(name, params=None):
    """Run one suite.  ``params`` pins the connection parameters (None keeps them symbolic)."""
    try:
        reports = _reports(name, params)
    except (NormalizationError, PresentationError) as exc:
        failure = CheckResult(f"{name}.engine", "rewriting terminates", "fail", str(exc))
        return SuiteOutcome(name, [failure], [])
    results = [r for rep in reports for r in _results(rep)]
    notes = [n for rep in reports for n in rep.notes]
    return SuiteOutcome(name, results, notes)


def expand_suites(names):
    """Validate suite names, expanding ``all``; keeps the canonical order without repeats."""
    names = [n.strip() for n in names if n.strip()]
    if not names:
        raise ValueError("no suite selected")
    unknown = [n for n in names if n != "all" and n not in SUITES]
    if unknown:
        raise ValueError(f"unknown suite {unknown[0]!r}; expected one of {', '.join(SUITES)} or 'all'")
    if "all" in names:
        return list(SUITES)
    return [s for s in SUITES if s in names]


def run_suites(names, params=None, fail_fast=False):
    outcomes = []
    for name in expand_suites(names):
        outcome = run_suite(name, params)
        outcomes.append(outcome)
        if fail_fast and not outcome.ok:
            break
    return outcomes


def report_dict(outcomes):
    results = [r.to_dict() for o in outcomes for r in o.results]
    passed = sum(1 for r in results if r["status"] == "pass")
    return {
        "version": __version__,
        "suites": [o.name for o in outcomes],
        "results": results,
        "summary": {"pass": passed, "fail": len(results) - passed},
    }


def report_json(outcomes):
    return json.dumps(report_dict(outcomes), indent=2, ensure_ascii=False) + "\n"


def report_text(outcomes):
    lines = []
    total_pass = total_fail = 0
    for o in outcomes:
        n_pass = sum(1 for r in o.results if r.passed)
        n_fail = len(o.results) - n_pass
        total_pass += n_pass
        total_fail += n_fail
        lines.append(f"== {o.name}: {n_pass} pass, {n_fail} fail")
        for r in o.results:
            line = f"{r.status.upper()}  {r.check_id}  [{r.paper_anchor}]"
            if r.residual:
                line += f"\n      residual: {r.residual}"
            lines.append(line)
        for note in o.notes:
            lines.append(f"note: {note}")
    lines.append(f"summary: {total_pass} pass, {total_fail} fail")
    return "\n".join(lines) + "\n"


def validate_report(data):
    """Raise ValueError unless ``data`` follows the JSON report schema."""
    if not isinstance(data, dict) or set(data) != {"version", "suites", "results", "summary"}:
        raise ValueError("top level must have exactly version, suites, results, summary")
    if not isinstance(data["version"], str) or not isinstance(data["suites"], list):
        raise ValueError("version must be a string and suites a list")
    keys = {"check_id", "paper_anchor", "status", "residual"}
    for r in data["results"]:
        if not isinstance(r, dict) or set(r) != keys:
            raise ValueError(f"malformed result {r!r}")
        if r["status"] not in ("pass", "fail"):
            raise ValueError(f"bad status {r['status']!r}")
        if (r["status"] == "pass") != (r["residual"] == ""):
            raise ValueError(f"{r['check_id']}: status and residual disagree")
    summary = data["summary"]
    if set(summary) != {"pass", "fail"}:
        raise ValueError("summary must have pass and fail")
    n_pass = sum(1 for r in data["results"] if r["status"] == "pass")
    if summary["pass"] != n_pass or summary["fail"] != len(data["results"]) - n_pass:
        raise ValueError("summary counts do not match results")
    return data
