"""Named pass/fail checks with residuals, and their JSON serialisation."""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import List, Optional

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"


@dataclass
class CheckResult:
    check_id: str
    status: str
    residual: float
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.status != FAIL


@dataclass
class VerificationReport:
    artifact: Optional[str] = None
    tolerance: Optional[float] = None
    checks: List[CheckResult] = field(default_factory=list)

    def add(self, check_id: str, residual: float, detail: str = "",
            tol: Optional[float] = None) -> CheckResult:
        """Record a residual check: passes iff residual <= tol (default: report tolerance)."""
        t = self.tolerance if tol is None else tol
        if t is None:
            t = 1e-9
        residual = float(residual)
        status = PASS if residual <= t else FAIL
        r = CheckResult(check_id, status, residual, detail)
        self.checks.append(r)
        return r

    def add_bool(self, check_id: str, ok: bool, detail: str = "",
                 residual: float = 0.0) -> CheckResult:
        r = CheckResult(check_id, PASS if ok else FAIL, float(residual), detail)
        self.checks.append(r)
        return r

    def skip(self, check_id: str, detail: str = "") -> CheckResult:
        r = CheckResult(check_id, SKIPPED, 0.0, detail)
        self.checks.append(r)
        return r

    def extend(self, other: "VerificationReport", prefix: str = "") -> "VerificationReport":
        for c in other.checks:
            self.checks.append(CheckResult(prefix + c.check_id, c.status, c.residual, c.detail))
        return self

    @property
    def overall(self) -> bool:
        return all(c.status != FAIL for c in self.checks)

    def __bool__(self):
        return self.overall

    def __getitem__(self, check_id: str) -> CheckResult:
        for c in self.checks:
            if c.check_id == check_id:
                return c
        raise KeyError(check_id)

    def __contains__(self, check_id: str) -> bool:
        return any(c.check_id == check_id for c in self.checks)

    def passed(self, check_id: str) -> bool:
        return self[check_id].status == PASS

    def failed_ids(self) -> List[str]:
        return [c.check_id for c in self.checks if c.status == FAIL]

    def max_residual(self) -> float:
        vals = [c.residual for c in self.checks if c.status != SKIPPED]
        return max(vals) if vals else 0.0

    def to_dict(self) -> dict:
        d = {}
        if self.artifact is not None:
            d["artifact"] = self.artifact
        if self.tolerance is not None:
            d["tolerance"] = self.tolerance
        d["overall"] = self.overall
        d["checks"] = [
            {"check_id": c.check_id, "status": c.status,
             "residual": c.residual, "detail": c.detail}
            for c in self.checks
        ]
        return d

    def to_text(self) -> str:
        lines = []
        if self.artifact:
            lines.append(f"artifact: {self.artifact}")
        for c in self.checks:
            lines.append(f"  [{c.status:7s}] {c.check_id:28s} residual={c.residual:.3e}"
                         + (f"  {c.detail}" if c.detail else ""))
        lines.append(f"overall: {'pass' if self.overall else 'fail'}")
        return "\n".join(lines)


def _fmt_float(x: float) -> str:
    if math.isnan(x):
        return '"nan"'
    if math.isinf(x):
        return '"inf"' if x > 0 else '"-inf"'
    s = f"{x:.17g}"
    if not any(ch in s for ch in ".eE"):
        s += ".0"
    return s


def _dump(obj) -> str:
    if obj is True:
        return "true"
    if obj is False:
        return "false"
    if obj is None:
        return "null"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return _fmt_float(obj)
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        return "{" + ", ".join(f"{_dump(str(k))}: {_dump(v)}" for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(_dump(v) for v in obj) + "]"
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def report_json(report: VerificationReport) -> str:
    return _dump(report.to_dict()) + "\n"


def emit_report(report: VerificationReport, path=None) -> str:
    """Serialise deterministically (fixed key order, 17 significant digits).

    Writes to path when given; always returns the text.
    """
    text = report_json(report)
    if path is not None:
        with open(path, "w") as fh:
            fh.write(text)
    return text
