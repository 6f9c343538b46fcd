"""Verdict containers shared by every checker."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

MAX_WITNESSES = 20


def _jsonable(x):
    from .exactlin import fmt_q

    if isinstance(x, Fraction):
        return fmt_q(x)
    if isinstance(x, (tuple, list)):
        return [_jsonable(y) for y in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    return x


@dataclass
class Witness:
    indices: tuple
    residual: object = None

    def to_dict(self) -> dict:
        return {"indices": _jsonable(self.indices), "residual": _jsonable(self.residual)}


@dataclass
class CheckResult:
    name: str
    passed: bool
    witnesses: list = field(default_factory=list)
    count: int = 0
    note: str = ""

    def to_dict(self) -> dict:
        out = {"name": self.name, "passed": self.passed}
        if self.witnesses:
            out["violations"] = self.count
            out["witnesses"] = [w.to_dict() for w in self.witnesses]
        if self.note:
            out["note"] = self.note
        return out


@dataclass
class Report:
    """Named list of check verdicts. Truthy iff every check passed."""

    title: str
    checks: list = field(default_factory=list)

    def add(self, name: str, violations=(), note: str = "") -> CheckResult:
        ws = []
        count = 0
        for v in violations:
            count += 1
            if len(ws) < MAX_WITNESSES:
                ws.append(v if isinstance(v, Witness) else Witness(*v) if isinstance(v, tuple) and len(v) == 2 else Witness(v))
        res = CheckResult(name, count == 0, ws, count, note)
        self.checks.append(res)
        return res

    def add_bool(self, name: str, ok: bool, witness=None, note: str = "") -> CheckResult:
        if ok:
            return self.add(name, (), note)
        return self.add(name, [witness if witness is not None else Witness((), note or "failed")], note)

    def extend(self, other: "Report", prefix: str = "") -> "Report":
        for c in other.checks:
            self.checks.append(CheckResult(prefix + c.name, c.passed, c.witnesses, c.count, c.note))
        return self

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def __bool__(self) -> bool:
        return self.passed

    def __getitem__(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def __contains__(self, name: str) -> bool:
        return any(c.name == name for c in self.checks)

    def failed(self) -> list:
        return [c.name for c in self.checks if not c.passed]

    def to_dict(self) -> dict:
        return {"title": self.title, "passed": self.passed, "checks": [c.to_dict() for c in self.checks]}

    def summary(self) -> str:
        lines = [f"{self.title}: {'PASS' if self.passed else 'FAIL'}"]
        for c in self.checks:
            line = f"  [{'ok' if c.passed else 'FAIL'}] {c.name}"
            if c.note:
                line += f" ({c.note})"
            lines.append(line)
            for w in c.witnesses[:3]:
                lines.append(f"      at {_jsonable(w.indices)}: {_jsonable(w.residual)}")
        return "\n".join(lines)


class CheckFailed(ValueError):
    """A construction's precondition or post-hoc verification did not hold."""

    def __init__(self, message: str, report: Report | None = None):
        super().__init__(message)
        self.report = report
