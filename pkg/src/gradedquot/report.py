"""Check records and suite reports."""

from __future__ import annotations

import json
import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .fields import QI2, QQ, Fp

PASS = "pass"
FAIL = "fail"
SKIP = "skip"
INCONCLUSIVE = "inconclusive"
STATUSES = (PASS, FAIL, SKIP, INCONCLUSIVE)


def jsonable(value):
    """Exact scalars become strings, tuples become lists, dict keys strings."""
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, Fraction):
        return QQ.format(value)
    if isinstance(value, Fp):
        return str(value.v)
    if isinstance(value, QI2):
        return value.format()
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if hasattr(value, "coeffs"):
        return jsonable(value.coeffs)
    return str(value)


@dataclass
class Check:
    name: str
    anchor: str
    status: str
    expected: object = None
    actual: object = None
    witness: object = None
    reason: str = ""
    duration: float = 0.0

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")

    @property
    def ok(self) -> bool:
        return self.status != FAIL

    def to_json(self, timing: bool = True) -> dict:
        out = {
            "name": self.name,
            "anchor": self.anchor,
            "status": self.status,
            "expected": jsonable(self.expected),
            "actual": jsonable(self.actual),
            "witness": jsonable(self.witness),
            "reason": self.reason,
        }
        if timing:
            out["duration"] = round(self.duration, 6)
        return out


def check(name: str, anchor: str, condition: bool, expected=None, actual=None, witness=None, reason: str = "") -> Check:
    return Check(name, anchor, PASS if condition else FAIL, expected, actual, witness, reason)


def expect_equal(name: str, anchor: str, expected, actual, witness=None, reason: str = "") -> Check:
    return check(name, anchor, expected == actual, expected, actual, witness, reason)


@contextmanager
def timed(checks: list):
    """Spread the elapsed time evenly over the checks appended inside the block."""
    start = len(checks)
    t0 = time.perf_counter()
    yield
    new = checks[start:]
    if new:
        share = (time.perf_counter() - t0) / len(new)
        for c in new:
            c.duration = share


@dataclass
class Report:
    suite: str
    seed: int
    config: dict = field(default_factory=dict)
    checks: list = field(default_factory=list)

    def ordered(self) -> list:
        return sorted(self.checks, key=lambda c: c.name)

    @property
    def failed(self) -> list:
        return [c for c in self.checks if c.status == FAIL]

    @property
    def success(self) -> bool:
        return not self.failed

    def counts(self) -> dict:
        out = {s: 0 for s in STATUSES}
        for c in self.checks:
            out[c.status] += 1
        return out

    def to_json(self, timing: bool = True) -> dict:
        return {
            "suite": self.suite,
            "seed": self.seed,
            "config": jsonable(self.config),
            "success": self.success,
            "counts": self.counts(),
            "checks": [c.to_json(timing) for c in self.ordered()],
        }

    def dumps(self, timing: bool = True) -> str:
        return json.dumps(self.to_json(timing), indent=2, sort_keys=True)

    def summary(self) -> str:
        lines = [f"suite {self.suite} (seed {self.seed})"]
        for c in self.ordered():
            line = f"  [{c.status.upper():>12}] {c.name}"
            if c.status != PASS:
                detail = c.reason or f"expected {jsonable(c.expected)}, got {jsonable(c.actual)}"
                line += f": {detail}"
            lines.append(line)
        counts = self.counts()
        lines.append("  " + ", ".join(f"{counts[s]} {s}" for s in STATUSES))
        return "\n".join(lines)


def merge(suite: str, seed: int, config: Optional[dict], *groups: list) -> Report:
    checks = [c for g in groups for c in g]
    return Report(suite, seed, dict(config or {}), checks)
