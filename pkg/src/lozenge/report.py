"""Verification reports shared by the check functions, suites and CLI."""

import json
from dataclasses import dataclass, field
from fractions import Fraction


def exact_str(value):
    """Render an exact value as an integer or "num/den" string."""
    if isinstance(value, bool):
        return value
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, int):
        return str(value)
    return value


def _jsonable(value):
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, (Fraction, int)) and not isinstance(value, bool):
        return exact_str(value)
    if value is None or isinstance(value, (str, float, bool)):
        return value
    return str(value)


def _sort_key(params):
    return json.dumps(_jsonable(params), sort_keys=True)


@dataclass
class VerificationReport:
    """Outcome of a batch of exact checks; passes iff there are no failures."""

    suite: str
    grid: str = ""
    cases: int = 0
    failures: list = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self):
        return not self.failures

    def record(self, params, expected, actual, what=None):
        """Count one case; keep it as a failure when the two values differ."""
        self.cases += 1
        if expected != actual:
            self.fail(params, expected, actual, what, count=False)
            return False
        return True

    def fail(self, params, expected, actual, what=None, count=True):
        if count:
            self.cases += 1
        entry = {"params": params, "expected": expected, "actual": actual}
        if what:
            entry["check"] = what
        self.failures.append(entry)

    def merge(self, other):
        self.cases += other.cases
        self.failures.extend(other.failures)
        return self

    def to_dict(self, include_elapsed=False):
        failures = sorted((_jsonable(f) for f in self.failures),
                          key=lambda f: (_sort_key(f["params"]), f.get("check", "")))
        out = {
            "suite": self.suite,
            "grid": self.grid,
            "cases": self.cases,
            "passed": self.passed,
            "failures": failures,
        }
        if include_elapsed:
            out["elapsed"] = round(self.elapsed, 3)
        return out

    def to_json(self, include_elapsed=False):
        return json.dumps(self.to_dict(include_elapsed), sort_keys=True, indent=2)

    def summary(self):
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.suite}: {self.cases} cases, {len(self.failures)} failures ({self.grid})"
