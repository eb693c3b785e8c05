"""Machine-readable verification records.

A :class:`Report` captures one checked identity: claim id, the algebra and
inputs it was evaluated on, both sides as integer arrays, and the pass flag
(which is exactly entrywise equality of the two sides).  Canonical JSON omits
the elapsed time so that reruns are bit-identical; pass ``include_elapsed``
for profiling output.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction


def _plain(value):
    """Recursively convert matrices/vectors/Fractions to JSON-safe data."""
    if hasattr(value, "tolist"):
        return value.tolist()
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return value.numerator
        return [value.numerator, value.denominator]
    if isinstance(value, bool):
        return value
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    return value


@dataclass
class Report:
    claim: str
    algebra: str
    inputs: dict
    lhs: object
    rhs: object
    passed: bool
    elapsed: float = field(default=0.0, compare=False)

    def to_dict(self, include_elapsed=False):
        d = {
            "claim": self.claim,
            "algebra": self.algebra,
            "inputs": _plain(self.inputs),
            "lhs": _plain(self.lhs),
            "rhs": _plain(self.rhs),
            "pass": self.passed,
        }
        if include_elapsed:
            d["elapsed"] = self.elapsed
        return d

    def to_json(self, include_elapsed=False):
        return json.dumps(self.to_dict(include_elapsed), sort_keys=True)

    @classmethod
    def from_json(cls, text):
        d = json.loads(text)
        return cls(
            claim=d["claim"],
            algebra=d["algebra"],
            inputs=d["inputs"],
            lhs=d["lhs"],
            rhs=d["rhs"],
            passed=d["pass"],
            elapsed=d.get("elapsed", 0.0),
        )

    def summary_line(self):
        tag = "PASS" if self.passed else "FAIL"
        extra = " ".join(f"{k}={v}" for k, v in self.inputs.items())
        return f"{tag} {self.claim} [{self.algebra}] {extra}".rstrip()


def record(claim, algebra_name, inputs, lhs, rhs, elapsed=0.0):
    """Build a report; the pass flag is equality of the plain forms."""
    lhs_p = _plain(lhs)
    rhs_p = _plain(rhs)
    return Report(
        claim=claim,
        algebra=algebra_name,
        inputs=inputs,
        lhs=lhs_p,
        rhs=rhs_p,
        passed=lhs_p == rhs_p,
        elapsed=elapsed,
    )


def all_pass(reports):
    return all(r.passed for r in reports)
