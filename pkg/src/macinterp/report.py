"""Pass/fail reports for identity checks."""
from __future__ import annotations

import json
import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Any

WITNESS_LIMIT = 4096
TRUNCATION_MARKER = "...[truncated]"


def truncate(text: str, limit: int = WITNESS_LIMIT) -> str:
    if len(text) <= limit:
        return text
    return text[:limit] + TRUNCATION_MARKER


@dataclass
class IdentityReport:
    identity: str
    params: dict[str, Any] = field(default_factory=dict)
    witnesses: list[dict[str, Any]] = field(default_factory=list)
    checked: int = 0
    elapsed_ms: float = 0.0

    @property
    def status(self) -> str:
        return "pass" if not self.witnesses else "fail"

    @property
    def passed(self) -> bool:
        return not self.witnesses

    def record(self, ok: bool, index, lhs=None, rhs=None, note: str | None = None) -> bool:
        self.checked += 1
        if not ok:
            w = {"index": _plain(index),
                 "lhs": truncate(str(lhs)), "rhs": truncate(str(rhs))}
            if note:
                w["note"] = note
            self.witnesses.append(w)
        return ok

    def merge(self, other: "IdentityReport") -> "IdentityReport":
        self.checked += other.checked
        self.witnesses.extend(other.witnesses)
        self.elapsed_ms += other.elapsed_ms
        return self

    def to_dict(self, timing: bool = True) -> dict[str, Any]:
        d = {"identity": self.identity, "params": _plain(self.params),
             "status": self.status, "checked": self.checked,
             "witnesses": self.witnesses}
        if timing:
            d["elapsed_ms"] = round(self.elapsed_ms, 3)
        return d

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing), sort_keys=True)

    def to_text(self, timing: bool = True) -> str:
        line = f"{self.identity}: {self.status.upper()} ({self.checked} checks"
        line += f", {self.elapsed_ms:.0f} ms)" if timing else ")"
        lines = [line]
        for w in self.witnesses[:5]:
            lines.append(f"  witness {w['index']}: lhs={w['lhs']} rhs={w['rhs']}")
        if len(self.witnesses) > 5:
            lines.append(f"  ... {len(self.witnesses) - 5} more")
        return "\n".join(lines)


def _plain(x):
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    return x


@contextmanager
def timed(report: IdentityReport):
    start = time.perf_counter()
    try:
        yield report
    finally:
        report.elapsed_ms += (time.perf_counter() - start) * 1000.0
