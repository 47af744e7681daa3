from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any


@dataclass
class CheckReport:
    check_name: str
    verdict: bool
    witnesses: list[dict[str, Any]] = field(default_factory=list)
    context_summary: str = ""
    semigroup: str = ""
    prime: int | None = None
    timing_ms: float = 0.0
    details: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if not self.verdict and not self.witnesses:
            raise ValueError(f"{self.check_name}: a failing verdict needs a witness")

    def to_dict(self) -> dict[str, Any]:
        return {
            "check": self.check_name,
            "semigroup": self.semigroup,
            "prime": self.prime,
            "verdict": self.verdict,
            "witnesses": self.witnesses,
            "timing_ms": self.timing_ms,
            "context_summary": self.context_summary,
            "details": self.details,
        }

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> CheckReport:
        return cls(
            check_name=d["check"],
            verdict=d["verdict"],
            witnesses=d["witnesses"],
            context_summary=d.get("context_summary", ""),
            semigroup=d["semigroup"],
            prime=d["prime"],
            timing_ms=d["timing_ms"],
            details=d.get("details", {}),
        )

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False, **kw)

    def line(self) -> str:
        return f"{self.check_name}: {'PASS' if self.verdict else 'FAIL'}"
