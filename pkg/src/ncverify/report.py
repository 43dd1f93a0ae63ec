"""The JSON report shared by every CLI suite."""
from __future__ import annotations

import json
from dataclasses import dataclass, field

STATUSES = ("PASS", "FAIL", "SKIP")


@dataclass
class Report:
    suite: str
    params: dict = field(default_factory=dict)
    cases: list = field(default_factory=list)
    artifacts: dict = field(default_factory=dict)
    text: dict = field(default_factory=dict)  # rendered only by pretty()

    def add(self, case_id: str, status, detail: dict | None = None) -> None:
        if isinstance(status, bool):
            status = "PASS" if status else "FAIL"
        if status not in STATUSES:
            raise ValueError(status)
        self.cases.append({"id": case_id, "status": status, "detail": detail or {}})

    def extend(self, cases, prefix: str = "") -> None:
        for c in cases:
            self.add(prefix + c["id"], c["status"], c.get("detail"))

    @property
    def summary(self) -> dict:
        counts = {s: 0 for s in STATUSES}
        for c in self.cases:
            counts[c["status"]] += 1
        counts["total"] = len(self.cases)
        return counts

    @property
    def ok(self) -> bool:
        return all(c["status"] != "FAIL" for c in self.cases)

    @property
    def exit_code(self) -> int:
        return 0 if self.ok else 1

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "params": self.params,
            "cases": self.cases,
            "summary": self.summary,
            "artifacts": self.artifacts,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, indent=1) + "\n"

    def pretty(self) -> str:
        lines = [f"suite {self.suite}  " + " ".join(f"{k}={v}" for k, v in sorted(self.params.items()))]
        for c in self.cases:
            lines.append(f"  {c['status']:<4}  {c['id']}")
        s = self.summary
        lines.append(f"{s['PASS']} passed, {s['FAIL']} failed, {s['SKIP']} skipped")
        for name, text in self.text.items():
            lines.append(f"\n{name}:\n{text}")
        return "\n".join(lines) + "\n"
