"""Reproduction cases and their aggregate report."""
from __future__ import annotations

import json
from collections import Counter
from dataclasses import asdict, dataclass, field

PASS = "pass"
FAIL = "fail"
DISCREPANCY = "discrepancy"
STATUSES = (PASS, FAIL, DISCREPANCY)


@dataclass
class Case:
    """One checked identity.

    ``discrepancy`` marks a published identity that cannot hold as printed
    because it contradicts another verified identity; ``notes`` says which.
    """

    id: str
    topic: str
    status: str
    computed: str
    expected: str
    notes: str = ""

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")

    @property
    def ok(self) -> bool:
        return self.status != FAIL


def compare(id: str, topic: str, computed, expected, notes: str = "", on_mismatch: str = FAIL) -> Case:
    status = PASS if computed == expected else on_mismatch
    return Case(id, topic, status, _text(computed), _text(expected), notes)


def _text(x) -> str:
    if isinstance(x, (list, tuple)):
        return "[" + ", ".join(_text(v) for v in x) + "]"
    return str(x)


@dataclass
class ReproReport:
    cases: list[Case] = field(default_factory=list)

    def extend(self, cases) -> None:
        seen = {c.id for c in self.cases}
        for c in cases:
            if c.id in seen:
                raise ValueError(f"duplicate case id {c.id}")
            seen.add(c.id)
            self.cases.append(c)

    @property
    def summary(self) -> dict[str, int]:
        counts = Counter(c.status for c in self.cases)
        return {s: counts.get(s, 0) for s in STATUSES} | {"total": len(self.cases)}

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.cases)

    def get(self, id: str) -> Case:
        for c in self.cases:
            if c.id == id:
                return c
        raise KeyError(id)

    def to_json(self) -> dict:
        return {"summary": self.summary, "cases": [asdict(c) for c in self.cases]}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)

    def to_markdown(self) -> str:
        lines = ["| id | status | computed | expected | notes |", "|---|---|---|---|---|"]
        for c in self.cases:
            cells = [c.id, c.status, c.computed, c.expected, c.notes]
            lines.append("| " + " | ".join(x.replace("|", "\\|") for x in cells) + " |")
        s = self.summary
        lines.append("")
        lines.append(f"{s['pass']} pass, {s['fail']} fail, {s['discrepancy']} discrepancy ({s['total']} cases)")
        return "\n".join(lines)
