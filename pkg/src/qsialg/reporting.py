"""Report records shared by the verification suites and the CLI.

A report is a list of named checks, each carrying a pass flag, the depth at
which the identity was certified (series order / sequence window, when
finite), and a printed witness when the check failed.  Checks are emitted in
name order so identical requests yield byte-identical documents; the
timestamp is the single nondeterministic field and can be suppressed.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from datetime import datetime, timezone

SCHEMA_VERSION = "1"


@dataclass
class Check:
    name: str
    passed: bool
    anchor: str = ""
    depth: str | None = None
    witness: str | None = None

    def as_dict(self) -> dict:
        d: dict = {"name": self.name, "pass": self.passed}
        if self.anchor:
            d["anchor"] = self.anchor
        if self.depth is not None:
            d["depth"] = self.depth
        if self.witness is not None:
            d["witness"] = self.witness
        return d


@dataclass
class Report:
    suite: str
    checks: list[Check] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    conventions: dict[str, str] = field(default_factory=dict)
    params: dict[str, object] = field(default_factory=dict)

    def add(self, name: str, passed: bool, anchor: str = "",
            depth: str | None = None, witness: str | None = None) -> Check:
        c = Check(name=name, passed=passed, anchor=anchor, depth=depth, witness=witness)
        self.checks.append(c)
        return c

    def extend(self, other: "Report") -> None:
        self.checks.extend(other.checks)
        for n in other.notes:
            if n not in self.notes:
                self.notes.append(n)
        self.conventions.update(other.conventions)

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def exit_code(self) -> int:
        return 0 if self.all_passed else 1

    def sorted_checks(self) -> list[Check]:
        return sorted(self.checks, key=lambda c: c.name)

    def as_dict(self, timestamp: bool = True) -> dict:
        checks = [c.as_dict() for c in self.sorted_checks()]
        doc: dict = {
            "schema_version": SCHEMA_VERSION,
            "suite": self.suite,
        }
        if timestamp:
            doc["generated_at"] = datetime.now(timezone.utc).isoformat()
        if self.params:
            doc["params"] = self.params
        if self.conventions:
            doc["conventions"] = self.conventions
        if self.notes:
            doc["notes"] = list(self.notes)
        doc["checks"] = checks
        doc["summary"] = {
            "total": len(checks),
            "passed": sum(c.passed for c in self.checks),
            "failed": sum(not c.passed for c in self.checks),
        }
        return doc

    def to_json(self, timestamp: bool = True) -> str:
        return json.dumps(self.as_dict(timestamp=timestamp), indent=2)

    def to_text(self) -> str:
        lines = [f"suite: {self.suite}"]
        for key, val in sorted(self.conventions.items()):
            lines.append(f"convention: {key} = {val}")
        for n in self.notes:
            lines.append(f"note: {n}")
        for c in self.sorted_checks():
            status = "pass" if c.passed else "FAIL"
            extra = f"  [{c.depth}]" if c.depth else ""
            lines.append(f"  {status}  {c.name}{extra}")
            if c.witness is not None:
                lines.append(f"        witness: {c.witness}")
        ok = sum(c.passed for c in self.checks)
        lines.append(f"{ok}/{len(self.checks)} checks passed")
        return "\n".join(lines)
