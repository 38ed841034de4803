"""Structured pass/fail records with a deterministic JSON form."""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path
from typing import Any

from . import __version__

PLUMBING = "plumbing"


@dataclass
class Check:
    id: str
    anchor: str
    passed: bool
    detail: str = ""
    status: str = ""
    degree: int | None = None
    parameter_independent: bool | None = None
    data: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if not self.status:
            self.status = "pass" if self.passed else "fail"

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"check": self.id, "anchor": self.anchor, "pass": self.passed,
                               "status": self.status}
        if self.degree is not None:
            out["degree"] = self.degree
        if self.parameter_independent is not None:
            out["parameter_independent"] = self.parameter_independent
        if self.detail:
            out["detail"] = self.detail
        if self.data:
            out["data"] = self.data
        return out


def canonical_json(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def digest(inputs: Any) -> str:
    blob = json.dumps(inputs, sort_keys=True, separators=(",", ":"), ensure_ascii=False)
    return hashlib.sha256(blob.encode()).hexdigest()


@dataclass
class VerificationReport:
    suite: str
    inputs: dict[str, Any] = field(default_factory=dict)
    checks: list[Check] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def add(self, check: Check) -> Check:
        self.checks.append(check)
        return check

    def extend(self, other: "VerificationReport") -> None:
        self.checks.extend(other.checks)
        self.notes.extend(n for n in other.notes if n not in self.notes)

    @property
    def passed(self) -> bool:
        return all(c.passed or c.status == "skipped" for c in self.checks)

    @property
    def warnings(self) -> list[Check]:
        return [c for c in self.checks if c.status == "warn"]

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed and c.status != "skipped"]

    def by_id(self, check_id: str) -> list[Check]:
        return [c for c in self.checks if c.id == check_id]

    def to_dict(self) -> dict[str, Any]:
        return {
            "suite": self.suite,
            "tool_version": __version__,
            "input_digest": digest(self.inputs),
            "inputs": self.inputs,
            "pass": self.passed,
            "notes": self.notes,
            "checks": [c.to_dict() for c in self.checks],
        }

    def to_json(self) -> str:
        return canonical_json(self.to_dict())

    def to_text(self) -> str:
        lines = [f"suite {self.suite}: {'PASS' if self.passed else 'FAIL'}"]
        for c in self.checks:
            where = f" @{c.degree}" if c.degree is not None else ""
            tag = c.status.upper()
            extra = "" if c.parameter_independent in (None, True) else " [parameter-dependent]"
            lines.append(f"  {tag:7} {c.id}{where}{extra}  {c.detail}".rstrip())
        for n in self.notes:
            lines.append(f"  note: {n}")
        return "\n".join(lines) + "\n"

    def write(self, path: str | Path, sidecar: bool = True) -> None:
        """Write the canonical body; the timestamp goes only to ``<path>.meta.json``."""
        path = Path(path)
        path.write_text(self.to_json())
        if sidecar:
            meta = {"written_at": datetime.now(timezone.utc).isoformat(timespec="seconds"),
                    "input_digest": digest(self.inputs)}
            path.with_name(path.name + ".meta.json").write_text(canonical_json(meta))
