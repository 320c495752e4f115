"""Suite reports, JSON persistence and graph export."""

from __future__ import annotations

import dataclasses
import datetime
import json
from pathlib import Path
from typing import Any

from ..config import InputError
from ..graph import Graph, to_dot, to_edgelist

PASS, FAIL, INDETERMINATE = "pass", "fail", "indeterminate"


@dataclasses.dataclass(frozen=True)
class Claim:
    id: str
    paper_ref: str
    expected: str
    observed: Any
    status: str

    def as_dict(self) -> dict:
        return dataclasses.asdict(self)


@dataclasses.dataclass
class SuiteReport:
    suite: str
    config: dict
    claims: list[Claim]
    timestamp: str = dataclasses.field(
        default_factory=lambda: datetime.datetime.now(datetime.timezone.utc).isoformat(timespec="seconds")
    )
    timings: dict = dataclasses.field(default_factory=dict)

    @property
    def ok(self) -> bool:
        """No claim failed (indeterminate claims are budget limits, not failures)."""
        return all(c.status != FAIL for c in self.claims)

    @property
    def status(self) -> str:
        return PASS if self.ok else FAIL

    def claims_json(self) -> str:
        """Claims only, ordered by id: the part that must be reproducible."""
        return json.dumps([c.as_dict() for c in sorted(self.claims, key=lambda c: c.id)], sort_keys=True, ensure_ascii=False)

    def as_dict(self) -> dict:
        return {
            "suite": self.suite,
            "timestamp": self.timestamp,
            "config": self.config,
            "status": self.status,
            "claims": [c.as_dict() for c in sorted(self.claims, key=lambda c: c.id)],
            "timings": self.timings,
        }


def report_store(report: SuiteReport, path: str | Path) -> Path:
    path = Path(path)
    try:
        path.write_text(json.dumps(report.as_dict(), sort_keys=True, indent=2, ensure_ascii=False) + "\n", encoding="utf-8")
    except OSError as exc:
        raise OSError(f"cannot write report to {path}: {exc}") from exc
    return path


def render_graph(g: Graph, fmt: str, groups=None) -> str:
    if fmt == "edgelist":
        return to_edgelist(g)
    if fmt == "dot":
        return to_dot(g, groups)
    raise InputError(f"unknown graph format {fmt!r} (use edgelist or dot)")


def export(g: Graph, fmt: str, path: str | Path) -> Path:
    text = render_graph(g, fmt)
    path = Path(path)
    with open(path, "w", newline="\n") as fh:
        fh.write(text)
    return path
