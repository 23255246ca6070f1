"""Claim results and report emission (JSON document plus CSV export)."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass, field
from typing import Any, Optional

VERIFIED = "verified"
REFUTED = "refuted"
INCONCLUSIVE = "inconclusive"
PARTIAL = "partially-verified"
SKIPPED = "skipped"

CLAIM_IDS = (
    "L2.3",
    "L2.4",
    "L2.5",
    "L2.6",
    "L2.7",
    "L2.8",
    "T1.3-sharp",
    "T1.4-sharp",
    "CMP-1.2",
    "CMP-1.5",
)


def _params_key(params: dict) -> tuple:
    return tuple((k, json.dumps(v, sort_keys=True)) for k, v in sorted(params.items()))


@dataclass
class ClaimResult:
    claim: str
    params: dict
    status: str
    lhs: Any = None
    rhs: Any = None
    margin: Any = None
    witness: Optional[dict] = None
    note: str = ""

    @property
    def verified(self) -> bool:
        return self.status in (VERIFIED, PARTIAL)

    def sort_key(self) -> tuple:
        return (CLAIM_IDS.index(self.claim) if self.claim in CLAIM_IDS else 99, _params_key(self.params))

    def to_dict(self) -> dict:
        d = asdict(self)
        d["verified"] = self.verified
        return d


@dataclass
class Report:
    tool_version: str
    backend: str
    grids: dict
    tol: float
    results: list = field(default_factory=list)
    wall_time: float = 0.0

    def counts(self) -> dict:
        out: dict = {}
        for r in self.results:
            out[r.status] = out.get(r.status, 0) + 1
        return dict(sorted(out.items()))

    def exit_code(self) -> int:
        statuses = {r.status for r in self.results}
        if REFUTED in statuses:
            return 1
        if INCONCLUSIVE in statuses:
            return 3
        return 0

    def to_dict(self) -> dict:
        return {
            "tool": "kfcrit",
            "tool_version": self.tool_version,
            "backend": self.backend,
            "grids": self.grids,
            "tol": self.tol,
            "summary": self.counts(),
            "results": [r.to_dict() for r in self.results],
            "wall_time": self.wall_time,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=False)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow(["claim", "params", "status", "lhs", "rhs", "margin"])
        for r in self.results:
            w.writerow([r.claim, json.dumps(r.params, sort_keys=True), r.status, r.lhs, r.rhs, r.margin])
        return buf.getvalue()
