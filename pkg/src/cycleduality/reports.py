"""Certificate and report types shared by the engines and the oracles."""

from __future__ import annotations

import dataclasses
import json
from fractions import Fraction
from typing import Optional

from .graphs import SignedCycle

__all__ = [
    "PackingCertificate",
    "HittingCertificate",
    "DualityReport",
    "report_to_obj",
    "report_to_json",
]


@dataclasses.dataclass(frozen=True)
class PackingCertificate:
    """A family of pairwise disjoint cycles and its target-touch count.

    ``score`` is the number of target vertices (resp. edges) covered,
    counted with multiplicity across the family's cycles.
    """

    cycles: tuple[SignedCycle, ...]
    disjointness: str  # "vertex" | "edge"
    score: int


@dataclasses.dataclass(frozen=True)
class HittingCertificate:
    """A vertex or edge set intended to meet every target cycle.

    ``hits_all`` is True when oracle-verified, None when verification was
    skipped (off, or enumeration cap exceeded).  False is never stored:
    an engine whose hitting set fails verification raises instead.
    """

    kind: str  # "vertex" | "edge"
    elements: frozenset[str]
    hits_all: Optional[bool]


@dataclasses.dataclass(frozen=True)
class DualityReport:
    """Two-sided certificate: packing, hitting set, checked inequality."""

    packing: PackingCertificate
    hitting: HittingCertificate
    inequality_verified: bool  # packing.score >= |hitting.elements|
    engine: str
    lp_objective: Optional[Fraction] = None
    gf2_rank: Optional[int] = None
    verification: str = "oracle"  # "off" | "oracle" | "exhaustive"
    conjectural: bool = False  # set only by the log-only undirected vertex mode


def report_to_obj(report: DualityReport) -> dict:
    """JSON-ready dict with deterministic member order."""
    return {
        "engine": report.engine,
        "packing": {
            "disjointness": report.packing.disjointness,
            "score": report.packing.score,
            "cycles": [
                {"vertices": list(c.vertices), "edges": list(c.edges)}
                for c in report.packing.cycles
            ],
        },
        "hitting": {
            "kind": report.hitting.kind,
            "elements": sorted(report.hitting.elements),
            "hits_all": report.hitting.hits_all,
        },
        "inequality_verified": report.inequality_verified,
        "lp_objective": None if report.lp_objective is None else str(report.lp_objective),
        "gf2_rank": report.gf2_rank,
        "verification": report.verification,
        "conjectural": report.conjectural,
    }


def report_to_json(report: DualityReport) -> str:
    return json.dumps(report_to_obj(report), indent=2, sort_keys=True) + "\n"
