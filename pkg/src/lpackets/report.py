"""Deterministic count reports.

A report is assembled from one pipeline run and renders to text or JSON with
a fixed field order, so identical inputs give byte-identical output whatever
exploration order the run used internally.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .rootdata import GroupSpec, whittaker_torsor_size
from .spectral import spectral_strata
from .springer import TABLE_VERSION
from .strata import stratified_strata

__all__ = ["StratumRow", "CountReport", "spectral_report", "stratified_report",
           "render_text", "render_json", "both_reports"]


@dataclass
class StratumRow:
    ss_label: str
    labels: dict
    group_desc: str
    packets: list            # [{"x": str, "size": int, "group": str}]

    @property
    def total(self) -> int:
        return sum(p["size"] for p in self.packets)


@dataclass
class CountReport:
    group: str
    cartan: str
    q: int
    pipeline: str
    strata: list = field(default_factory=list)
    oracle_total: int | None = None
    conventions: dict = field(default_factory=dict)

    @property
    def parameter_count(self) -> int:
        return sum(len(row.packets) for row in self.strata)

    @property
    def total(self) -> int:
        return sum(row.total for row in self.strata)

    @property
    def match(self):
        if self.oracle_total is None:
            return None
        return self.total == self.oracle_total


def _conventions(spec: GroupSpec) -> dict:
    return {
        "q_sqrt": "positive root of q",
        "whittaker_torsor": whittaker_torsor_size(spec),
        "table_version": TABLE_VERSION,
    }


def spectral_report(spec: GroupSpec, rng=None, oracle_total=None) -> CountReport:
    rows = []
    for st in spectral_strata(spec, rng=rng):
        rows.append(StratumRow(
            ss_label=st.ss.label(),
            labels={"class": st.pair.class_label()},
            group_desc=st.ext.description,
            packets=[{"x": e.x_label, "size": e.irr_count,
                      "group": _structure(e.centralizer)}
                     for e in st.elements],
        ))
    return CountReport(group=spec.name, cartan=spec.datum.cartan_label,
                       q=spec.q, pipeline="spectral", strata=rows,
                       oracle_total=oracle_total,
                       conventions=_conventions(spec))


def stratified_report(spec: GroupSpec, rng=None, oracle_total=None) -> CountReport:
    rows = []
    for st in stratified_strata(spec, rng=rng):
        rows.append(StratumRow(
            ss_label=st.ss.label(),
            labels={"cell": st.unip.label, "beta": st.beta.label},
            group_desc=st.group_desc,
            packets=[{"x": p.x_label, "size": p.packet_size,
                      "group": p.group_label}
                     for p in st.packets],
        ))
    return CountReport(group=spec.name, cartan=spec.datum.cartan_label,
                       q=spec.q, pipeline="stratified", strata=rows,
                       oracle_total=oracle_total,
                       conventions=_conventions(spec))


def _structure(g) -> str:
    from .springer import group_structure_label
    return group_structure_label(g)


def both_reports(spec: GroupSpec, rng=None, oracle_total=None):
    return (spectral_report(spec, rng=rng, oracle_total=oracle_total),
            stratified_report(spec, rng=rng, oracle_total=oracle_total))


# ---------------------------------------------------------------------------
# rendering

def _row_dict(row: StratumRow) -> dict:
    return {
        "ss": row.ss_label,
        "labels": row.labels,
        "group": row.group_desc,
        "packets": row.packets,
        "total": row.total,
    }


def report_dict(rep: CountReport) -> dict:
    return {
        "group": rep.group,
        "cartan": rep.cartan,
        "q": rep.q,
        "pipeline": rep.pipeline,
        "strata": [_row_dict(r) for r in rep.strata],
        "parameter_count": rep.parameter_count,
        "total": rep.total,
        "oracle_total": rep.oracle_total,
        "match": rep.match,
        "conventions": rep.conventions,
    }


def render_json(rep: CountReport) -> str:
    return json.dumps(report_dict(rep), indent=2)


def render_text(rep: CountReport) -> str:
    lines = [f"group {rep.group} ({rep.cartan}), q = {rep.q}, "
             f"pipeline = {rep.pipeline}"]
    for row in rep.strata:
        labels = " ".join(f"{k}={v}" for k, v in row.labels.items())
        lines.append(f"  s={row.ss_label} {labels} group={row.group_desc}: "
                     f"total {row.total}")
        for p in row.packets:
            lines.append(f"    x={p['x']} packet={p['group']} size={p['size']}")
    lines.append(f"parameters: {rep.parameter_count}")
    lines.append(f"packet-weighted total: {rep.total}")
    if rep.oracle_total is not None:
        verdict = "match" if rep.match else "MISMATCH"
        lines.append(f"oracle total: {rep.oracle_total} ({verdict})")
    conv = rep.conventions
    lines.append(f"conventions: sqrt(q) = {conv['q_sqrt']}; "
                 f"whittaker torsor size {conv['whittaker_torsor']}; "
                 f"tables v{conv['table_version']}")
    return "\n".join(lines) + "\n"
