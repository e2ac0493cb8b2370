"""Report documents and their JSON / CSV / aligned-table renderings."""
from __future__ import annotations

import csv
import io
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

from .qpoly import QPolynomial

STATUSES = ("PASS", "FAIL", "SKIP", "REPORT")


@dataclass
class ReportDocument:
    tool_version: str
    datum: dict
    config: dict = field(default_factory=dict)
    suites: dict = field(default_factory=dict)
    timings: dict | None = None

    @property
    def has_fail(self) -> bool:
        return any(e.get("status") == "FAIL" for suite in self.suites.values() for e in suite["entries"])

    @property
    def exit_code(self) -> int:
        return 1 if self.has_fail else 0

    def to_json(self) -> dict:
        doc = {
            "tool_version": self.tool_version,
            "datum": self.datum,
            "config": self.config,
            "suites": self.suites,
        }
        if self.timings is not None:
            doc["timings"] = self.timings
        return doc

    @classmethod
    def from_json(cls, data: dict) -> "ReportDocument":
        return cls(
            tool_version=data["tool_version"],
            datum=data["datum"],
            config=data.get("config", {}),
            suites=data.get("suites", {}),
            timings=data.get("timings"),
        )


def dumps_json(report: ReportDocument) -> str:
    return json.dumps(report.to_json(), indent=2) + "\n"


def parse_report(text: str) -> ReportDocument:
    return ReportDocument.from_json(json.loads(text))


def _rows(report: ReportDocument):
    for name, suite in report.suites.items():
        for i, entry in enumerate(suite["entries"]):
            key = entry.get("key", entry.get("mu", i))
            yield name, i, json.dumps(key, separators=(",", ":")), entry.get("status", ""), \
                json.dumps(entry, separators=(",", ":"))


def dumps_csv(report: ReportDocument) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["suite", "index", "key", "status", "payload"])
    for row in _rows(report):
        writer.writerow(row)
    return buf.getvalue()


def _poly(data) -> str:
    return "-" if data is None else str(QPolynomial.from_json(data))


def _table(headers: list[str], rows: list[list[str]]) -> str:
    widths = [max(len(h), *(len(r[i]) for r in rows)) if rows else len(h) for i, h in enumerate(headers)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip()]
    lines.append("  ".join("-" * w for w in widths))
    for r in rows:
        lines.append("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip())
    return "\n".join(lines)


def _fmt(x) -> str:
    return "-" if x is None else str(x)


def dumps_table(report: ReportDocument) -> str:
    d = report.datum
    out = [f"datum {d.get('type')}  rank {d.get('rank')}  positive roots {d.get('positive_roots')}"
           f"  |W| {d.get('weyl_order')}  lattice {d.get('lattice')}"]
    for name, suite in report.suites.items():
        out.append("")
        out.append(f"[{name}] {suite.get('status', '')}")
        entries = suite["entries"]
        layout = name if all("mu" in e for e in entries) else "generic"
        if layout == "fibers":
            rows = [[_fmt(e["mu"]), _poly(e["shriek_stable"]), _fmt(e["shriek_threshold"]),
                     _fmt(e["star_stable"]), _fmt(e["star_threshold"]), _poly(e["delta0"]), e["status"]]
                    for e in entries]
            out.append(_table(["mu", "shriek", "k!", "star", "k*", "delta0", "status"], rows))
        elif layout == "delta0":
            rows = [[_fmt(e["mu"]), _poly(e["delta0"]), _fmt(e["min_degree"]), e["status"]] for e in entries]
            out.append(_table(["mu", "delta0", "min deg", "status"], rows))
        else:
            rows = [[_fmt(e.get("key")), e.get("summary", ""), e["status"]] for e in entries]
            out.append(_table(["key", "summary", "status"], rows))
    if report.timings is not None:
        out.append("")
        out.append(_table(["suite", "seconds"], [[k, f"{v:.3f}"] for k, v in report.timings.items()]))
    return "\n".join(out) + "\n"


def render(report: ReportDocument, fmt: str) -> str:
    if fmt == "json":
        return dumps_json(report)
    if fmt == "csv":
        return dumps_csv(report)
    if fmt == "table":
        return dumps_table(report)
    raise ValueError(f"unknown format {fmt!r}")


def emit(report: ReportDocument, fmt: str, path: str | Path | None = None) -> int:
    """Write the rendering to path (stdout when None); return the number of bytes written."""
    text = render(report, fmt)
    data = text.encode("utf-8")
    if path is None or str(path) == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        Path(path).write_bytes(data)
    return len(data)
