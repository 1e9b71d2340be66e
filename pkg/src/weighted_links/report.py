"""Serialization of :class:`~weighted_links.classify.LinkReport`.

JSON uses a fixed key order and compact separators so repeated runs are
byte-identical.  Rationals are written as ``"p/q"`` strings, never floats.
"""

from __future__ import annotations

import csv
import io
import json
from typing import Iterable, List

from .classify import LinkReport
from .exact import format_rational

JSON_KEYS = (
    "weights",
    "degree",
    "fano_index",
    "well_formed",
    "milnor_number",
    "divisor",
    "multiplicities",
    "betti2",
    "dim_Sd",
    "dim_G",
    "dim_moduli",
    "diffeo_type",
    "diagnostics",
)

CSV_COLUMNS = ("w0", "w1", "w2", "w3", "d", "I", "mu", "b2", "dim_Sd", "dim_G", "dim_moduli", "type")


def report_to_dict(r: LinkReport) -> dict:
    mu = r.milnor_number if r.milnor_integral else format_rational(r.milnor_number)
    mults = None
    if r.multiplicities is not None:
        mults = [[j, m] for j, m in sorted(r.multiplicities.items())]
    return {
        "weights": list(r.weights),
        "degree": r.degree,
        "fano_index": r.fano_index,
        "well_formed": r.well_formed,
        "milnor_number": mu,
        "divisor": r.divisor.to_triples(),
        "multiplicities": mults,
        "betti2": r.betti2,
        "dim_Sd": r.dim_Sd,
        "dim_G": r.dim_G,
        "dim_moduli": r.dim_moduli,
        "diffeo_type": str(r.diffeo_type),
        "diagnostics": list(r.diagnostics),
    }


def to_json(r: LinkReport) -> str:
    return json.dumps(report_to_dict(r), separators=(", ", ": "), ensure_ascii=True)


def to_jsonl(reports: Iterable[LinkReport]) -> str:
    return "".join(to_json(r) + "\n" for r in reports)


def summary_row(r: LinkReport) -> List[str]:
    d = report_to_dict(r)
    return [
        *map(str, d["weights"]),
        str(r.degree),
        str(r.fano_index),
        str(d["milnor_number"]),
        "" if r.betti2 is None else str(r.betti2),
        str(r.dim_Sd),
        str(r.dim_G),
        str(r.dim_moduli),
        d["diffeo_type"],
    ]


def to_csv(reports: Iterable[LinkReport]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in reports:
        writer.writerow(summary_row(r))
    return buf.getvalue()


def to_table(reports: Iterable[LinkReport]) -> str:
    rows = [list(CSV_COLUMNS)] + [summary_row(r) for r in reports]
    widths = [max(len(row[i]) for row in rows) for i in range(len(CSV_COLUMNS))]
    lines = []
    for row in rows:
        # last column is left-aligned free text
        cells = [c.rjust(wd) for c, wd in zip(row[:-1], widths)] + [row[-1]]
        lines.append("  ".join(cells).rstrip())
    return "\n".join(lines) + "\n"


def render(reports: List[LinkReport], fmt: str) -> str:
    if fmt == "json":
        return to_jsonl(reports)
    if fmt == "csv":
        return to_csv(reports)
    if fmt == "table":
        return to_table(reports)
    raise ValueError(f"unknown format {fmt!r}")
