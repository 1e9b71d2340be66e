"""Golden corpus of worked examples.

The corpus is a JSON-lines file: one object per line with ``weights`` and
``degree`` plus any subset of the report fields written by
:func:`weighted_links.report.report_to_dict`, and two bookkeeping fields,
``provenance`` (``"published"``, ``"derived"`` or ``"trivial"``) and
``citation`` (a short free-text source note).  Blank lines are ignored.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
import json
from pathlib import Path
from typing import Any, Dict, List, Tuple
import warnings

from .classify import analyze
from .report import JSON_KEYS, report_to_dict
from .wps import make_weights

PROVENANCES = ("published", "derived", "trivial")


class GoldenCorpusError(ValueError):
    def __init__(self, lineno: int, message: str):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}")


@dataclass(frozen=True)
class GoldenCase:
    weights: Tuple[int, ...]
    degree: int
    expected: Dict[str, Any]
    provenance: str
    citation: str
    lineno: int = 0

    def mismatches(self) -> Dict[str, Tuple[Any, Any]]:
        """``{field: (expected, actual)}`` for every field that differs."""
        actual = report_to_dict(analyze(make_weights(self.weights), self.degree))
        return {k: (v, actual[k]) for k, v in self.expected.items() if actual[k] != v}


def _parse_line(lineno: int, line: str) -> GoldenCase:
    try:
        obj = json.loads(line)
    except json.JSONDecodeError as exc:
        raise GoldenCorpusError(lineno, f"invalid JSON ({exc.msg})") from None
    if not isinstance(obj, dict):
        raise GoldenCorpusError(lineno, "expected a JSON object")
    for key in ("weights", "degree", "provenance", "citation"):
        if key not in obj:
            raise GoldenCorpusError(lineno, f"missing field {key!r}")
    if obj["provenance"] not in PROVENANCES:
        raise GoldenCorpusError(lineno, f"unknown provenance {obj['provenance']!r}")
    unknown = set(obj) - set(JSON_KEYS) - {"provenance", "citation"}
    if unknown:
        raise GoldenCorpusError(lineno, f"unknown fields {sorted(unknown)}")
    expected = {k: obj[k] for k in JSON_KEYS if k in obj and k not in ("weights", "degree")}
    return GoldenCase(
        weights=tuple(obj["weights"]),
        degree=obj["degree"],
        expected=expected,
        provenance=obj["provenance"],
        citation=obj["citation"],
        lineno=lineno,
    )


def load_golden_corpus(path) -> List[GoldenCase]:
    text = Path(path).read_text(encoding="utf-8")
    cases = [
        _parse_line(lineno, line)
        for lineno, line in enumerate(text.splitlines(), start=1)
        if line.strip()
    ]
    if not cases:
        warnings.warn(f"golden corpus {path} is empty", stacklevel=2)
    return cases


def default_corpus_path():
    return resources.files("weighted_links") / "data" / "golden.jsonl"
