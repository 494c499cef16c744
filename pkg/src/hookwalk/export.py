"""Bit-stable text formats: CSV tables and the tableau JSON document.

Every CSV has exactly one header row, comma separators, LF line endings,
and floats printed with 17 significant digits so they round-trip exactly.
Schemas (documented in the README):

    prob           r,prob
    corner         r,count,empirical,exact
    frequency      letter,count,normalized
    trajectory     t,card,y
    snapshot       position,card,sign
    stat report    name,kind,statistic,threshold,passed,samples

Tableaux serialize to JSON as {"shape": [...], "rows": [[...], ...]}.
"""

from __future__ import annotations

import csv
import json
from fractions import Fraction

from .shapes import StrictPartition
from .tableaux import ShiftedTableau


def fmt_float(x: float) -> str:
    """17 significant digits: enough for exact float64 round-trips."""
    return format(float(x), ".17g")


def parse_shape(text: str) -> StrictPartition:
    """Parse a comma-separated partition string like "4,2,1"."""
    try:
        parts = [int(p) for p in text.split(",") if p.strip() != ""]
    except ValueError as exc:
        raise ValueError(f"malformed shape {text!r}: {exc}") from None
    return StrictPartition(parts)


def format_word(letters) -> str:
    return ",".join(str(int(q)) for q in letters)


def tableau_to_json(t: ShiftedTableau) -> str:
    return json.dumps({"shape": list(t.shape.parts), "rows": t.to_lists()})


def tableau_from_json(text: str) -> ShiftedTableau:
    doc = json.loads(text)
    shape = StrictPartition(doc["shape"])
    return ShiftedTableau(doc["rows"], shape)


def _writer(fobj):
    return csv.writer(fobj, lineterminator="\n")


def write_prob_csv(fobj, table) -> None:
    w = _writer(fobj)
    w.writerow(["r", "prob"])
    for r, p in enumerate(table.probs):
        w.writerow([r, str(p) if table.exact else fmt_float(p)])


def write_corner_csv(fobj, counts, exact_probs) -> None:
    """Histogram over offsets r with empirical and exact columns."""
    total = sum(counts)
    w = _writer(fobj)
    w.writerow(["r", "count", "empirical", "exact"])
    for r, (c, p) in enumerate(zip(counts, exact_probs)):
        w.writerow([r, c, fmt_float(c / total), fmt_float(p)])


def write_frequency_csv(fobj, counts) -> None:
    total = sum(counts)
    w = _writer(fobj)
    w.writerow(["letter", "count", "normalized"])
    for letter, c in enumerate(counts):
        w.writerow([letter, int(c), fmt_float(c / total)])


def write_trajectory_csv(fobj, sample_steps, heights) -> None:
    """Rows grouped card by card, each in time order."""
    w = _writer(fobj)
    w.writerow(["t", "card", "y"])
    ncards = heights.shape[1]
    steps = [int(t) for t in sample_steps]
    for card in range(1, ncards + 1):
        col = heights[:, card - 1]
        w.writerows((steps[s], card, int(col[s])) for s in range(len(steps)))


def write_snapshot_csv(fobj, snapshot) -> None:
    w = _writer(fobj)
    w.writerow(["position", "card", "sign"])
    for p, card, sign in snapshot.entries:
        w.writerow([p, card, sign])


def write_stat_csv(fobj, reports) -> None:
    w = _writer(fobj)
    w.writerow(["name", "kind", "statistic", "threshold", "passed", "samples"])
    for r in reports:
        w.writerow(
            [r.name, r.kind, fmt_float(r.statistic), fmt_float(r.threshold),
             str(r.passed).lower(), r.samples]
        )
