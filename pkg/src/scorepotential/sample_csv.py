"""CSV ingestion and emission for scored samples.

Contract: UTF-8, comma separator, header exactly ``id,score,response``,
score a decimal literal, response strictly 0 or 1.  File order is preserved
(it is the deterministic tie-breaker during ranking).
"""

from __future__ import annotations

import csv
import io
import math
from pathlib import Path
from typing import Iterable

from .errors import BadResponseValue, DuplicateId, EmptySample, MalformedRow
from .sample import ScoredRecord

HEADER = ["id", "score", "response"]


def parse_sample_csv(path) -> list[ScoredRecord]:
    """Read scored records from a CSV file, validating the full contract."""
    records: list[ScoredRecord] = []
    seen: set[str] = set()
    with open(path, encoding="utf-8", newline="") as handle:
        reader = csv.reader(handle)
        for line_no, row in enumerate(reader, start=1):
            if not row:
                continue
            if line_no == 1:
                if [cell.strip() for cell in row] != HEADER:
                    raise MalformedRow(1, "header must be exactly 'id,score,response'")
                continue
            if len(row) != 3:
                raise MalformedRow(line_no, f"expected 3 fields, got {len(row)}")
            record_id, score_text, response_text = (cell.strip() for cell in row)
            if not record_id:
                raise MalformedRow(line_no, "empty id")
            if record_id in seen:
                raise DuplicateId(record_id)
            seen.add(record_id)
            try:
                score = float(score_text)
            except ValueError:
                raise MalformedRow(line_no, f"score {score_text!r} is not a number") from None
            if not math.isfinite(score):
                raise MalformedRow(line_no, "score must be finite")
            if response_text not in ("0", "1"):
                raise BadResponseValue(line_no)
            records.append(ScoredRecord(record_id, score, int(response_text)))
    if not records:
        raise EmptySample()
    return records


def records_to_csv_text(records: Iterable[ScoredRecord]) -> str:
    """CSV text in the same format parse_sample_csv reads (full float precision)."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(HEADER)
    for record in records:
        writer.writerow([record.id, repr(record.score), record.response])
    return out.getvalue()


def write_sample_csv(records: Iterable[ScoredRecord], path) -> None:
    """Write records in the same format parse_sample_csv reads."""
    Path(path).write_text(records_to_csv_text(records), encoding="utf-8")
