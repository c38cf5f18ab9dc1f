"""Flat-file formats: adjacency CSV, histogram/trace CSV and run-record JSON."""
from __future__ import annotations

import csv
import json
import os
from typing import Iterable

from .exceptions import MalformedGraph
from .graph import RegularGraph
from .mcsa import RunRecord

__all__ = [
    "save_adjacency",
    "load_adjacency",
    "write_histogram_csv",
    "write_trace_csv",
    "write_lambda_series_csv",
    "save_run_record",
    "load_run_record",
]

TRACE_HEADER = ("step", "best_lambda2", "coldest_temperature", "seconds")


def save_adjacency(path, graph: RegularGraph) -> None:
    """Write ``n`` lines of ``n`` comma-separated 0/1 cells, LF endings, no header."""
    lines = (",".join("1" if x else "0" for x in row) for row in graph.adj.tolist())
    with open(path, "w", newline="\n") as fh:
        fh.write("\n".join(lines))
        fh.write("\n")


def load_adjacency(path) -> RegularGraph:
    """Parse and validate an adjacency CSV; raises :class:`MalformedGraph`."""
    rows = []
    with open(path, newline="") as fh:
        for lineno, row in enumerate(csv.reader(fh), start=1):
            if not row:
                continue
            try:
                rows.append([int(cell) for cell in row])
            except ValueError:
                raise MalformedGraph(f"{os.fspath(path)}:{lineno}: non-integer cell") from None
    if not rows or any(len(r) != len(rows) for r in rows):
        raise MalformedGraph(f"{os.fspath(path)}: expected a square matrix")
    return RegularGraph.from_adjacency(rows)


def _write_rows(path, header: Iterable[str], rows: Iterable[Iterable]) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)


def write_histogram_csv(path, histogram) -> None:
    _write_rows(path, ("bin_lo", "count"), ((repr(lo), c) for lo, c in histogram))


def write_trace_csv(path, record: RunRecord) -> None:
    _write_rows(
        path,
        TRACE_HEADER,
        ((s.step, repr(s.best_lambda2), repr(s.coldest_temperature), repr(s.seconds)) for s in record.steps),
    )


def write_lambda_series_csv(path, values) -> None:
    _write_rows(path, ("index", "lambda2"), ((i, repr(float(v))) for i, v in enumerate(values)))


def save_run_record(path, record: RunRecord, **extra) -> None:
    doc = record.to_dict()
    doc.update(extra)
    with open(path, "w") as fh:
        json.dump(doc, fh, indent=2)
        fh.write("\n")


def load_run_record(path) -> RunRecord:
    with open(path) as fh:
        return RunRecord.from_dict(json.load(fh))
