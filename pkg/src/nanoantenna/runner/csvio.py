"""CSV serialization of sweep results.

Metadata goes first as ``# key=<json>`` comment lines, followed by a header
row and one row per axis point.  Floats are written with ``repr`` so that
reading the file back reproduces every value exactly.
"""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path

from .sweep import SweepResult


def _dump(result, stream):
    for key, value in result.metadata.items():
        stream.write(f"# {key}={json.dumps(value, sort_keys=True)}\n")
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(result.columns)
    for row in result.rows:
        writer.writerow([repr(float(v)) for v in row])


def write_csv(result, destination):
    """Write ``result`` to a path or an open text stream."""
    if hasattr(destination, "write"):
        _dump(result, destination)
        return
    path = Path(destination)
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            _dump(result, fh)
    except OSError as exc:
        raise OSError(f"cannot write {path}: {exc.strerror or exc}") from exc


def to_csv_string(result):
    buf = io.StringIO()
    _dump(result, buf)
    return buf.getvalue()


def _parse(lines):
    metadata = {}
    body = []
    for line in lines:
        if line.startswith("#") and not body:
            key, _, value = line[1:].strip().partition("=")
            metadata[key] = json.loads(value)
        elif line.strip():
            body.append(line)
    reader = csv.reader(body)
    columns = next(reader)
    rows = [tuple(float(v) for v in r) for r in reader]
    return SweepResult(columns, rows, metadata)


def read_csv(source):
    if hasattr(source, "read"):
        return _parse(source.read().splitlines())
    with open(source, encoding="utf-8") as fh:
        return _parse(fh.read().splitlines())
