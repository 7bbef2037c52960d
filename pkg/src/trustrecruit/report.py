"""CSV and manifest output for simulation runs."""

from __future__ import annotations

import csv
from pathlib import Path

METRIC_COLUMNS = ("interval", "avg_participants", "avg_mrt", "avg_overall_trust", "campaigns")
SUGGESTION_COLUMNS = ("interval", "requester", "participant", "implicit_trust", "intermediate_count")


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _write(path: Path, header, rows) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([_cell(v) for v in row])


def write_metrics_csv(result, out_dir) -> list[Path]:
    """One ``metrics_<strategy>.csv`` per strategy, suggestion dumps, and ``run.txt``."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    for strategy, series in result.metrics.items():
        path = out / f"metrics_{strategy}.csv"
        _write(path, METRIC_COLUMNS, ([getattr(m, c) for c in METRIC_COLUMNS] for m in series))
        written.append(path)
    for strategy, records in result.suggestions.items():
        if strategy != "multihop_fs":
            continue
        path = out / f"suggestions_{strategy}.csv"
        _write(path, SUGGESTION_COLUMNS, ([getattr(r, c) for c in SUGGESTION_COLUMNS] for r in records))
        written.append(path)
    manifest = out / "run.txt"
    manifest.write_text(
        "# resolved configuration; rerun with: trustrecruit run --config run.txt\n" + result.config.to_text(),
        encoding="utf-8",
    )
    written.append(manifest)
    return written
