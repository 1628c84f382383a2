"""
CSV, JSON and table output for the command-line harness.
"""
from pathlib import Path
from typing import Any, Dict, List, Union

import pandas as pd
from rich.console import Console
from rich.table import Table

from src.models.aco_models import REPORT_SCHEMA_VERSION, RunReport, StrategyCombo

# Stable CSV schema; bump REPORT_SCHEMA_VERSION when it changes.
CSV_COLUMNS = [
    "instance",
    "n",
    "selection",
    "deposit",
    "theta",
    "rep",
    "iter",
    "construct_ms",
    "update_ms",
    "best_len",
    "global_loads",
    "atomic_ops",
    "schema_version",
]
TIMING_COLUMNS = ["construct_ms", "update_ms"]
CELL_KEYS = ["instance", "selection", "deposit", "theta"]


def iteration_rows(report: RunReport, combo: StrategyCombo, rep: int) -> List[Dict[str, Any]]:
    """One CSV row per iteration of a run."""
    return [
        {
            "instance": report.instance,
            "n": report.n,
            "selection": combo.selection.value,
            "deposit": combo.deposit.value,
            "theta": combo.theta,
            "rep": rep,
            "iter": record.iteration,
            "construct_ms": record.construct_ms,
            "update_ms": record.update_ms,
            "best_len": record.best_length,
            "global_loads": record.ledger.global_loads,
            "atomic_ops": record.ledger.atomic_ops,
            "schema_version": REPORT_SCHEMA_VERSION,
        }
        for record in report.per_iteration
    ]


def rows_to_frame(rows: List[Dict[str, Any]]) -> pd.DataFrame:
    return pd.DataFrame(rows, columns=CSV_COLUMNS)


def write_csv(frame: pd.DataFrame, path: Union[str, Path]) -> None:
    """UTF-8, comma separated, header row, LF line endings."""
    frame.to_csv(path, index=False, encoding="utf-8", lineterminator="\n")


def write_report_json(report: RunReport, path: Union[str, Path]) -> None:
    Path(path).write_text(report.model_dump_json(indent=2) + "\n", encoding="utf-8")


def aggregate(frame: pd.DataFrame) -> pd.DataFrame:
    """
    Mean per-iteration timings per (instance, strategy) cell.

    slowdown is the cell's mean update time divided by the fastest update of
    the same instance.
    """
    cells = (
        frame.groupby(CELL_KEYS, sort=False)
        .agg(
            n=("n", "first"),
            construct_ms=("construct_ms", "mean"),
            update_ms=("update_ms", "mean"),
            best_len=("best_len", "min"),
            global_loads=("global_loads", "first"),
            atomic_ops=("atomic_ops", "first"),
        )
        .reset_index()
    )
    update = cells["update_ms"]
    fastest = update.groupby(cells["instance"]).transform("min")
    cells["slowdown"] = (update / fastest.where(fastest > 0)).fillna(1.0)
    return cells


def bench_table(cells: pd.DataFrame) -> Table:
    table = Table(title="Mean time per iteration (ms)")
    for header in ("instance", "selection", "deposit", "theta", "construct", "update", "slowdown", "best", "loads"):
        table.add_column(header, justify="left" if header in ("instance", "selection", "deposit") else "right")
    for row in cells.itertuples(index=False):
        table.add_row(
            f"{row.instance} ({row.n})",
            row.selection,
            row.deposit,
            str(row.theta),
            f"{row.construct_ms:.2f}",
            f"{row.update_ms:.2f}",
            f"{row.slowdown:.2f}x",
            str(row.best_len),
            f"{row.global_loads:,}",
        )
    return table


def print_solve_summary(console: Console, report: RunReport) -> None:
    records = report.per_iteration
    construct = sum(r.construct_ms for r in records) / len(records)
    update = sum(r.update_ms for r in records) / len(records)
    table = Table(title=f"{report.instance} (n={report.n}, m={report.m}, seed={report.seed})")
    table.add_column("metric")
    table.add_column("value", justify="right")
    table.add_row("best length", str(report.best_length))
    table.add_row("iterations", str(len(records)))
    table.add_row("construction ms/iter", f"{construct:.2f}")
    table.add_row("update ms/iter", f"{update:.2f}")
    table.add_row("deposit global loads/iter", f"{records[-1].ledger.global_loads:,}")
    ratio = records[-1].ledger.loads_to_atomics
    table.add_row("loads per atomic", "-" if ratio is None else f"{ratio:.2f}")
    fallbacks = sum(r.nn_fallbacks for r in records)
    if fallbacks:
        table.add_row("nn fallbacks", str(fallbacks))
    console.print(table)
