import json
import logging
import sys

from rich.console import Console
from rich.logging import RichHandler
from rich.markup import escape
from rich.table import Table

from data.documents import dumps

CONSOLE = Console(highlight=False)


def setup_logging(verbose: bool = False):
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.INFO,
        format="%(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(console=Console(stderr=True), show_path=False)],
        force=True,
    )


def banner(title: str, **params):
    """Experiment-style header: the title, then one tab-indented line per parameter."""
    CONSOLE.print(title)
    for key, value in params.items():
        CONSOLE.print(f"\t{key.replace('_', ' ').capitalize()}: {value}")


def _cell(value) -> str:
    if isinstance(value, (dict, list)):
        return escape(json.dumps(value, ensure_ascii=False))
    return "" if value is None else escape(str(value))


def report_table(report: dict) -> Table:
    """A rich table with exactly the content of a SieveReport dict."""
    table = Table(title=report["title"])
    if report["kind"] == "table":
        table.add_column("Row")
        for column in report["columns"]:
            table.add_column(f"{column} (printed)")
            table.add_column(f"{column} (recomputed)")
        table.add_column("Status")
        for row in report["rows"]:
            cells = [escape(row["label"])]
            for column in report["columns"]:
                cells += [_cell(row["printed"].get(column)), _cell(row["recomputed"].get(column))]
            status = row["status"] if row["discrepancy"] is None else escape(f"{row['status']} [{row['discrepancy']}]")
            style = "red" if row["discrepancy"] is not None else "yellow" if row["status"] == "unchecked" else None
            table.add_row(*cells, status, style=style)
        return table

    for column in report["columns"]:
        table.add_column(column.capitalize())
    for row in report["rows"]:
        table.add_row(*(_cell(row[column]) for column in report["columns"]))
    return table


def print_report(report: dict, as_json: bool = False):
    if as_json:
        sys.stdout.write(dumps(report))
        return
    CONSOLE.print(report_table(report))
    if report["kind"] == "table":
        CONSOLE.print(f"\tDiscrepancies: {report['discrepancies']}")
        CONSOLE.print(f"\tUnchecked: {report['unchecked']}")
    else:
        CONSOLE.print(f"\tFeasible: {report['feasible']}")
