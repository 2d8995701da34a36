"""Reports emitted by the command-line front end."""

from __future__ import annotations

import hashlib
import io
from pathlib import Path
from typing import Dict, List, Sequence

from pydantic import Field
from rich.console import Console
from rich.table import Table

from .._core import BaseKitModel, CheckResult, CheckStatus, KitConfiguration, RectakitError


class Report(BaseKitModel):
    """Everything one command produced.

    Rerunning a command on identical inputs yields the same report except for
    the ``timings`` block, which is always serialized last.
    """

    command: List[str] = Field(..., description="Command name and arguments")
    version: str = Field(..., description="Tool identification string")
    inputs: Dict[str, str] = Field(default_factory=dict, description="Input name -> sha256 of its content")
    results: List[CheckResult] = Field(default_factory=list)
    status: CheckStatus = Field(default=CheckStatus.PASS)
    timings: Dict[str, float] = Field(default_factory=dict, description="Seconds per check")

    @property
    def exit_code(self) -> int:
        """0 for PASS, 1 for FAIL, 2 when a check raised."""
        return {CheckStatus.PASS: 0, CheckStatus.FAIL: 1}.get(CheckStatus(self.status), 2)


def aggregate(results: Sequence[CheckResult]) -> CheckStatus:
    """ERROR if any check raised, otherwise PASS only when every result passed."""
    if any(r.status == CheckStatus.ERROR for r in results):
        return CheckStatus.ERROR
    return CheckStatus.PASS if all(r.passed for r in results) else CheckStatus.FAIL


def fingerprint_file(path: str | Path) -> str:
    digest = hashlib.sha256()
    with open(path, "rb") as f:
        for block in iter(lambda: f.read(1 << 16), b""):
            digest.update(block)
    return digest.hexdigest()


def fingerprint_text(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def passed(name: str, ok: bool, **details: object) -> CheckResult:
    return CheckResult(name=name, status=CheckStatus.PASS if ok else CheckStatus.FAIL, details=details)


def errored(name: str, error: Exception) -> CheckResult:
    """A check that raised; library errors keep their machine-readable code."""
    if isinstance(error, RectakitError):
        return CheckResult(name=name, status=CheckStatus.ERROR, details={"code": error.code, "message": error.message, **error.details})
    return CheckResult(name=name, status=CheckStatus.ERROR, details={"code": type(error).__name__, "message": str(error)})


def new_report(command: Sequence[str], config: KitConfiguration) -> Report:
    return Report(command=list(command), version=config.describe())


def render_json(report: Report) -> str:
    return report.model_dump_json(indent=2) + "\n"


def render_text(report: Report) -> str:
    """The report as aligned lines: one row per check, then the status."""
    console = Console(file=io.StringIO(), record=True, width=120, color_system=None, force_terminal=False, markup=False, highlight=False)
    console.print(f"{' '.join(report.command)}  ({report.version})")
    for name, digest in report.inputs.items():
        console.print(f"  input {name}: sha256 {digest}")
    table = Table(show_edge=False, box=None, pad_edge=False)
    table.add_column("check")
    table.add_column("status")
    table.add_column("details", overflow="fold")
    for result in report.results:
        summary = ", ".join(f"{k}={v}" for k, v in result.details.items() if not isinstance(v, (list, dict)))
        table.add_row(result.name, str(result.status), summary)
    console.print(table)
    console.print(f"status: {report.status}")
    return console.export_text()


def render(report: Report, config: KitConfiguration) -> str:
    return render_text(report) if config.output_format == "text" else render_json(report)
