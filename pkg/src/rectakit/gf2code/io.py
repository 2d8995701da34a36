"""Code file format: a header line ``n r`` followed by r basis rows of n characters."""

from __future__ import annotations

from pathlib import Path
from typing import List

from .._core import InvalidFormatError
from .bitvector import BitVector
from .codes import LinearCode, code_from_rows


def format_code(c: LinearCode) -> str:
    lines = [f"{c.n} {c.r}"]
    lines.extend(c.to_strings())
    return "\n".join(lines) + "\n"


def parse_code(text: str) -> LinearCode:
    lines = [line.strip() for line in text.splitlines() if line.strip()]
    if not lines:
        raise InvalidFormatError("code file", 1, "empty input")
    header = lines[0].split()
    if len(header) != 2 or not all(h.isdigit() for h in header):
        raise InvalidFormatError("code file", 1, "expected 'n r'")
    n, r = int(header[0]), int(header[1])
    if len(lines) - 1 != r:
        raise InvalidFormatError("code file", len(lines), f"expected {r} rows, found {len(lines) - 1}")
    rows: List[BitVector] = []
    for k, line in enumerate(lines[1:], start=2):
        if len(line) != n or set(line) - {"0", "1"}:
            raise InvalidFormatError("code file", k, f"expected {n} binary characters")
        rows.append(BitVector.from_string(line))
    code = code_from_rows(n, rows)
    if code.r != r:
        raise InvalidFormatError("code file", 1, f"rows have rank {code.r}, header says {r}")
    return code


def read_code(path: str | Path) -> LinearCode:
    return parse_code(Path(path).read_text())


def write_code(c: LinearCode, path: str | Path) -> None:
    Path(path).write_text(format_code(c))
