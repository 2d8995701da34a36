"""Generator file format: a header ``degree count`` then one 1-indexed image line per generator."""

from __future__ import annotations

from pathlib import Path
from typing import List, Sequence

from .._core import InvalidFormatError
from .permutation import Permutation


def format_generators(gens: Sequence[Permutation]) -> str:
    degree = gens[0].degree if gens else 0
    lines = [f"{degree} {len(gens)}"]
    lines.extend(" ".join(str(p) for p in g.to_one_indexed()) for g in gens)
    return "\n".join(lines) + "\n"


def parse_generators(text: str) -> List[Permutation]:
    lines = [(k, line.split()) for k, line in enumerate(text.splitlines(), start=1) if line.strip()]
    if not lines:
        raise InvalidFormatError("generator file", 1, "empty input")
    k, header = lines[0]
    if len(header) != 2 or not all(field.isdigit() for field in header):
        raise InvalidFormatError("generator file", k, "expected 'degree count'")
    degree, count = int(header[0]), int(header[1])
    if len(lines) - 1 != count:
        raise InvalidFormatError("generator file", k, f"header announces {count} generators, found {len(lines) - 1}")
    gens = []
    for k, fields in lines[1:]:
        if len(fields) != degree or not all(field.isdigit() for field in fields):
            raise InvalidFormatError("generator file", k, f"expected {degree} point images")
        try:
            gens.append(Permutation.from_one_indexed([int(f) for f in fields]))
        except ValueError as e:
            raise InvalidFormatError("generator file", k, str(e)) from e
    return gens


def read_generators(path: str | Path) -> List[Permutation]:
    return parse_generators(Path(path).read_text())


def write_generators(gens: Sequence[Permutation], path: str | Path) -> None:
    Path(path).write_text(format_generators(gens))
