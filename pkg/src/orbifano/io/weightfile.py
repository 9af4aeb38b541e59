from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional, Tuple

from orbifano.errors import InputError
from orbifano.toric.weights import WeightMatrix


@dataclass
class WeightFile:
    """Weight matrix plus the bundle classes listed after its `|` line."""

    weights: WeightMatrix
    bundles: List[Tuple[int, ...]] = field(default_factory=list)


def _int_rows(lines: List[str], where: str) -> List[List[int]]:
    try:
        return [[int(tok) for tok in ln.replace(",", " ").split()] for ln in lines]
    except ValueError as exc:
        raise InputError(f"{where}: entries must be integers ({exc})") from exc


def _content_lines(text: str) -> List[str]:
    out = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            out.append(line)
    return out


def _header(line: str, where: str) -> Tuple[int, int]:
    parts = _int_rows([line], where)[0]
    if len(parts) != 2 or parts[0] < 1 or parts[1] < 1:
        raise InputError(f"{where}: first line must be 'r m' with positive integers")
    return parts[0], parts[1]


def _columns(rows: List[List[int]], r: int, where: str) -> List[Tuple[int, ...]]:
    if len(rows) != r or len({len(row) for row in rows}) != 1:
        raise InputError(f"{where}: expected {r} rows of equal length")
    return [tuple(row[j] for row in rows) for j in range(len(rows[0]))]


def parse_weight_text(text: str, where: str = "<weights>") -> WeightFile:
    """Parse the weight-file format.

    First line `r m`, then r rows of m integers. An optional line starting
    with `|` opens the bundle section: r rows, one column per bundle. A line
    `labels a b c ...` anywhere before the matrix names the columns.
    """
    lines = _content_lines(text)
    labels: Optional[List[str]] = None
    if lines and lines[0].startswith("labels"):
        labels = lines[0].split()[1:]
        lines = lines[1:]
    if not lines:
        raise InputError(f"{where}: empty weight file")
    r, m = _header(lines[0], where)
    body = lines[1:]
    split = next((i for i, ln in enumerate(body) if ln.startswith("|")), len(body))
    matrix = _int_rows(body[:split], where)
    if len(matrix) != r or any(len(row) != m for row in matrix):
        raise InputError(f"{where}: expected {r} rows of {m} integers")
    bundles: List[Tuple[int, ...]] = []
    if split < len(body):
        bundles = _columns(_int_rows(body[split + 1 :], where), r, where)
    return WeightFile(WeightMatrix.of(matrix, labels), bundles)


def parse_weight_file(path: Path) -> WeightFile:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    return parse_weight_text(text, str(path))


def parse_bundle_file(path: Path, r: int) -> List[Tuple[int, ...]]:
    """Bundle file: an optional `r c` header, then r rows with one column per bundle."""
    try:
        lines = _content_lines(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    lines = [ln.lstrip("|").strip() for ln in lines if ln.strip("|").strip()]
    rows = _int_rows(lines, str(path))
    if len(rows) == r + 1 and len(rows[0]) == 2 and rows[0][0] == r:
        rows = rows[1:]
    return _columns(rows, r, str(path))


def parse_omega(text: str) -> Tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace(",", " ").split())
    except ValueError as exc:
        raise InputError(f"stability condition must be integers: {text!r}") from exc
