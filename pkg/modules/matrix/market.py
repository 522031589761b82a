"""
Matrix Market reader/writer for dense square matrices.

Supported on input:
- format: array | coordinate
- field: real | complex | integer
- symmetry: general | symmetric | hermitian (stored lower triangle expanded to full)

The writer always emits "array complex general" with 17 significant digits,
which round-trips IEEE doubles exactly.
"""

import cmath
import logging
from pathlib import Path

import numpy as np

from core.errors import MatrixMarketError
from modules.matrix.matrix import ComplexMatrix

logger = logging.getLogger(__name__)

BANNER = "%%MatrixMarket"
FORMATS = ("array", "coordinate")
FIELDS = ("real", "complex", "integer")
SYMMETRIES = ("general", "symmetric", "hermitian")
DIGITS = 17


def _data_lines(text: str):
    """Yield (line_number, tokens) for non-comment, non-blank lines after the header."""
    for number, raw in enumerate(text.splitlines(), start=1):
        if number == 1:
            continue
        line = raw.strip()
        if not line or line.startswith("%"):
            continue
        yield number, line.split()


def _parse_header(text: str) -> tuple[str, str, str]:
    first = text.splitlines()[0].strip() if text.strip() else ""
    tokens = first.split()
    if len(tokens) != 5 or tokens[0] != BANNER or tokens[1].lower() != "matrix":
        raise MatrixMarketError(f"malformed header: {first!r}", 1)
    fmt, field, symmetry = (t.lower() for t in tokens[2:])
    if fmt not in FORMATS:
        raise MatrixMarketError(f"unsupported format '{fmt}'", 1)
    if field not in FIELDS:
        raise MatrixMarketError(f"unsupported field '{field}'", 1)
    if symmetry not in SYMMETRIES:
        raise MatrixMarketError(f"unsupported symmetry '{symmetry}'", 1)
    return fmt, field, symmetry


def _parse_value(tokens: list[str], field: str, line_number: int) -> complex:
    expected = 2 if field == "complex" else 1
    if len(tokens) != expected:
        raise MatrixMarketError(
            f"expected {expected} value token(s) for field '{field}', got {len(tokens)}",
            line_number,
        )
    try:
        if field == "integer":
            value = complex(int(tokens[0]))
        elif field == "real":
            value = complex(float(tokens[0]))
        else:
            value = complex(float(tokens[0]), float(tokens[1]))
    except ValueError:
        raise MatrixMarketError(f"invalid {field} value: {' '.join(tokens)}", line_number)
    if not cmath.isfinite(value):
        raise MatrixMarketError(f"non-finite entry: {' '.join(tokens)}", line_number)
    return value


def _parse_int(token: str, line_number: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise MatrixMarketError(f"invalid integer '{token}'", line_number)


def _mirror(value: complex, symmetry: str) -> complex:
    return value.conjugate() if symmetry == "hermitian" else value


def parse_matrix_market(text: str) -> ComplexMatrix:
    """Parse Matrix Market text into a dense ComplexMatrix.

    Raises:
        MatrixMarketError: naming the offending line number.
    """
    fmt, field, symmetry = _parse_header(text)
    lines = _data_lines(text)

    try:
        size_line, size_tokens = next(lines)
    except StopIteration:
        raise MatrixMarketError("missing size line", len(text.splitlines()))

    expected_sizes = 2 if fmt == "array" else 3
    if len(size_tokens) != expected_sizes:
        raise MatrixMarketError(
            f"size line must have {expected_sizes} integers for {fmt} format", size_line
        )
    rows, cols = (_parse_int(t, size_line) for t in size_tokens[:2])
    if rows != cols:
        raise MatrixMarketError(f"non-square dimensions {rows}x{cols}", size_line)
    n = rows
    if n < 1:
        raise MatrixMarketError(f"dimension must be >= 1, got {n}", size_line)

    entries = np.zeros((n, n), dtype=np.complex128)

    if fmt == "array":
        # Column-major; symmetric storage lists the lower triangle only
        if symmetry == "general":
            positions = [(i, j) for j in range(n) for i in range(n)]
        else:
            positions = [(i, j) for j in range(n) for i in range(j, n)]
        count = 0
        for line_number, tokens in lines:
            if count >= len(positions):
                raise MatrixMarketError(
                    f"too many entries, expected {len(positions)}", line_number
                )
            i, j = positions[count]
            value = _parse_value(tokens, field, line_number)
            entries[i, j] = value
            if i != j and symmetry != "general":
                entries[j, i] = _mirror(value, symmetry)
            count += 1
        if count != len(positions):
            raise MatrixMarketError(
                f"expected {len(positions)} entries, found {count}", len(text.splitlines())
            )
    else:
        nnz = _parse_int(size_tokens[2], size_line)
        if nnz < 0:
            raise MatrixMarketError(f"negative entry count {nnz}", size_line)
        seen = {}
        for line_number, tokens in lines:
            if len(seen) >= nnz:
                raise MatrixMarketError(f"too many entries, expected {nnz}", line_number)
            if len(tokens) < 3:
                raise MatrixMarketError("coordinate entry needs row, column and value", line_number)
            i = _parse_int(tokens[0], line_number)
            j = _parse_int(tokens[1], line_number)
            if not (1 <= i <= n and 1 <= j <= n):
                raise MatrixMarketError(f"index ({i}, {j}) out of range for n={n}", line_number)
            if symmetry != "general" and i < j:
                raise MatrixMarketError(
                    f"upper-triangle entry ({i}, {j}) in {symmetry} storage", line_number
                )
            if (i, j) in seen:
                raise MatrixMarketError(
                    f"duplicate entry ({i}, {j}), first given on line {seen[(i, j)]}",
                    line_number,
                )
            seen[(i, j)] = line_number
            value = _parse_value(tokens[2:], field, line_number)
            entries[i - 1, j - 1] = value
            if i != j and symmetry != "general":
                entries[j - 1, i - 1] = _mirror(value, symmetry)
        if len(seen) != nnz:
            raise MatrixMarketError(
                f"expected {nnz} entries, found {len(seen)}", len(text.splitlines())
            )

    logger.debug(f"Parsed {fmt} {field} {symmetry} matrix, n={n}")
    return ComplexMatrix(entries)


def read_matrix_market(path) -> ComplexMatrix:
    """Read and parse a .mtx file."""
    path = Path(path)
    raw = path.read_bytes()
    try:
        text = raw.decode("utf-8")
    except UnicodeDecodeError as e:
        raise MatrixMarketError("file is not UTF-8 text", raw[: e.start].count(b"\n") + 1)
    logger.info(f"Reading matrix from {path}")
    return parse_matrix_market(text)


def _fmt(x: float) -> str:
    return f"{x:.{DIGITS}g}"


def serialize_matrix_market(A: ComplexMatrix) -> str:
    """Serialize as "array complex general", column-major."""
    lines = [f"{BANNER} matrix array complex general", f"{A.n} {A.n}"]
    entries = A.entries
    for j in range(A.n):
        for i in range(A.n):
            z = entries[i, j]
            lines.append(f"{_fmt(z.real)} {_fmt(z.imag)}")
    return "\n".join(lines) + "\n"


def write_matrix_market(A: ComplexMatrix, path) -> Path:
    """Write A to path. Returns the path written."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(serialize_matrix_market(A), encoding="utf-8")
    logger.info(f"Wrote {A.n}x{A.n} matrix to {path}")
    return path
