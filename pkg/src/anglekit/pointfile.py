"""Plain-text point files.

One point per line, 2 or 3 whitespace-separated fields. Each field is either
a rational ``p/q``, an integer, or a decimal/float literal. Lines starting
with ``#`` (and blank lines) are ignored and not preserved on write. The
parsed config is exact-mode iff every field is a rational or integer
literal; a single decimal literal anywhere switches the whole file to float
mode. Exact configs round-trip bit-exactly; float coordinates are written
with 17 significant digits, which reproduces the binary64 values exactly.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

from .geom import (
    EXACT,
    FLOAT,
    DegenerateInputError,
    GeometryError,
    PointConfig,
    point2,
    point3,
    points_coincide,
)

_RATIONAL_RE = re.compile(r"^[+-]?\d+/\d+$")
_INTEGER_RE = re.compile(r"^[+-]?\d+$")


class PointParseError(GeometryError):
    """Malformed point file; carries the offending 1-based line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


def _classify(field: str, lineno: int):
    """Return (is_exact, value-as-Fraction-or-float)."""
    if _RATIONAL_RE.match(field):
        num, den = field.split("/")
        if int(den) == 0:
            raise PointParseError(f"zero denominator in {field!r}", lineno)
        return True, Fraction(int(num), int(den))
    if _INTEGER_RE.match(field):
        return True, Fraction(int(field))
    try:
        value = float(field)
    except ValueError:
        raise PointParseError(f"malformed field {field!r}", lineno) from None
    if not math.isfinite(value):
        raise PointParseError(f"non-finite coordinate {field!r}", lineno)
    return False, value


def parse_config(text: str, label: str = "") -> PointConfig:
    """Parse a point file into a PointConfig (mode and dim inferred)."""
    rows: list[tuple[int, list]] = []
    all_exact = True
    dim = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) not in (2, 3):
            raise PointParseError(
                f"expected 2 or 3 fields, got {len(fields)}", lineno
            )
        if dim is None:
            dim = len(fields)
        elif len(fields) != dim:
            raise PointParseError(
                f"dimension mismatch: file started with {dim} fields", lineno
            )
        values = []
        for field in fields:
            is_exact, value = _classify(field, lineno)
            all_exact = all_exact and is_exact
            values.append(value)
        rows.append((lineno, values))
    if not rows:
        raise PointParseError("no points in input", 1)
    mode = EXACT if all_exact else FLOAT
    points = []
    for lineno, values in rows:
        if mode == FLOAT:
            values = [float(v) for v in values]
        if dim == 2:
            points.append(point2(*values))
        else:
            points.append(point3(*values))
    try:
        return PointConfig(tuple(points), mode, label)
    except DegenerateInputError as exc:
        # locate the duplicate to report its line number
        for j in range(len(points)):
            for i in range(j):
                if points_coincide(points[i], points[j]):
                    raise PointParseError(
                        f"duplicate of the point on line {rows[i][0]}", rows[j][0]
                    ) from exc
        raise PointParseError(str(exc), rows[-1][0]) from exc


def _format_scalar(value, mode: str) -> str:
    if mode == EXACT:
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"
    out = format(value, ".17g")
    # keep integer-valued floats parsing back as float mode
    return out + ".0" if _INTEGER_RE.match(out) else out


def write_config(config: PointConfig) -> str:
    """Serialize a config; parse_config(write_config(c)) reproduces c."""
    if not config.points:
        return ""
    ncols = config.dim
    lines = []
    for p in config.points:
        coords = p.coords()[:ncols]
        lines.append(" ".join(_format_scalar(v, config.mode) for v in coords))
    return "\n".join(lines) + "\n"
