"""Line-oriented representation files.

Format (whitespace-insensitive inside expressions, '#' starts a comment):

    field rational          # or: field fp 13
    vars x1 x2 x3
    row 0: x1, 0, 0, 0
    row 1: 0, x2, 0, 0
    row 2: 0, 0, x3, 0
    row 3: 0, 0, 0, x1^3 + x2^3 + x3^3
"""

from __future__ import annotations

from .algebra import PrimeField, QQ, VARS_X, parse_poly
from .algebra.parser import PolyParseError
from .detrep import SymDetRep, validate_rep
from .errors import InputError


def parse_rep_file(text: str) -> SymDetRep:
    field = None
    vars_seen = False
    rows: dict[int, list] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("field"):
            parts = line.split()
            if parts[1:] == ["rational"]:
                field = QQ
            elif len(parts) == 3 and parts[1] == "fp":
                try:
                    field = PrimeField(int(parts[2]))
                except ValueError:
                    raise InputError(f"line {lineno}: bad prime {parts[2]!r}") from None
            else:
                raise InputError(f"line {lineno}: expected 'field rational' or 'field fp Q'")
        elif line.startswith("vars"):
            if line.split() != ["vars", "x1", "x2", "x3"]:
                raise InputError(f"line {lineno}: expected 'vars x1 x2 x3'")
            vars_seen = True
        elif line.startswith("row"):
            if field is None or not vars_seen:
                raise InputError(f"line {lineno}: field and vars must come before rows")
            head, _, body = line.partition(":")
            parts = head.split()
            if len(parts) != 2 or not body:
                raise InputError(f"line {lineno}: expected 'row I: e, e, e, e'")
            try:
                idx = int(parts[1])
            except ValueError:
                raise InputError(f"line {lineno}: bad row index {parts[1]!r}") from None
            if idx not in range(4) or idx in rows:
                raise InputError(f"line {lineno}: row index {idx} out of range or repeated")
            exprs = body.split(",")
            if len(exprs) != 4:
                raise InputError(f"line {lineno}: row needs exactly 4 entries, got {len(exprs)}")
            entries = []
            for col, expr in enumerate(exprs):
                try:
                    entries.append(parse_poly(expr.strip(), VARS_X, field))
                except PolyParseError as e:
                    raise InputError(f"line {lineno}, entry {col + 1}: {e}") from None
            rows[idx] = entries
        else:
            raise InputError(f"line {lineno}: unrecognized directive {line.split()[0]!r}")
    if field is None:
        raise InputError("missing 'field' declaration")
    if not vars_seen:
        raise InputError("missing 'vars' declaration")
    missing = [i for i in range(4) if i not in rows]
    if missing:
        raise InputError(f"missing rows: {missing}")
    return validate_rep([rows[i] for i in range(4)], field)


def write_rep_file(rep: SymDetRep) -> str:
    lines = []
    if isinstance(rep.field, PrimeField):
        lines.append(f"field fp {rep.field.q}")
    else:
        lines.append("field rational")
    lines.append("vars x1 x2 x3")
    for i in range(4):
        entries = ", ".join(str(rep.entry(i, j)) for j in range(4))
        lines.append(f"row {i}: {entries}")
    return "\n".join(lines) + "\n"
