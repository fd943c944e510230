"""Plain-text formats: ``.kua`` (algebra), ``.kuf`` (function), ``.kuc`` (code).

Readers accept LF or CRLF, repeated blanks and ``#`` comment lines;
writers emit LF and single spaces.  Every reader error is a ParseError
naming the file and 1-based line.
"""
from __future__ import annotations

from pathlib import Path

from .codes import BlockCode
from .core import KUAlgebra, _as_table
from .errors import ParseError
from .function import KUFunction


def _significant(text):
    for lineno, raw in enumerate(text.replace("\r\n", "\n").split("\n"), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield lineno, line


def _read(path):
    return Path(path).read_text(encoding="utf-8")


def _int(tok, kind, path, lineno):
    try:
        return int(tok, 10)
    except ValueError:
        raise ParseError(kind, f"{tok!r} is not a decimal integer", path, lineno) from None


def parse_kua(text: str, path=None, check: bool = True):
    """Parse an algebra; with ``check=False`` return the raw table only."""
    lines = list(_significant(text))
    if not lines:
        raise ParseError("algebra", "missing order line", path, 1)
    lineno, first = lines[0]
    n = _int(first, "algebra", path, lineno)
    if n < 1:
        raise ParseError("algebra", f"order must be positive, got {n}", path, lineno)
    rows = lines[1:]
    if len(rows) != n:
        where = rows[n][0] if len(rows) > n else (rows[-1][0] if rows else lineno)
        raise ParseError("algebra", f"expected {n} table rows, found {len(rows)}", path, where)
    table = []
    for lineno, line in rows:
        vals = [_int(t, "algebra", path, lineno) for t in line.split()]
        if len(vals) != n:
            raise ParseError("algebra", f"row has {len(vals)} entries, expected {n}", path, lineno)
        for v in vals:
            if not 0 <= v < n:
                raise ParseError("algebra", f"entry {v} is outside [0, {n - 1}]", path, lineno)
        table.append(vals)
    if not check:
        return _as_table(table)
    return KUAlgebra(table)


def format_kua(X, comments=()) -> str:
    table = X.to_rows() if isinstance(X, KUAlgebra) else [list(r) for r in X]
    out = [f"# {c}" for c in comments]
    out.append(str(len(table)))
    out += [" ".join(str(v) for v in row) for row in table]
    return "\n".join(out) + "\n"


def read_kua(path, check: bool = True):
    return parse_kua(_read(path), str(path), check)


def write_kua(path, X, comments=()):
    Path(path).write_text(format_kua(X, comments), encoding="utf-8", newline="\n")


def parse_kuf(text: str, algebra: KUAlgebra, path=None) -> KUFunction:
    lines = list(_significant(text))
    if not lines:
        raise ParseError("function", "missing size line", path, 1)
    lineno, first = lines[0]
    m = _int(first, "function", path, lineno)
    if m < 0:
        raise ParseError("function", f"size must be non-negative, got {m}", path, lineno)
    body = lines[1:]
    if len(body) != m:
        where = body[m][0] if len(body) > m else (body[-1][0] if body else lineno)
        raise ParseError("function", f"expected {m} entries, found {len(body)}", path, where)
    labels, image, seen = [], [], set()
    for lineno, line in body:
        parts = line.split()
        if len(parts) != 2:
            raise ParseError("function", "expected '<label> <element-index>'", path, lineno)
        label, v = parts[0], _int(parts[1], "function", path, lineno)
        if not 0 <= v < algebra.order:
            raise ParseError(
                "function", f"element index {v} is outside [0, {algebra.order - 1}]", path, lineno
            )
        if label in seen:
            raise ParseError("function", f"duplicate label {label!r}", path, lineno)
        seen.add(label)
        labels.append(label)
        image.append(v)
    return KUFunction(algebra, labels, image)


def format_kuf(f: KUFunction, comments=()) -> str:
    out = [f"# {c}" for c in comments]
    out.append(str(f.size))
    out += [f"{l} {v}" for l, v in zip(f.labels, f.image)]
    return "\n".join(out) + "\n"


def read_kuf(path, algebra: KUAlgebra) -> KUFunction:
    return parse_kuf(_read(path), algebra, str(path))


def write_kuf(path, f: KUFunction, comments=()):
    Path(path).write_text(format_kuf(f, comments), encoding="utf-8", newline="\n")


def parse_kuc(text: str, path=None) -> BlockCode:
    words, seen = [], {}
    length = None
    for lineno, line in _significant(text):
        if set(line) - {"0", "1"}:
            raise ParseError("code", f"word {line!r} contains characters other than 0/1", path, lineno)
        if length is None:
            length = len(line)
        elif len(line) != length:
            raise ParseError("code", f"word has length {len(line)}, expected {length}", path, lineno)
        if line in seen:
            raise ParseError("code", f"duplicate word {line!r} (first on line {seen[line]})", path, lineno)
        seen[line] = lineno
        words.append(line)
    if not words:
        raise ParseError("code", "no code words", path, 1)
    return BlockCode(words)


def format_kuc(code, comments=()) -> str:
    words = code.words if isinstance(code, BlockCode) else list(code)
    out = [f"# {c}" for c in comments] + list(words)
    return "\n".join(out) + "\n"


def read_kuc(path) -> BlockCode:
    return parse_kuc(_read(path), str(path))


def write_kuc(path, code, comments=()):
    Path(path).write_text(format_kuc(code, comments), encoding="utf-8", newline="\n")


__all__ = [
    "format_kua",
    "format_kuc",
    "format_kuf",
    "parse_kua",
    "parse_kuc",
    "parse_kuf",
    "read_kua",
    "read_kuc",
    "read_kuf",
    "write_kua",
    "write_kuc",
    "write_kuf",
]
