"""Flat-file formats: code text files and canonical JSON."""
from __future__ import annotations

import json
from pathlib import Path

from .errors import ParseError
from .metric import Code


def parse_code_text(text: str) -> Code:
    """One binary string per line; ``#`` lines and blank lines are skipped."""
    words = []
    n = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if set(line) - {"0", "1"}:
            raise ParseError(f"line {lineno}: not a binary string: {line!r}")
        if n is None:
            n = len(line)
        elif len(line) != n:
            raise ParseError(f"line {lineno}: length {len(line)} differs from {n}")
        words.append(line)
    if not words:
        raise ParseError("code file contains no words")
    return Code(words)


def read_code(path: str | Path) -> Code:
    return parse_code_text(Path(path).read_text(encoding="utf-8"))


def format_code_text(code: Code, comments: list[str] | None = None) -> str:
    lines = [f"# {c}" for c in comments or []]
    lines.extend(code.strings())
    return "\n".join(lines) + "\n"


def write_code(path: str | Path, code: Code, comments: list[str] | None = None) -> None:
    Path(path).write_text(format_code_text(code, comments), encoding="utf-8")


def dumps(obj) -> str:
    """Deterministic JSON: sorted keys, fixed indentation, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"
