"""The ``sgt-table v1`` text format and blank-line separated streams of it.

A block is the order ``n`` on one line, then ``n`` rows of ``n`` space
separated 0-based entries, then optional ``#`` comment lines.  The semigroup
name is written as the comment block, one line per name line.
"""

from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from .errors import ParseError, SemigroupError
from .semigroup import FiniteSemigroup


def dumps(S: FiniteSemigroup) -> str:
    lines = [str(S.order)]
    lines.extend(" ".join(str(int(v)) for v in row) for row in S.table)
    if S.name:
        lines.extend(f"# {part}" for part in S.name.split("\n"))
    return "\n".join(lines) + "\n"


def _parse_block(lines: list[tuple[int, str]]) -> FiniteSemigroup:
    first_no, first = lines[0]
    try:
        n = int(first.strip())
    except ValueError:
        raise ParseError(f"expected the order, got {first.strip()!r}", first_no) from None
    if n < 1:
        raise ParseError("order must be positive", first_no)
    body = lines[1:]
    rows: list[list[int]] = []
    comments: list[str] = []
    for line_no, text in body:
        if text.startswith("#"):
            comments.append(text[1:].removeprefix(" "))
            continue
        if comments:
            raise ParseError("table rows after a comment line", line_no)
        if len(rows) == n:
            raise ParseError(f"more than {n} table rows", line_no)
        try:
            row = [int(tok) for tok in text.split()]
        except ValueError:
            raise ParseError(f"non-integer entry in {text.strip()!r}", line_no) from None
        if len(row) != n:
            raise ParseError(f"expected {n} entries, got {len(row)}", line_no)
        bad = [v for v in row if not 0 <= v < n]
        if bad:
            raise ParseError(f"entry {bad[0]} outside [0, {n})", line_no)
        rows.append(row)
    if len(rows) != n:
        last = lines[-1][0]
        raise ParseError(f"expected {n} table rows, got {len(rows)}", last)
    try:
        return FiniteSemigroup(rows, name="\n".join(comments) or None)
    except SemigroupError as exc:
        raise ParseError(str(exc), first_no) from exc


def _blocks(lines: Iterable[str]) -> Iterator[list[tuple[int, str]]]:
    block: list[tuple[int, str]] = []
    for no, raw in enumerate(lines, start=1):
        text = raw.rstrip("\r\n")
        if not text.strip():
            if block:
                yield block
                block = []
            continue
        block.append((no, text))
    if block:
        yield block


def loads(text: str) -> FiniteSemigroup:
    blocks = list(_blocks(text.splitlines()))
    if len(blocks) != 1:
        raise ParseError(f"expected one table, found {len(blocks)}")
    return _parse_block(blocks[0])


def iter_stream(stream: TextIO | Iterable[str]) -> Iterator[FiniteSemigroup]:
    """Parse blank-line separated tables lazily."""
    for block in _blocks(stream):
        yield _parse_block(block)


def loads_many(text: str) -> list[FiniteSemigroup]:
    return list(iter_stream(text.splitlines()))


def dumps_many(semigroups: Iterable[FiniteSemigroup]) -> str:
    return "\n".join(dumps(S) for S in semigroups)


def read(path) -> FiniteSemigroup:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


def write(S: FiniteSemigroup, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(S))
