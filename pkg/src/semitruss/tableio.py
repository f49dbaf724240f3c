"""Text formats for Cayley tables, semi-truss bundles and pair maps.

Cayley table format: line 1 is the carrier size n, followed by n lines of n
space-separated integers; row a lists a*0 ... a*(n-1).  Blank lines and lines
starting with '#' are ignored.  A bundle holds two or three table blocks
(diamond, circ, optional lambda) separated by lines containing only "---".
Serialization is canonical, so parse(serialize(op)) round-trips bit-exactly.
"""

from __future__ import annotations

import re
from pathlib import Path

from .core import FiniteBinaryOp, Table
from .errors import ParseError, RangeError, SizeMismatch
from .yang_baxter import PairMap

_TOKEN = re.compile(r"\S+")


def _significant_lines(text: str) -> list[tuple[int, str]]:
    """(1-based line number, raw line) pairs, with blanks and '#' comments dropped."""
    out = []
    for i, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        out.append((i, line))
    return out


def _parse_int(token: re.Match, line_no: int, source: str) -> int:
    try:
        return int(token.group())
    except ValueError:
        raise ParseError(
            f"expected an integer, got {token.group()!r}",
            line=line_no,
            column=token.start() + 1,
            source=source,
        ) from None


def _parse_table_lines(
    lines: list[tuple[int, str]], source: str
) -> tuple[int, Table]:
    if not lines:
        raise ParseError("empty table block", source=source)
    head_no, head = lines[0]
    head_tokens = list(_TOKEN.finditer(head))
    if len(head_tokens) != 1:
        raise ParseError(
            "first line must hold exactly the carrier size",
            line=head_no,
            column=1,
            source=source,
        )
    n = _parse_int(head_tokens[0], head_no, source)
    if n < 1:
        raise ParseError(f"carrier size must be >= 1, got {n}", line=head_no, source=source)
    body = lines[1:]
    if len(body) != n:
        raise ParseError(
            f"expected {n} table rows, found {len(body)}",
            line=body[-1][0] if body else head_no,
            source=source,
        )
    rows = []
    for line_no, line in body:
        tokens = list(_TOKEN.finditer(line))
        if len(tokens) != n:
            raise ParseError(
                f"expected {n} entries in this row, found {len(tokens)}",
                line=line_no,
                column=1,
                source=source,
            )
        row = []
        for token in tokens:
            value = _parse_int(token, line_no, source)
            if not 0 <= value < n:
                raise RangeError(
                    value, n, line=line_no, column=token.start() + 1, source=source
                )
            row.append(value)
        rows.append(tuple(row))
    return n, tuple(rows)


def parse_cayley_text(text: str, source: str = "<string>") -> FiniteBinaryOp:
    """Parse one Cayley table; rejects ragged rows, bad counts and
    out-of-range entries with positions."""
    n, rows = _parse_table_lines(_significant_lines(text), source)
    return FiniteBinaryOp(n, rows)


def parse_cayley(path) -> FiniteBinaryOp:
    path = Path(path)
    return parse_cayley_text(path.read_text(), source=str(path))


def serialize_cayley(op: FiniteBinaryOp) -> str:
    lines = [str(op.n)]
    lines.extend(" ".join(str(v) for v in row) for row in op.table)
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# bundles

_SEPARATOR = "---"


def parse_bundle_text(
    text: str, source: str = "<string>"
) -> tuple[FiniteBinaryOp, FiniteBinaryOp, Table | None]:
    """Parse a semi-truss bundle: diamond, circ, and optional lambda blocks."""
    blocks: list[list[tuple[int, str]]] = [[]]
    for i, line in enumerate(text.splitlines(), start=1):
        if line.strip() == _SEPARATOR:
            blocks.append([])
            continue
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        blocks[-1].append((i, line))
    blocks = [b for b in blocks if b]
    if len(blocks) not in (2, 3):
        raise ParseError(
            f"bundle must hold 2 or 3 table blocks separated by '{_SEPARATOR}', "
            f"found {len(blocks)}",
            source=source,
        )
    dn, drows = _parse_table_lines(blocks[0], source)
    cn, crows = _parse_table_lines(blocks[1], source)
    if dn != cn:
        raise SizeMismatch(f"diamond block has n={dn} but circ block has n={cn}")
    diamond = FiniteBinaryOp(dn, drows)
    circ = FiniteBinaryOp(cn, crows)
    lam: Table | None = None
    if len(blocks) == 3:
        ln, lrows = _parse_table_lines(blocks[2], source)
        if ln != dn:
            raise SizeMismatch(f"lambda block has n={ln} but carrier has n={dn}")
        lam = lrows
    return diamond, circ, lam


def parse_bundle(path) -> tuple[FiniteBinaryOp, FiniteBinaryOp, Table | None]:
    path = Path(path)
    return parse_bundle_text(path.read_text(), source=str(path))


def serialize_bundle(
    diamond: FiniteBinaryOp, circ: FiniteBinaryOp, lam: Table | None = None
) -> str:
    parts = [serialize_cayley(diamond), _SEPARATOR + "\n", serialize_cayley(circ)]
    if lam is not None:
        parts.append(_SEPARATOR + "\n")
        parts.append(serialize_cayley(FiniteBinaryOp(diamond.n, lam)))
    return "".join(parts)


# ---------------------------------------------------------------------------
# pair maps

_ARROW_LINE = re.compile(r"^\s*(\d+)\s+(\d+)\s*->\s*(\d+)\s+(\d+)\s*$")


def serialize_pairmap(r: PairMap) -> str:
    lines = [str(r.n)]
    n = r.n
    for a in range(n):
        for b in range(n):
            x, y = r.pairs[a * n + b]
            lines.append(f"{a} {b} -> {x} {y}")
    return "\n".join(lines) + "\n"


def parse_pairmap_text(text: str, source: str = "<string>") -> PairMap:
    lines = _significant_lines(text)
    if not lines:
        raise ParseError("empty pair map", source=source)
    head_no, head = lines[0]
    tokens = list(_TOKEN.finditer(head))
    if len(tokens) != 1:
        raise ParseError("first line must hold exactly the carrier size",
                         line=head_no, source=source)
    n = _parse_int(tokens[0], head_no, source)
    body = lines[1:]
    if len(body) != n * n:
        raise ParseError(f"expected {n * n} map lines, found {len(body)}",
                         line=body[-1][0] if body else head_no, source=source)
    pairs: list[tuple[int, int]] = []
    for idx, (line_no, line) in enumerate(body):
        m = _ARROW_LINE.match(line)
        if not m:
            raise ParseError("expected 'a b -> x y'", line=line_no, column=1, source=source)
        a, b, x, y = (int(g) for g in m.groups())
        if (a, b) != divmod(idx, n):
            raise ParseError(
                f"map lines must appear in row-major order; expected pair {divmod(idx, n)}",
                line=line_no, source=source,
            )
        for v in (x, y):
            if not 0 <= v < n:
                raise RangeError(v, n, line=line_no, source=source)
        pairs.append((x, y))
    return PairMap(n, tuple(pairs))
