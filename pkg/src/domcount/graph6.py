"""Bit-exact graph6 parsing and writing, plus a plain edge-list format.

A graph6 record is an optional ``>>graph6<<`` header, a size field N(n)
(one byte 63+n for n <= 62, or ``~`` plus three bytes for n <= 258047, or
``~~`` plus six bytes beyond that), then ceil(C(n,2)/6) bytes.  Each byte
holds six upper-triangle adjacency bits, column-major -- (0,1), (0,2),
(1,2), (0,3), ... -- most significant bit first, offset by 63.  Trailing
padding bits must be zero; ``strict=False`` downgrades nonzero padding to
a warning.
"""

from __future__ import annotations

import warnings
from math import comb
from typing import Iterable, Iterator

from .errors import GraphParseError, SizeLimitError
from .graphs import MAX_VERTICES, Graph, GraphBuilder

HEADER = b">>graph6<<"

_BYTE_BITS = [tuple(value >> (5 - i) & 1 for i in range(6)) for value in range(64)]


def _decode_size(data: bytes, base: int) -> tuple[int, int]:
    """Decode the N(n) size field at ``base``; return (n, bytes consumed)."""
    if data[base] != 126:
        return data[base] - 63, 1
    if len(data) >= base + 2 and data[base + 1] == 126:
        if len(data) < base + 8:
            raise GraphParseError("truncated size field", position=base)
        n = 0
        for b in data[base + 2 : base + 8]:
            n = n << 6 | (b - 63)
        return n, 8
    if len(data) < base + 4:
        raise GraphParseError("truncated size field", position=base)
    n = 0
    for b in data[base + 1 : base + 4]:
        n = n << 6 | (b - 63)
    return n, 4


def parse_graph6(record: str | bytes, strict: bool = True) -> Graph:
    """Parse one graph6 record into a Graph.

    Raises :class:`GraphParseError` (with a byte offset) on bytes outside
    [63, 126], a truncated or over-long record, or nonzero padding bits in
    strict mode; raises :class:`SizeLimitError` past the vertex cap.
    """
    if isinstance(record, str):
        try:
            data = record.encode("ascii")
        except UnicodeEncodeError as exc:
            raise GraphParseError(f"non-ASCII graph6 record: {exc}") from None
    else:
        data = bytes(record)
    data = data.rstrip(b"\r\n")
    base = 0
    if data.startswith(HEADER):
        base = len(HEADER)
    if base == len(data):
        raise GraphParseError("empty graph6 record", position=base)
    for offset in range(base, len(data)):
        if not 63 <= data[offset] <= 126:
            raise GraphParseError(
                f"byte {data[offset]} out of graph6 range [63, 126] "
                f"at offset {offset}",
                position=offset,
            )
    n, consumed = _decode_size(data, base)
    if n > MAX_VERTICES:
        raise SizeLimitError(f"graph6 record has n={n}, cap is {MAX_VERTICES}")
    body = data[base + consumed :]
    nbits = comb(n, 2)
    nbytes = (nbits + 5) // 6
    if len(body) < nbytes:
        raise GraphParseError(
            f"truncated graph6 record: expected {nbytes} adjacency bytes, "
            f"got {len(body)}",
            position=len(data),
        )
    if len(body) > nbytes:
        raise GraphParseError(
            f"trailing bytes after graph6 record (expected {nbytes} "
            f"adjacency bytes, got {len(body)})",
            position=base + consumed + nbytes,
        )
    bits: list[int] = []
    for b in body:
        bits.extend(_BYTE_BITS[b - 63])
    if any(bits[nbits:]):
        message = "nonzero padding bits in graph6 record"
        if strict:
            raise GraphParseError(message, position=base + consumed + nbytes - 1)
        warnings.warn(message)
    builder = GraphBuilder(n)
    k = 0
    for j in range(n):
        for i in range(j):
            if bits[k]:
                builder.add_edge(i, j)
            k += 1
    return builder.build()


def write_graph6(g: Graph) -> str:
    """Canonical graph6 record (no header, no newline) for ``g``."""
    n = g.n
    if n <= 62:
        out = [n + 63]
    elif n <= 258047:
        out = [126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63]
    else:  # unreachable under MAX_VERTICES, kept for the format's sake
        out = [126, 126] + [(n >> (6 * k) & 63) + 63 for k in range(5, -1, -1)]
    acc = 0
    width = 0
    for j in range(n):
        column = g.rows[j]
        for i in range(j):
            acc = acc << 1 | (column >> i & 1)
            width += 1
            if width == 6:
                out.append(acc + 63)
                acc = 0
                width = 0
    if width:
        out.append((acc << (6 - width)) + 63)
    return bytes(out).decode("ascii")


def iter_graph6(lines: Iterable[str | bytes], strict: bool = True) -> Iterator[Graph]:
    """Parse a stream of graph6 records, one per line; blank lines skipped."""
    for line in lines:
        stripped = line.strip() if isinstance(line, str) else line.strip()
        if not stripped:
            continue
        yield parse_graph6(stripped, strict=strict)


def parse_edge_list(text: str) -> Graph:
    """Parse edge-list text: a vertex count line, then ``u v`` lines.

    ``#`` starts a comment; blank lines are skipped; duplicate edges are
    ignored.  Errors carry 1-based line numbers.
    """
    builder: GraphBuilder | None = None
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if builder is None:
            if len(tokens) != 1:
                raise GraphParseError(
                    f"expected a single vertex count on line {line_number}",
                    position=line_number,
                )
            try:
                n = int(tokens[0])
            except ValueError:
                raise GraphParseError(
                    f"invalid vertex count {tokens[0]!r} on line {line_number}",
                    position=line_number,
                ) from None
            if n < 0:
                raise GraphParseError(
                    f"negative vertex count on line {line_number}",
                    position=line_number,
                )
            if n > MAX_VERTICES:
                raise SizeLimitError(f"edge list has n={n}, cap is {MAX_VERTICES}")
            builder = GraphBuilder(n)
            continue
        if len(tokens) != 2:
            raise GraphParseError(
                f"expected 'u v' on line {line_number}", position=line_number
            )
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise GraphParseError(
                f"non-integer endpoint on line {line_number}", position=line_number
            ) from None
        if u == v:
            raise GraphParseError(
                f"loop {u}-{v} on line {line_number}", position=line_number
            )
        if not (0 <= u < builder.n and 0 <= v < builder.n):
            raise GraphParseError(
                f"edge ({u}, {v}) out of range for n={builder.n} "
                f"on line {line_number}",
                position=line_number,
            )
        builder.add_edge(u, v)
    if builder is None:
        raise GraphParseError("missing vertex count line")
    return builder.build()


def write_edge_list(g: Graph) -> str:
    """Edge-list text for ``g``: vertex count, then one ``u v`` line per edge."""
    lines = [str(g.n)]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
