"""Bit-exact reader/writer for the graph6 one-line ASCII format.

A line is a size byte ``chr(63 + n)`` (short form, n <= 62 only) followed by
``ceil(n(n-1)/2 / 6)`` payload bytes. Each payload byte carries six bits of
the upper triangle, column by column, most significant bit first, offset by
63 to stay printable; the last byte is zero-padded. An optional
``>>graph6<<`` header may prefix the first line of a file.
"""

from __future__ import annotations

from typing import Iterator, TextIO

from .errors import (
    BadSizeByte,
    ByteOutOfRange,
    CorpusDecodeError,
    Graph6Error,
    HeaderMismatch,
    NTooLargeForSizeByte,
    TruncatedBits,
)
from .graphs import Graph, pair_count

HEADER = ">>graph6<<"
_MAX_SHORT_N = 62


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 line (surrounding whitespace and header allowed)."""
    s = line.strip()
    if s.startswith(">>"):
        if not s.startswith(HEADER):
            raise HeaderMismatch(f"unrecognized header on {s[:12]!r}")
        s = s[len(HEADER):]
    if not s:
        raise BadSizeByte("empty graph6 line")
    size = ord(s[0]) - 63
    if size == 63:
        raise BadSizeByte("long size encoding (n >= 63) is not supported")
    if not 1 <= size <= _MAX_SHORT_N:
        raise BadSizeByte(f"size byte {s[0]!r} does not encode n in 1..{_MAX_SHORT_N}")
    payload = s[1:]
    need = (pair_count(size) + 5) // 6
    if len(payload) != need:
        raise TruncatedBits(
            f"n={size} needs {need} payload bytes, got {len(payload)}"
        )
    adj = 0
    bit = 0
    for ch in payload:
        v = ord(ch) - 63
        if not 0 <= v <= 63:
            raise ByteOutOfRange(f"payload byte {ch!r} outside graph6 range")
        for k in range(5, -1, -1):  # most significant bit first
            if v >> k & 1:
                adj |= 1 << bit
            bit += 1
    adj &= (1 << pair_count(size)) - 1  # padding bits ignored
    return Graph(size, adj)


def write_graph6(g: Graph) -> str:
    """Encode a graph as a canonical short-form graph6 line (no header)."""
    if g.n > _MAX_SHORT_N:
        raise NTooLargeForSizeByte(f"short graph6 caps at n={_MAX_SHORT_N}, got {g.n}")
    out = [chr(63 + g.n)]
    nbits = pair_count(g.n)
    for start in range(0, nbits, 6):
        v = 0
        for k in range(6):
            if start + k < nbits and g.adj >> (start + k) & 1:
                v |= 1 << (5 - k)
        out.append(chr(63 + v))
    return "".join(out)


def stream_corpus(
    reader: TextIO,
    skip_bad: bool = False,
    on_bad=None,
) -> Iterator[tuple[int, Graph]]:
    """Yield (line_number, Graph) for each non-empty line of a reader.

    Decode failures raise CorpusDecodeError naming the line, unless
    ``skip_bad`` is set, in which case the line is dropped after calling
    ``on_bad(line_number, exc)`` if given. The ``>>graph6<<`` header is
    accepted on the first line only.
    """
    for lineno, raw in enumerate(reader, 1):
        line = raw.strip()
        if not line:
            continue
        if lineno == 1 and line == HEADER:
            continue
        try:
            if line.startswith(">>") and lineno > 1:
                raise CorpusDecodeError(lineno, "header allowed on the first line only")
            yield lineno, parse_graph6(line)
        except Graph6Error as exc:
            if not skip_bad:
                if isinstance(exc, CorpusDecodeError):
                    raise
                raise CorpusDecodeError(lineno, str(exc)) from exc
            if on_bad is not None:
                on_bad(lineno, exc)
