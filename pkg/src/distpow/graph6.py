"""graph6 encoding (one graph per line, upper-triangle bits in column order)."""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import Graph6Error
from .graph import Graph

HEADER = ">>graph6<<"


def _encode_n(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def write(g: Graph) -> str:
    bits = []
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            bits.append(row >> i & 1)
    bits.extend([0] * (-len(bits) % 6))
    chunks = (bits[p:p + 6] for p in range(0, len(bits), 6))
    body = "".join(chr(63 + int("".join(map(str, c)), 2)) for c in chunks)
    return _encode_n(g.n) + body


def _sextet(text: str, pos: int) -> int:
    c = ord(text[pos])
    if not 63 <= c <= 126:
        raise Graph6Error(f"character {text[pos]!r} outside the graph6 range", pos)
    return c - 63


def read(text: str) -> Graph:
    """Parse one graph6 string. An optional ``>>graph6<<`` header is accepted."""
    line = text.strip()
    base = 0
    if line.startswith(HEADER):
        line = line[len(HEADER):]
        base = len(HEADER)
    if not line:
        raise Graph6Error("empty graph6 string", base)
    pos = 0
    if line[0] == "~":
        if len(line) > 1 and line[1] == "~":
            width, pos = 6, 2
        else:
            width, pos = 3, 1
        if len(line) < pos + width:
            raise Graph6Error("truncated vertex-count header", base + len(line))
        n = 0
        for _ in range(width):
            n = (n << 6) | _sextet(line, pos)
            pos += 1
    else:
        n = _sextet(line, 0)
        pos = 1
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = line[pos:]
    if len(body) != need:
        raise Graph6Error(
            f"expected {need} data characters for n={n}, found {len(body)}",
            base + pos + min(len(body), need),
        )
    adj = [0] * n
    k = 0
    i, j = 0, 1
    for off in range(need):
        value = _sextet(line, pos + off)
        for shift in range(5, -1, -1):
            if k == nbits:
                if value & ((1 << (shift + 1)) - 1):
                    raise Graph6Error("non-zero padding bits", base + pos + off)
                break
            if value >> shift & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
            i += 1
            if i == j:
                i, j = 0, j + 1
    return Graph(n, tuple(adj))


def read_lines(lines: Iterable[str]) -> Iterator[Graph]:
    for number, line in enumerate(lines, 1):
        if not line.strip():
            continue
        try:
            yield read(line)
        except Graph6Error as exc:
            raise Graph6Error(f"line {number}: {exc.reason}", exc.offset) from None


def read_file(path) -> list[Graph]:
    with open(path, encoding="ascii", errors="surrogateescape") as fh:
        return list(read_lines(fh))


def write_file(path, graphs: Iterable[Graph]) -> None:
    with open(path, "w", encoding="ascii") as fh:
        for g in graphs:
            fh.write(write(g) + "\n")
