"""graph6 and sparse6 text encodings.

graph6 packs the upper triangle of the adjacency matrix in column-major
order (bit (i,j), i < j, ordered by j then i) into big-endian 6-bit groups,
each printed as ``chr(group + 63)``.  sparse6 is an edge-list bit stream of
(b, x) pairs behind a ``:`` prefix.  Both tolerate the optional
``>>graph6<<`` / ``>>sparse6<<`` headers on input; output never carries a
header.  Padding bits must be zero for graph6 and one for sparse6.
"""
from __future__ import annotations

from .core import Graph, GraphBuilder, max_vertices
from .errors import Graph6Error

GRAPH6_HEADER = ">>graph6<<"
SPARSE6_HEADER = ">>sparse6<<"


def _encode_order(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return chr(126) + _pack_bits(n, 18)
    if n <= 68719476735:
        return chr(126) + chr(126) + _pack_bits(n, 36)
    raise Graph6Error(f"graph order {n} exceeds the 36-bit format limit")


def _pack_bits(value: int, width: int) -> str:
    return "".join(chr(((value >> s) & 63) + 63) for s in range(width - 6, -6, -6))


def _decode_order(line: str) -> tuple[int, int]:
    """Return (n, data_start_offset); offsets are into `line`."""
    if not line:
        raise Graph6Error("empty input", offset=0)
    c = ord(line[0])
    if c != 126:
        if not 63 <= c <= 125:
            raise Graph6Error(f"invalid order byte {line[0]!r}", offset=0)
        return c - 63, 1
    if len(line) >= 2 and ord(line[1]) == 126:
        chars, start = line[2:8], 2
    else:
        chars, start = line[1:4], 1
    width = len(chars)
    if (start == 1 and width < 3) or (start == 2 and width < 6):
        raise Graph6Error("truncated order prefix", offset=len(line))
    n = 0
    for i, ch in enumerate(chars):
        c = ord(ch)
        if not 63 <= c <= 126:
            raise Graph6Error(f"invalid order byte {ch!r}", offset=start + i)
        n = n << 6 | (c - 63)
    return n, start + width


def write_graph6(g: Graph) -> str:
    """Canonical graph6 line for `g` (no header, zero padding bits)."""
    n = g.n
    out = [_encode_order(n)]
    acc = 0
    width = 0
    for j in range(1, n):
        col = g.rows[j]
        for i in range(j):
            acc = acc << 1 | (col >> i & 1)
            width += 1
            if width == 6:
                out.append(chr(acc + 63))
                acc = width = 0
    if width:
        out.append(chr((acc << (6 - width)) + 63))
    return "".join(out)


def parse_graph6(line: str, cap: int | None = None) -> Graph:
    """Decode one graph6 line; the ``>>graph6<<`` header is tolerated."""
    line = line.strip()
    if line.startswith(GRAPH6_HEADER):
        line = line[len(GRAPH6_HEADER):]
    if line.startswith(":"):
        raise Graph6Error("sparse6 input passed to the graph6 parser; use parse_sparse6", offset=0)
    n, start = _decode_order(line)
    cap = max_vertices() if cap is None else cap
    if n > cap:
        raise Graph6Error(f"graph order {n} exceeds the configured maximum {cap}", offset=0)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = line[start:]
    if len(body) < need:
        raise Graph6Error(
            f"truncated payload: expected {need} bytes, got {len(body)}",
            offset=len(line),
        )
    if len(body) > need:
        raise Graph6Error("trailing data after payload", offset=start + need)
    builder = GraphBuilder(n, cap=cap)
    bit_index = 0
    for pos, ch in enumerate(body):
        c = ord(ch)
        if not 63 <= c <= 126:
            raise Graph6Error(f"invalid payload byte {ch!r}", offset=start + pos)
        group = c - 63
        for s in range(5, -1, -1):
            bit = group >> s & 1
            if bit_index >= nbits:
                if bit:
                    raise Graph6Error("nonzero padding bits", offset=start + pos)
                continue
            if bit:
                i, j = _bit_position(bit_index)
                builder.add_edge(i, j)
            bit_index += 1
    return builder.freeze()


def _bit_position(index: int) -> tuple[int, int]:
    """Inverse of the column-major upper-triangle enumeration."""
    j = 1
    while j * (j - 1) // 2 + j <= index:
        j += 1
    i = index - j * (j - 1) // 2
    return i, j


# ---------------------------------------------------------------------------
# sparse6


def _edge_bit_width(n: int) -> int:
    k = 1
    while 1 << k < n:
        k += 1
    return k


def write_sparse6(g: Graph) -> str:
    """sparse6 line for `g` (with the leading ``:``, no header)."""
    n = g.n
    k = _edge_bit_width(n)

    bit_buf: list[int] = []

    def put(value: int, width: int) -> None:
        bit_buf.extend((value >> s) & 1 for s in range(width - 1, -1, -1))

    cur = 0
    for i, j in sorted((max(e), min(e)) for e in g.edges()):
        v, u = i, j
        if v == cur:
            put(0, 1)
            put(u, k)
        elif v == cur + 1:
            cur += 1
            put(1, 1)
            put(u, k)
        else:
            cur = v
            put(1, 1)
            put(v, k)
            put(0, 1)
            put(u, k)
    pad = (-len(bit_buf)) % 6
    # A pure all-ones pad can decode as a loop on n-1 when n is a power of
    # two and the pad is at least k bits long; a single 0 bit prevents it.
    if k < 6 and n == (1 << k) and pad >= k and cur < n - 1:
        bit_buf.append(0)
        pad = (-len(bit_buf)) % 6
    bit_buf.extend([1] * pad)
    chars = []
    for i in range(0, len(bit_buf), 6):
        group = 0
        for b in bit_buf[i:i + 6]:
            group = group << 1 | b
        chars.append(chr(group + 63))
    return ":" + _encode_order(n) + "".join(chars)


def parse_sparse6(line: str, cap: int | None = None) -> Graph:
    """Decode one sparse6 line; loops and repeated edges are rejected since
    the in-memory representation is a simple graph."""
    line = line.strip()
    if line.startswith(SPARSE6_HEADER):
        line = line[len(SPARSE6_HEADER):]
    if not line.startswith(":"):
        raise Graph6Error("sparse6 input must start with ':'", offset=0)
    body = line[1:]
    n, start = _decode_order(body)
    cap = max_vertices() if cap is None else cap
    if n > cap:
        raise Graph6Error(f"graph order {n} exceeds the configured maximum {cap}", offset=0)
    bit_stream: list[int] = []
    for pos, ch in enumerate(body[start:]):
        c = ord(ch)
        if not 63 <= c <= 126:
            raise Graph6Error(f"invalid payload byte {ch!r}", offset=1 + start + pos)
        bit_stream.extend((c - 63) >> s & 1 for s in range(5, -1, -1))
    k = _edge_bit_width(n)
    builder = GraphBuilder(n, cap=cap)
    seen: set[tuple[int, int]] = set()
    cur = 0
    pos = 0
    while pos + 1 + k <= len(bit_stream):
        b = bit_stream[pos]
        x = 0
        for s in range(k):
            x = x << 1 | bit_stream[pos + 1 + s]
        pos += 1 + k
        if b:
            cur += 1
        if cur >= n or x >= n:
            break
        if x > cur:
            cur = x
        else:
            if x == cur:
                raise Graph6Error(f"loop at vertex {x}: not a simple graph", offset=None)
            edge = (x, cur)
            if edge in seen:
                raise Graph6Error(f"repeated edge {edge}: not a simple graph", offset=None)
            seen.add(edge)
            builder.add_edge(x, cur)
    return builder.freeze()


def parse_any(line: str, cap: int | None = None) -> Graph:
    """Dispatch on the format: sparse6 when the payload starts with ':'
    (after an optional header), graph6 otherwise."""
    stripped = line.strip()
    if stripped.startswith(SPARSE6_HEADER) or stripped.startswith(":"):
        return parse_sparse6(stripped, cap=cap)
    return parse_graph6(stripped, cap=cap)
