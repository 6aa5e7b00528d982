"""graph6 serialization.

Standard format: 6-bit big-endian groups offset by 63, an N(n) header,
then the upper triangle of the adjacency matrix in column-major order
(bit (u,v) for v = 1..n-1, u = 0..v-1), zero-padded to a multiple of six
bits.  One graph per line in files; labels are never serialized.
"""

from __future__ import annotations

from .graph import Graph

_HEADER_PREFIX = b">>graph6<<"
_MAX_N = (1 << 36) - 1


class Graph6Error(ValueError):
    """Malformed graph6 input."""


def _encode_n(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])
    if n <= _MAX_N:
        return bytes([126, 126] + [(n >> s & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise ValueError(f"graph6 cannot encode n={n} (limit {_MAX_N})")


def _decode_n(data: bytes) -> tuple[int, bytes]:
    if not data:
        raise Graph6Error("empty graph6 string")
    b0 = data[0]
    if b0 == 126:
        if len(data) >= 2 and data[1] == 126:
            chunk, rest = data[2:8], data[8:]
            if len(chunk) != 6:
                raise Graph6Error("truncated 8-byte vertex-count header")
        else:
            chunk, rest = data[1:4], data[4:]
            if len(chunk) != 3:
                raise Graph6Error("truncated 4-byte vertex-count header")
        n = 0
        for b in chunk:
            if not 63 <= b <= 126:
                raise Graph6Error(f"header byte {b} outside graph6 range")
            n = n << 6 | (b - 63)
        return n, rest
    if not 63 <= b0 <= 126:
        raise Graph6Error(f"header byte {b0} outside graph6 range")
    return b0 - 63, data[1:]


def to_graph6(g: Graph) -> bytes:
    """Encode a graph as a graph6 byte string (no trailing newline)."""
    n = g.n
    out = bytearray(_encode_n(n))
    # Column v contributes bits (0,v), (1,v), ..., (v-1,v).  The low v bits
    # of row v hold exactly those, MSB-first after string reversal.
    chunks = []
    for v in range(1, n):
        col = g.rows[v] & ((1 << v) - 1)
        chunks.append(format(col, f"0{v}b")[::-1])
    bits = "".join(chunks)
    if len(bits) % 6:
        bits += "0" * (6 - len(bits) % 6)
    for i in range(0, len(bits), 6):
        out.append(int(bits[i : i + 6], 2) + 63)
    return bytes(out)


def from_graph6(data: bytes | str) -> Graph:
    """Decode a graph6 byte (or text) string; inverse of :func:`to_graph6`.

    Accepts the optional ``>>graph6<<`` prefix and surrounding whitespace.
    Raises :class:`Graph6Error` on a malformed header, wrong data length,
    or nonzero padding bits.
    """
    if isinstance(data, str):
        data = data.encode("ascii", errors="replace")
    data = data.strip()
    if data.startswith(_HEADER_PREFIX):
        data = data[len(_HEADER_PREFIX) :].strip()
    n, body = _decode_n(data)
    nbits = n * (n - 1) // 2
    expected = (nbits + 5) // 6
    if len(body) != expected:
        raise Graph6Error(
            f"graph6 data length {len(body)} != {expected} required for n={n}"
        )
    bits = []
    for b in body:
        if not 63 <= b <= 126:
            raise Graph6Error(f"data byte {b} outside graph6 range")
        bits.append(format(b - 63, "06b"))
    bitstr = "".join(bits)
    if any(c == "1" for c in bitstr[nbits:]):
        raise Graph6Error("nonzero padding bits")
    rows = [0] * n
    pos = 0
    for v in range(1, n):
        for u in range(v):
            if bitstr[pos] == "1":
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            pos += 1
    return Graph(n, rows)
