"""graph6 codec, bit-exact with the format emitted by nauty's ``geng``."""

from __future__ import annotations

from typing import BinaryIO, Iterable, Iterator

from .errors import MalformedGraph6, TooLarge
from .graph import MAX_N, Graph

HEADER = b">>graph6<<"


def _size_prefix(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])


def _read_size(data: bytes) -> tuple[int, int]:
    """Return ``(n, bytes consumed)``."""
    if not data:
        raise MalformedGraph6("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise MalformedGraph6("truncated 8-byte size field")
        n = 0
        for c in data[2:8]:
            n = (n << 6) | (c - 63)
        return n, 8
    if len(data) < 4:
        raise MalformedGraph6("truncated 4-byte size field")
    n = 0
    for c in data[1:4]:
        n = (n << 6) | (c - 63)
    return n, 4


def parse_graph6(line: bytes | str) -> Graph:
    """Decode one graph6 line; a leading ``>>graph6<<`` and trailing newline are fine."""
    data = line.encode("ascii", "replace") if isinstance(line, str) else bytes(line)
    if data.startswith(HEADER):
        data = data[len(HEADER):]
    data = data.rstrip(b"\r\n")
    bad = [c for c in data if not 63 <= c <= 126]
    if bad:
        raise MalformedGraph6(f"byte {bad[0]!r} outside the graph6 alphabet")
    n, used = _read_size(data)
    if n > MAX_N:
        raise TooLarge(f"graph6 string encodes {n} vertices; the limit is {MAX_N}")
    body = data[used:]
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise MalformedGraph6(f"expected {(nbits + 5) // 6} data bytes for n={n}, got {len(body)}")
    bits = 0
    for c in body:
        bits = (bits << 6) | (c - 63)
    pad = len(body) * 6 - nbits
    if bits & ((1 << pad) - 1):
        raise MalformedGraph6("nonzero padding bits")
    bits >>= pad
    rows = [0] * n
    pos = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if bits >> pos & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            pos -= 1
    return Graph(n, tuple(rows))


def write_graph6(g: Graph) -> bytes:
    """Encode ``g`` without header or newline."""
    out = bytearray(_size_prefix(g.n))
    acc = 0
    nacc = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nacc += 1
            if nacc == 6:
                out.append(acc + 63)
                acc = nacc = 0
    if nacc:
        out.append((acc << (6 - nacc)) + 63)
    return bytes(out)


def read_graph6_stream(stream: BinaryIO | Iterable[bytes]) -> Iterator[Graph]:
    for raw in stream:
        line = raw.strip(b"\r\n") if isinstance(raw, bytes) else raw.strip("\r\n").encode()
        if line.startswith(HEADER):
            line = line[len(HEADER):]
        if line:
            yield parse_graph6(line)


def write_graph6_stream(graphs: Iterable[Graph], stream: BinaryIO) -> int:
    count = 0
    for g in graphs:
        stream.write(write_graph6(g) + b"\n")
        count += 1
    return count
