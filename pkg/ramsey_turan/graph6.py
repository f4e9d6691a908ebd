"""
graph6 serialization, bit-exact with the format used by nauty and networkx.

A graph6 string is `N(n)` followed by the upper triangle of the adjacency matrix, read column by column
(`x(0,1) x(0,2) x(1,2) x(0,3) ...`), packed six bits per printable byte (value + 63).
"""
from ramsey_turan.base import RamseyTuranException
from ramsey_turan.graph import (
    GraphException,
    graph_from_rows,
)

HEADER = b'>>graph6<<'


class Graph6Exception(RamseyTuranException):
    def __init__(self, message, offset):
        super().__init__(f'{message} at offset {offset}')
        self.message = message
        self.offset = offset


def _encode_order(n):
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> shift) & 63) + 63 for shift in (12, 6, 0)])
    return bytes([126, 126] + [((n >> shift) & 63) + 63 for shift in (30, 24, 18, 12, 6, 0)])


def encode_graph6(g):
    rows = g.rows
    bits = [
        rows[i] >> j & 1
        for j in range(1, g.order)
        for i in range(j)
    ]
    bits += [0] * (-len(bits) % 6)
    payload = bytes(
        63 + int(''.join(str(b) for b in bits[k:k + 6]), 2)
        for k in range(0, len(bits), 6)
    )
    return _encode_order(g.order) + payload


def _decode_order(data):
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        width, start = 6, 2
    else:
        width, start = 3, 1
    if len(data) < start + width:
        raise Graph6Exception('truncated order field', len(data))
    n = 0
    for byte in data[start:start + width]:
        n = (n << 6) | (byte - 63)
    return n, start + width


def _ascii(text):
    try:
        return text.encode('ascii')
    except UnicodeEncodeError as e:
        raise Graph6Exception(f'non-ASCII character {text[e.start]!r}', e.start) from e


def decode_graph6(data):
    if isinstance(data, str):
        data = _ascii(data)
    data = bytes(data)
    base = 0
    if data.startswith(HEADER):
        base = len(HEADER)
        data = data[base:]
    data = data.rstrip(b'\r\n')

    if not data:
        raise Graph6Exception('empty graph6 string', base)
    for i, byte in enumerate(data):
        if not 63 <= byte <= 126:
            raise Graph6Exception(f'unexpected byte 0x{byte:02x}', base + i)

    n, start = _decode_order(data)
    payload = data[start:]
    bit_count = n * (n - 1) // 2
    expected = (bit_count + 5) // 6
    if len(payload) != expected:
        raise Graph6Exception(f'expected {expected} payload bytes for order {n}, got {len(payload)}', base + start + min(len(payload), expected))

    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = payload[k // 6] - 63
            if byte >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    if bit_count % 6:
        last = payload[-1] - 63
        if last & ((1 << (6 - bit_count % 6)) - 1):
            raise Graph6Exception('nonzero padding bits', base + len(data) - 1)

    try:
        return graph_from_rows(n, rows)
    except GraphException as e:
        raise Graph6Exception(str(e), base) from e


def read_graph6_lines(text):
    if isinstance(text, str):
        text = _ascii(text)
    result = []
    offset = 0
    for line in text.splitlines(keepends=True):
        stripped = line.strip()
        if stripped:
            try:
                result.append(decode_graph6(stripped))
            except Graph6Exception as e:
                raise Graph6Exception(e.message, offset + e.offset) from e
        offset += len(line)
    return result


def format_graph6(g):
    return encode_graph6(g).decode('ascii')
