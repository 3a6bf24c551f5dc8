"""Text formats.

CXC v1 (incidence complexes)::

    cxc 1 <dim>
    rank <k> <count>          one line per rank 0..dim
    c <k> <id> : <ids>        one line per cell of rank k >= 1
    label <k> <id> <text>     optional; backslash and line breaks escaped as \\\\ and \\uXXXX

Vertices have empty boundaries, so rank-0 cells are given by their count only.
2-cells list their cyclic edge sequence in canonical rotation; other ranks list
sorted ids.

CXF v1 (flag systems)::

    cxf 1 <dim+1> <flagcount>
    adj <i> : a-b c-d ...     each pair once, fixed points as a-a

Lines starting with # are comments. Output is newline-terminated and
re-serializes byte-identically after parsing.
"""

import re

import numpy as np

from ..errors import SerializationError
from .complex import FlagSystem, IncidenceComplex, canonical_cycle


def to_cxc(X: IncidenceComplex) -> str:
    lines = [f"cxc 1 {X.dim}"]
    for k in range(X.dim + 1):
        lines.append(f"rank {k} {X.count(k)}")
    for k in range(1, X.dim + 1):
        for i, bd in enumerate(X.cells[k]):
            lines.append(f"c {k} {i} : {' '.join(map(str, bd))}")
    for k in sorted(X.labels):
        for i in sorted(X.labels[k]):
            lines.append(f"label {k} {i} {_escape_label(X.labels[k][i])}")
    return "\n".join(lines) + "\n"


def parse_cxc(text: str) -> IncidenceComplex:
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise SerializationError("empty CXC document")
    head = lines[0].split()
    if len(head) != 3 or head[0] != "cxc" or head[1] != "1":
        raise SerializationError(f"bad CXC header: {lines[0]!r}")
    dim = _int(head[2], 1)
    if dim < 0:
        raise SerializationError(f"bad CXC dimension {dim}")
    counts: dict[int, int] = {}
    cells: list[list] = []
    labels: dict[int, dict[int, str]] = {}
    for n, line in enumerate(lines[1:], start=2):
        kind = line.split(maxsplit=1)[0]
        if kind == "rank":
            if cells:
                raise SerializationError(f"line {n}: rank line after cell records")
            parts = line.split()
            if len(parts) != 3:
                raise SerializationError(f"line {n}: expected 'rank <k> <count>'")
            k, count = _int(parts[1], n), _int(parts[2], n)
            if not 0 <= k <= dim or count < 0:
                raise SerializationError(f"line {n}: bad rank line {line.strip()!r}")
            if k in counts:
                raise SerializationError(f"line {n}: rank {k} declared twice")
            counts[k] = count
            continue
        if not cells:
            cells = _empty_cells(counts, dim, n)
        if kind == "c":
            head_part, sep, body = line.partition(":")
            fields = head_part.split()
            if not sep or len(fields) != 3:
                raise SerializationError(f"line {n}: expected 'c <k> <id> : <ids>'")
            k, i = _int(fields[1], n), _int(fields[2], n)
            if not 1 <= k <= dim or not 0 <= i < counts[k]:
                raise SerializationError(f"line {n}: cell {k}/{i} out of range")
            ids = [_int(t, n) for t in body.split()]
            if any(not 0 <= b < counts[k - 1] for b in ids):
                raise SerializationError(f"line {n}: boundary of {k}-cell {i} references a missing cell")
            if k == 2:
                cells[k][i] = canonical_cycle(ids)
            else:
                cells[k][i] = tuple(sorted(ids))
        elif kind == "label":
            m = _LABEL.match(line)
            if m is None:
                raise SerializationError(f"line {n}: expected 'label <k> <id> <text>'")
            k, i = _int(m.group(1), n), _int(m.group(2), n)
            if not 0 <= k <= dim or not 0 <= i < counts[k]:
                raise SerializationError(f"line {n}: label for missing cell {k}/{i}")
            labels.setdefault(k, {})[i] = _unescape_label(m.group(3) or "")
        else:
            raise SerializationError(f"line {n}: unknown record {kind!r}")
    if not cells:
        cells = _empty_cells(counts, dim, len(lines))
    for k in range(1, dim + 1):
        missing = [i for i, bd in enumerate(cells[k]) if bd is None]
        if missing:
            raise SerializationError(f"{k}-cell {missing[0]} has no boundary line")
    return IncidenceComplex(dim, tuple(tuple(r) for r in cells), labels)


def _empty_cells(counts: dict[int, int], dim: int, line: int) -> list[list]:
    if len(counts) != dim + 1:
        raise SerializationError(f"line {line}: expected {dim + 1} rank lines before cells, got {len(counts)}")
    return [[() for _ in range(counts[r])] if r == 0 else [None] * counts[r] for r in range(dim + 1)]


# everything str.splitlines treats as a line boundary
_LINE_BREAKS = "\n\r\v\f\x1c\x1d\x1e\x85\u2028\u2029"
_LABEL = re.compile(r"\s*label\s+(\S+)\s+(\S+)(?: (.*))?\Z", re.DOTALL)
_ESCAPE = re.compile(r"\\(\\|u[0-9a-fA-F]{4})")


def _escape_label(text: str) -> str:
    return "".join(
        "\\\\" if ch == "\\" else f"\\u{ord(ch):04x}" if ch in _LINE_BREAKS else ch for ch in text
    )


def _unescape_label(raw: str) -> str:
    return _ESCAPE.sub(lambda m: "\\" if m.group(1) == "\\" else chr(int(m.group(1)[1:], 16)), raw)


def to_cxf(F: FlagSystem) -> str:
    lines = [f"cxf 1 {F.dim + 1} {F.size}"]
    for i in range(F.dim + 1):
        a = F.adj[i]
        pairs = [f"{x}-{int(a[x])}" for x in range(F.size) if x <= a[x]]
        lines.append(f"adj {i} : {' '.join(pairs)}")
    return "\n".join(lines) + "\n"


def parse_cxf(text: str) -> FlagSystem:
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise SerializationError("empty CXF document")
    head = lines[0].split()
    if len(head) != 4 or head[0] != "cxf" or head[1] != "1":
        raise SerializationError(f"bad CXF header: {lines[0]!r}")
    ranks, size = _int(head[2], 1), _int(head[3], 1)
    adj = np.full((ranks, size), -1, dtype=np.int64)
    for n, line in enumerate(lines[1:], start=2):
        head_part, _, body = line.partition(":")
        kind, i_s = head_part.split()
        if kind != "adj":
            raise SerializationError(f"line {n}: unknown record {kind!r}")
        i = _int(i_s, n)
        for pair in body.split():
            a_s, _, b_s = pair.partition("-")
            a, b = _int(a_s, n), _int(b_s, n)
            if not (0 <= a < size and 0 <= b < size):
                raise SerializationError(f"line {n}: flag id out of range in {pair!r}")
            adj[i, a], adj[i, b] = b, a
    if np.any(adj < 0):
        raise SerializationError("some flags have no adjacency entry")
    return FlagSystem(adj)


def to_edge_list(X: IncidenceComplex) -> str:
    return "".join(f"{u} {v}\n" for u, v in X.cells[1])


def to_face_list(X: IncidenceComplex) -> str:
    return "".join(" ".join(map(str, X.face_vertices(p))) + "\n" for p in range(X.count(2)))


def _int(token: str, line: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise SerializationError(f"line {line}: expected an integer, got {token!r}") from None


def dump(X: IncidenceComplex | FlagSystem) -> tuple[str, str]:
    """(format, text): CXC for incidence complexes, CXF for flag systems."""
    if isinstance(X, FlagSystem):
        return "cxf", to_cxf(X)
    return "cxc", to_cxc(X)


def load(text: str) -> IncidenceComplex | FlagSystem:
    """Parse either format, chosen by the header line."""
    for ln in text.splitlines():
        if not ln.strip() or ln.lstrip().startswith("#"):
            continue
        magic = ln.split()[0]
        if magic == "cxc":
            return parse_cxc(text)
        if magic == "cxf":
            return parse_cxf(text)
        raise SerializationError(f"unknown document type {magic!r}; expected cxc or cxf")
    raise SerializationError("empty document")
