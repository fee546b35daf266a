"""Edge-list and DIMACS graph files.

Edge list: first meaningful line ``n m``, then ``m`` lines ``u v`` with
0-based endpoints; blank lines and ``#`` comments are ignored.  DIMACS:
``c`` comment lines, one ``p edge <n> <m>`` header, ``e <u> <v>`` lines
with 1-based endpoints.  Reading autodetects DIMACS from a leading
``p``/``c`` line unless a format is forced.
"""

from __future__ import annotations

from pathlib import Path

from .graph import Graph

EDGE_LIST = "el"
DIMACS = "dimacs"


class GraphFormatError(ValueError):
    def __init__(self, path, line_no: int, message: str):
        super().__init__(f"{path}:{line_no}: {message}")
        self.path = str(path)
        self.line_no = line_no


def detect_format(text: str) -> str:
    for line in text.splitlines():
        stripped = line.strip()
        if not stripped:
            continue
        if stripped[0] in "pc" and not stripped[0].isdigit():
            return DIMACS
        return EDGE_LIST
    return EDGE_LIST


def parse_graph(text: str, fmt: str | None = None, path="<string>") -> Graph:
    if fmt is None:
        fmt = detect_format(text)
    if fmt == EDGE_LIST:
        return _parse_edge_list(text, path)
    if fmt == DIMACS:
        return _parse_dimacs(text, path)
    raise ValueError(f"unknown format {fmt!r}")


def _ints(path, line_no: int, parts: list[str], want: int) -> list[int]:
    if len(parts) != want:
        raise GraphFormatError(path, line_no, f"expected {want} fields, got {len(parts)}")
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise GraphFormatError(path, line_no, f"non-integer field in {parts!r}") from None


def _parse_edge_list(text: str, path) -> Graph:
    header = None
    edges = []
    for line_no, line in enumerate(text.splitlines(), start=1):
        stripped = line.split("#", 1)[0].strip()
        if not stripped:
            continue
        fields = stripped.split()
        if header is None:
            n, m = _ints(path, line_no, fields, 2)
            header = (n, m, line_no)
            continue
        u, v = _ints(path, line_no, fields, 2)
        n = header[0]
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(path, line_no, f"endpoint out of range 0..{n - 1}")
        if u == v:
            raise GraphFormatError(path, line_no, "self-loop")
        edges.append((u, v))
    if header is None:
        raise GraphFormatError(path, 1, "missing 'n m' header line")
    n, m, header_line = header
    if len(edges) != m:
        raise GraphFormatError(
            path, header_line, f"header promises {m} edges, file has {len(edges)}"
        )
    return Graph(n, edges)


def _parse_dimacs(text: str, path) -> Graph:
    n = None
    edges = []
    for line_no, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("c"):
            continue
        fields = stripped.split()
        if fields[0] == "p":
            if len(fields) != 4 or fields[1] != "edge":
                raise GraphFormatError(path, line_no, "expected 'p edge <n> <m>'")
            n = _ints(path, line_no, fields[2:], 2)[0]
            continue
        if fields[0] == "e":
            if n is None:
                raise GraphFormatError(path, line_no, "edge before 'p edge' header")
            u, v = _ints(path, line_no, fields[1:], 2)
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphFormatError(path, line_no, f"endpoint out of range 1..{n}")
            if u == v:
                raise GraphFormatError(path, line_no, "self-loop")
            edges.append((u - 1, v - 1))
            continue
        raise GraphFormatError(path, line_no, f"unrecognized line {stripped!r}")
    if n is None:
        raise GraphFormatError(path, 1, "missing 'p edge' header")
    return Graph(n, edges)


def read_graph(path, fmt: str | None = None) -> tuple[Graph, str]:
    text = Path(path).read_text()
    actual = fmt or detect_format(text)
    return parse_graph(text, actual, path=path), actual


def format_graph(g: Graph, fmt: str = EDGE_LIST) -> str:
    edges = g.edges()
    if fmt == EDGE_LIST:
        lines = [f"{g.n} {len(edges)}"]
        lines += [f"{u} {v}" for u, v in edges]
        return "\n".join(lines) + "\n"
    if fmt == DIMACS:
        lines = [f"p edge {g.n} {len(edges)}"]
        lines += [f"e {u + 1} {v + 1}" for u, v in edges]
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


def write_graph(path, g: Graph, fmt: str = EDGE_LIST) -> None:
    Path(path).write_text(format_graph(g, fmt))
