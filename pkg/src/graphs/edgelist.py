# src/graphs/edgelist.py
"""
Edge-list text format.

    # comment lines start with '#'
    4          <- first content line: vertex count n
    0 1        <- one "u v" pair per line, 0 <= u < v < n
    1 2

Blank lines are skipped. Loops, duplicates, reversed pairs and out-of-range
endpoints are parse errors.
"""

import pathlib
from typing import List, Tuple, Union

from src.errors import EdgeListParseError
from src.graphs.graph import Graph

PathLike = Union[str, pathlib.Path]


def parse_edge_list(text: str) -> Graph:
    n = None
    edges: List[Tuple[int, int]] = []
    seen = set()

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue

        fields = line.split()
        if n is None:
            if len(fields) != 1:
                raise EdgeListParseError(f"line {lineno}: expected vertex count, got {line!r}")
            try:
                n = int(fields[0])
            except ValueError:
                raise EdgeListParseError(f"line {lineno}: vertex count {fields[0]!r} is not an integer")
            if n < 0:
                raise EdgeListParseError(f"line {lineno}: negative vertex count {n}")
            continue

        if len(fields) != 2:
            raise EdgeListParseError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise EdgeListParseError(f"line {lineno}: endpoints must be integers, got {line!r}")

        if u == v:
            raise EdgeListParseError(f"line {lineno}: self-loop at {u}")
        if not (0 <= u < v < n):
            raise EdgeListParseError(f"line {lineno}: need 0 <= u < v < {n}, got {u} {v}")
        if (u, v) in seen:
            raise EdgeListParseError(f"line {lineno}: duplicate edge {u} {v}")
        seen.add((u, v))
        edges.append((u, v))

    if n is None:
        raise EdgeListParseError("missing vertex count line")
    return Graph.from_edges(n, edges)


def format_edge_list(g: Graph) -> str:
    lines = [str(g.n)] + [f"{u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def read_edge_list(path: PathLike) -> Graph:
    path = pathlib.Path(path)
    try:
        with path.open("r", encoding="utf-8") as f:
            text = f.read()
    except (OSError, UnicodeDecodeError) as e:
        raise EdgeListParseError(f"cannot read {path}: {e}")
    return parse_edge_list(text)


def write_edge_list(g: Graph, path: PathLike) -> pathlib.Path:
    path = pathlib.Path(path)
    if path.parent and not path.parent.exists():
        path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf-8") as f:
        f.write(format_edge_list(g))
    return path
