# src/graphs/graph.py
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, FrozenSet, Iterable, List, Tuple

import networkx as nx

from src.errors import InvalidVertex, ParameterOutOfRange

Edge = Tuple[int, int]


def _canonical_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """
    Simple undirected graph on vertices 0..n-1.

    Edges are stored as a frozenset of (u, v) pairs with u < v, so two graphs
    with the same labeled edge set compare equal. Instances are immutable.
    """

    n: int
    edges: FrozenSet[Edge] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ParameterOutOfRange(f"vertex count must be >= 0, got {self.n}")
        for u, v in self.edges:
            if u == v:
                raise ParameterOutOfRange(f"self-loop at vertex {u}")
            if not (0 <= u < v < self.n):
                raise ParameterOutOfRange(
                    f"edge ({u}, {v}) is not canonical or out of range for n={self.n}"
                )

    # ---------- construction ----------

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> "Graph":
        """
        Build a graph from any iterable of vertex pairs.

        Pairs may come in either orientation. Loops and repeated pairs are
        rejected rather than silently dropped.
        """
        seen = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise ParameterOutOfRange(f"self-loop at vertex {u}")
            for w in (u, v):
                if not 0 <= w < n:
                    raise InvalidVertex(f"vertex {w} out of range for n={n}")
            e = _canonical_edge(u, v)
            if e in seen:
                raise ParameterOutOfRange(f"duplicate edge {e}")
            seen.add(e)
        return cls(n, frozenset(seen))

    @classmethod
    def from_networkx(cls, g: nx.Graph) -> "Graph":
        """Convert a networkx graph, relabeling nodes 0..n-1 in node order."""
        relabeled = nx.convert_node_labels_to_integers(g, ordering="default")
        return cls.from_edges(relabeled.number_of_nodes(), relabeled.edges())

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(sorted(self.edges))
        return g

    # ---------- queries ----------

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def check_vertex(self, v: int) -> int:
        if not 0 <= v < self.n:
            raise InvalidVertex(f"vertex {v} is not in 0..{self.n - 1}")
        return v

    def adjacency_lists(self) -> List[List[int]]:
        adj: List[List[int]] = [[] for _ in range(self.n)]
        for u, v in sorted(self.edges):
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def degrees(self) -> List[int]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def neighbors(self, v: int) -> FrozenSet[int]:
        """Open neighborhood N(v)."""
        self.check_vertex(v)
        return frozenset(
            w for e in self.edges if v in e for w in e if w != v
        )

    def closed_neighbors(self, v: int) -> FrozenSet[int]:
        """Closed neighborhood N[v] = N(v) + {v}."""
        return self.neighbors(v) | {v}

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and _canonical_edge(u, v) in self.edges

    def sorted_edges(self) -> List[Edge]:
        return sorted(self.edges)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"


# ---------- twin classes ----------


class TwinKind(str, Enum):
    TRUE_TWIN = "true"
    FALSE_TWIN = "false"


@dataclass(frozen=True)
class TwinClass:
    """
    Maximal set (size >= 2) of pairwise twin vertices.

    True twins share the closed neighborhood N[u] = N[v]; false twins are
    nonadjacent and share the open neighborhood N(u) = N(v). Members always
    have the same degree.
    """

    kind: TwinKind
    vertices: Tuple[int, ...]
    degree: int

    @property
    def size(self) -> int:
        return len(self.vertices)


def twin_classes(g: Graph) -> List[TwinClass]:
    """
    Group vertices into maximal true-twin and false-twin classes.

    Both relations are equivalence relations on vertices, so bucketing by the
    neighborhood itself gives the classes directly. A vertex never sits in a
    true class and a false class of size >= 2 at the same time.
    """
    adj = g.adjacency_lists()
    degrees = g.degrees()

    by_open: Dict[FrozenSet[int], List[int]] = {}
    by_closed: Dict[FrozenSet[int], List[int]] = {}
    for v in range(g.n):
        open_nb = frozenset(adj[v])
        by_open.setdefault(open_nb, []).append(v)
        by_closed.setdefault(open_nb | {v}, []).append(v)

    classes: List[TwinClass] = []
    for members in by_closed.values():
        if len(members) >= 2:
            classes.append(
                TwinClass(TwinKind.TRUE_TWIN, tuple(members), degrees[members[0]])
            )
    for members in by_open.values():
        if len(members) >= 2:
            classes.append(
                TwinClass(TwinKind.FALSE_TWIN, tuple(members), degrees[members[0]])
            )

    classes.sort(key=lambda c: c.vertices[0])
    return classes
