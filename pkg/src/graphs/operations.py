# src/graphs/operations.py
"""
Binary graph operations.

The second operand is always relabeled so the result is defined for any pair
of inputs:
  - union / join: H's vertex j becomes n1 + j
  - products:     the pair (i, j) becomes i * n2 + j
  - coalesce:     identified vertex first, then G - u, then H - v
"""

from typing import Callable, Dict, List, Tuple

import networkx as nx

from src.graphs.graph import Graph


def _shifted(h: Graph, offset: int) -> List[Tuple[int, int]]:
    return [(u + offset, v + offset) for u, v in h.edges]


def union(g: Graph, h: Graph) -> Graph:
    """Disjoint union G + H."""
    return Graph.from_edges(g.n + h.n, list(g.edges) + _shifted(h, g.n))


def join(g: Graph, h: Graph) -> Graph:
    """Join G v H: the union plus every edge between V(G) and V(H)."""
    cross = [(u, g.n + v) for u in range(g.n) for v in range(h.n)]
    return Graph.from_edges(g.n + h.n, list(g.edges) + _shifted(h, g.n) + cross)


# ---------- Products ----------


def _product(
    g: Graph,
    h: Graph,
    builder: Callable[[nx.Graph, nx.Graph], nx.Graph],
) -> Graph:
    """Run a networkx product and map node (i, j) to i * n2 + j."""
    prod = builder(g.to_networkx(), h.to_networkx())
    index: Dict[Tuple[int, int], int] = {
        (i, j): i * h.n + j for i in range(g.n) for j in range(h.n)
    }
    return Graph.from_edges(
        g.n * h.n, [(index[a], index[b]) for a, b in prod.edges()]
    )


def cartesian(g: Graph, h: Graph) -> Graph:
    """Cartesian product G x H."""
    return _product(g, h, nx.cartesian_product)


def direct(g: Graph, h: Graph) -> Graph:
    """Direct (tensor) product: (a, b) ~ (c, d) iff a ~ c in G and b ~ d in H."""
    return _product(g, h, nx.tensor_product)


def strong(g: Graph, h: Graph) -> Graph:
    """Strong product: edge set of the cartesian and direct products together."""
    return _product(g, h, nx.strong_product)


# ---------- Coalescence ----------


def coalesce(g: Graph, u: int, h: Graph, v: int) -> Graph:
    """
    Identify vertex u of G with vertex v of H.

    Layout of the result (n1 + n2 - 1 vertices):
      0                 the merged vertex
      1 .. n1-1         V(G) - {u}, in original order
      n1 .. n1+n2-2     V(H) - {v}, in original order
    """
    g.check_vertex(u)
    h.check_vertex(v)

    g_map: Dict[int, int] = {u: 0}
    for idx, w in enumerate(w for w in range(g.n) if w != u):
        g_map[w] = 1 + idx

    h_map: Dict[int, int] = {v: 0}
    for idx, w in enumerate(w for w in range(h.n) if w != v):
        h_map[w] = g.n + idx

    edges = [(g_map[a], g_map[b]) for a, b in g.edges]
    edges += [(h_map[a], h_map[b]) for a, b in h.edges]
    return Graph.from_edges(g.n + h.n - 1, edges)
