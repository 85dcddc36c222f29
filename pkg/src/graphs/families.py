# src/graphs/families.py
from math import comb
from typing import Callable, Dict, List, Tuple

import networkx as nx

from src.errors import ParameterOutOfRange
from src.graphs.graph import Graph
from src.graphs.operations import join, union

# ---------- Named families ----------

NAMED_FAMILIES: List[str] = [
    "complete",
    "path",
    "cycle",
    "complete_bipartite",
    "star",
    "empty",
]


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise ParameterOutOfRange(message)


def _one_param(family: str, params: Tuple[int, ...]) -> int:
    _require(len(params) == 1, f"{family} takes one parameter, got {len(params)}")
    return int(params[0])


def make_named(family: str, *params: int) -> Graph:
    """
    Build one of the named families with the canonical labeling.

    Families and parameters:
      - complete n, path n, empty n      (n >= 0)
      - cycle n                          (n >= 3)
      - star n                           K_{1,n-1}, center 0 (n >= 1)
      - complete_bipartite p q           part one is 0..p-1 (p, q >= 1)

    Raises:
        ParameterOutOfRange for unknown families or violated preconditions.
    """
    if family == "complete_bipartite":
        _require(len(params) == 2, "complete_bipartite takes two parameters p q")
        p, q = int(params[0]), int(params[1])
        _require(p >= 1 and q >= 1, f"complete_bipartite needs p, q >= 1, got {p}, {q}")
        return Graph.from_networkx(nx.complete_bipartite_graph(p, q))

    builders: Dict[str, Callable[[int], nx.Graph]] = {
        "complete": nx.complete_graph,
        "path": nx.path_graph,
        "cycle": nx.cycle_graph,
        "empty": nx.empty_graph,
    }

    if family == "star":
        n = _one_param(family, params)
        _require(n >= 1, f"star needs n >= 1, got {n}")
        return Graph.from_networkx(nx.star_graph(n - 1))

    if family not in builders:
        raise ParameterOutOfRange(
            f"unknown family {family!r}; expected one of {NAMED_FAMILIES}"
        )

    n = _one_param(family, params)
    _require(n >= 0, f"{family} needs n >= 0, got {n}")
    if family == "cycle":
        _require(n >= 3, f"cycle needs n >= 3, got {n}")
    return Graph.from_networkx(builders[family](n))


def _clique_edges(vertices: range) -> List[Tuple[int, int]]:
    return [(u, v) for i, u in enumerate(vertices) for v in vertices[i + 1:]]


# ---------- Families with attachments ----------


def make_pineapple(p: int, q: int) -> Graph:
    """
    Pineapple K_p^q: K_p on 0..p-1 with q pendants p..p+q-1 hung on vertex p-1.
    """
    _require(p >= 3, f"pineapple needs p >= 3, got {p}")
    _require(q >= 1, f"pineapple needs q >= 1, got {q}")

    apex = p - 1
    edges = _clique_edges(range(p))
    edges += [(apex, p + i) for i in range(q)]
    g = Graph.from_edges(p + q, edges)
    assert g.edge_count == comb(p, 2) + q
    return g


def _two_cliques(n: int) -> List[Tuple[int, int]]:
    return _clique_edges(range(n)) + _clique_edges(range(n, 2 * n))


def make_h_graph(n: int, l: int) -> Graph:
    """
    H_n^l: two copies of K_n (0..n-1 and n..2n-1) with the matching
    i <-> n+i for i < l.

    l = n is allowed here (the prism-like graph); the spectrum formula only
    covers l < n.
    """
    _require(n >= 3, f"H graph needs n >= 3, got {n}")
    _require(1 <= l <= n, f"H graph needs 1 <= l <= n, got l={l}, n={n}")
    edges = _two_cliques(n) + [(i, n + i) for i in range(l)]
    return Graph.from_edges(2 * n, edges)


def make_kk_graph(n: int, l: int) -> Graph:
    """
    KK_n^l: two copies of K_n; vertex 0 of copy one is joined to n..n+l-1.
    """
    _require(n >= 3, f"KK graph needs n >= 3, got {n}")
    _require(1 <= l <= n, f"KK graph needs 1 <= l <= n, got l={l}, n={n}")
    edges = _two_cliques(n) + [(0, n + i) for i in range(l)]
    return Graph.from_edges(2 * n, edges)


def make_core_satellite(c: int, s: int, eta: int) -> Graph:
    """Core-satellite Theta(c, s, eta) = K_c joined with eta disjoint copies of K_s."""
    _require(c >= 1, f"core-satellite needs c >= 1, got {c}")
    _require(s >= 1, f"core-satellite needs s >= 1, got {s}")
    _require(eta >= 2, f"core-satellite needs eta >= 2, got {eta}")

    satellites = make_named("complete", s)
    for _ in range(eta - 1):
        satellites = union(satellites, make_named("complete", s))
    return join(make_named("complete", c), satellites)


def make_splitting(g: Graph) -> Graph:
    """
    Splitting graph S(G): shadow v+n of every vertex v, adjacent to N_G(v).

    Originals keep their labels; the result has 3|E(G)| edges.
    """
    n = g.n
    edges = list(g.edges)
    for u, v in g.edges:
        edges.append((u + n, v))
        edges.append((v + n, u))
    return Graph.from_edges(2 * n, edges)
