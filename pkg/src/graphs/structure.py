# src/graphs/structure.py
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

import networkx as nx
from networkx.algorithms import bipartite

from src.graphs.graph import Graph, TwinClass, twin_classes


@dataclass(frozen=True)
class StructuralReport:
    """
    Structural facts the spectral theorems depend on.

    regular_degree is set only when is_regular; bipartition only when
    is_bipartite (part containing vertex 0 first).
    """

    n: int
    edge_count: int
    degrees: Tuple[int, ...]
    is_regular: bool
    regular_degree: Optional[int]
    is_bipartite: bool
    bipartition: Optional[Tuple[Tuple[int, ...], Tuple[int, ...]]]
    is_connected: bool
    twin_classes: List[TwinClass] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "m": self.edge_count,
            "degrees": list(self.degrees),
            "is_regular": self.is_regular,
            "regular_degree": self.regular_degree,
            "is_bipartite": self.is_bipartite,
            "bipartition": (
                [list(part) for part in self.bipartition] if self.bipartition else None
            ),
            "is_connected": self.is_connected,
            "twin_classes": [
                {"kind": t.kind.value, "vertices": list(t.vertices), "degree": t.degree}
                for t in self.twin_classes
            ],
        }


def regular_degree(g: Graph) -> Optional[int]:
    """Common degree k if g is k-regular, else None. The empty graph K_0 is 0-regular."""
    degrees = g.degrees()
    if not degrees:
        return 0
    return degrees[0] if all(d == degrees[0] for d in degrees) else None


def _bipartition(nxg: nx.Graph) -> Optional[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    if not nx.is_bipartite(nxg):
        return None
    # color() handles disconnected graphs component by component
    coloring = bipartite.color(nxg)
    first_color = coloring.get(0, 0)
    left = tuple(sorted(v for v, c in coloring.items() if c == first_color))
    right = tuple(sorted(v for v, c in coloring.items() if c != first_color))
    return left, right


def structural_report(g: Graph) -> StructuralReport:
    """Degrees, regularity, bipartiteness, connectivity and maximal twin classes."""
    nxg = g.to_networkx()
    k = regular_degree(g)
    parts = _bipartition(nxg)

    return StructuralReport(
        n=g.n,
        edge_count=g.edge_count,
        degrees=tuple(g.degrees()),
        is_regular=k is not None,
        regular_degree=k,
        is_bipartite=parts is not None,
        bipartition=parts,
        # K_0 counts as connected
        is_connected=g.n == 0 or nx.is_connected(nxg),
        twin_classes=twin_classes(g),
    )
