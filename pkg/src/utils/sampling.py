import random
from typing import List, Optional, Sequence, Tuple

import networkx as nx

from src.graphs.graph import Graph


def random_graph(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p) with an explicit seed (same seed -> same graph)."""
    return Graph.from_networkx(nx.gnp_random_graph(n, p, seed=seed))


def sample_random_graphs(
    count: int,
    orders: Sequence[int] = (4, 5, 6, 7),
    p: float = 0.5,
    seed: Optional[int] = None,
    *,
    connected_only: bool = False,
) -> List[Tuple[Graph, int]]:
    """
    Draw `count` random graphs with orders picked from `orders`.

    Args:
        count: Number of graphs to return.
        orders: Candidate vertex counts.
        p: Edge probability.
        seed: Seed for the order/seed stream; fixed seeds keep corpora stable.
        connected_only: Discard disconnected draws.

    Returns:
        List of (graph, graph_seed) pairs; graph_seed rebuilds the same graph
        through random_graph(n, p, graph_seed).
    """
    rng = random.Random(seed)

    if count < 0:
        raise ValueError(f"count must be >= 0, got {count}")
    if not orders:
        raise ValueError("orders must not be empty")

    out: List[Tuple[Graph, int]] = []
    attempts = 0
    while len(out) < count:
        attempts += 1
        if attempts > 100 * max(count, 1):
            raise RuntimeError(
                f"could not draw {count} graphs matching the filter "
                f"(got {len(out)} after {attempts - 1} attempts)"
            )

        n = rng.choice(list(orders))
        graph_seed = rng.randrange(2**31)
        g = random_graph(n, p, graph_seed)
        if connected_only and not nx.is_connected(g.to_networkx()):
            continue
        out.append((g, graph_seed))

    return out
