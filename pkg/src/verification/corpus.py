# src/verification/corpus.py
"""
The default verification corpus.

Small enough to finish in well under a minute on a laptop; every randomized
graph comes from config.CORPUS_SEED so two runs see the same cases.
"""

import random
from typing import Dict, List, Optional, Sequence

from src import config
from src.graphs.graph import Graph
from src.utils.sampling import sample_random_graphs
from src.verification.cases import VerificationCase, alpha_grid

OPEN_GRID = alpha_grid(10, 0.0, 0.9)
COALESCENCE_GRID = [0.0, 0.25, 0.5, 0.75]
UPPER_GRID = alpha_grid(6, 0.5, 1.0)

POLY_TOLERANCE = 1e-6
EXACT_TOLERANCE = 1e-9


def _token(graph: Graph, seed: int) -> str:
    return f"gnp{graph.n},0.5,{seed}"


def _pairs(theorem: str, pairs: Sequence[Sequence[str]], **kwargs) -> List[VerificationCase]:
    return [VerificationCase(theorem, {"g": g, "h": h}, **kwargs) for g, h in pairs]


def _singles(theorem: str, tokens: Sequence[str], **kwargs) -> List[VerificationCase]:
    return [VerificationCase(theorem, {"g": g}, **kwargs) for g in tokens]


def random_tokens(count: int, seed: int, *, connected_only: bool = False) -> List[str]:
    drawn = sample_random_graphs(count, seed=seed, connected_only=connected_only)
    return [_token(g, s) for g, s in drawn]


def coalescence_cases(count: int, seed: int, alphas: Optional[List[float]] = None) -> List[VerificationCase]:
    """Random pairs (G, u), (H, v) with n <= 7 each."""
    rng = random.Random(seed)
    graphs = sample_random_graphs(2 * count, seed=seed)
    cases: List[VerificationCase] = []
    for i in range(count):
        (g, gs), (h, hs) = graphs[2 * i], graphs[2 * i + 1]
        params: Dict[str, object] = {
            "g": _token(g, gs),
            "u": rng.randrange(g.n),
            "h": _token(h, hs),
            "v": rng.randrange(h.n),
        }
        cases.append(
            VerificationCase(
                "coalescence",
                params,
                alphas=list(alphas or COALESCENCE_GRID),
                tolerance=POLY_TOLERANCE,
            )
        )
    return cases


def default_corpus(seed: int = config.CORPUS_SEED) -> List[VerificationCase]:
    """One or more cases for every theorem id, in a fixed order."""
    corpus: List[VerificationCase] = []

    # single graphs
    corpus += [VerificationCase("complete", {"n": n}, tolerance=EXACT_TOLERANCE) for n in (2, 5, 8)]
    corpus += [
        VerificationCase("complete-bipartite", {"p": p, "q": q})
        for p, q in ((3, 2), (4, 1), (5, 5))
    ]
    corpus += [VerificationCase("star", {"n": n}) for n in (2, 6)]
    corpus += _singles("regular-shift", ["c4", "k5", "c6"])
    corpus += _singles("twins", ["k4", "s5", "pine5,3"] + random_tokens(3, seed))
    corpus += _singles("quotient", ["pine5,3", "h5,2", "kk5,2", "p4", "cs3,2,3"])

    # operations
    corpus += _pairs("union", [("k3", "k2"), ("p3", "c4")])
    corpus += _pairs("join-lifted", [("k2", "k1"), ("c4", "k1"), ("p3", "p2")])
    corpus += _pairs("join-regular", [("k2", "k1"), ("c4", "c4"), ("k3", "c5")])
    corpus += _pairs("cartesian", [("k2", "k2"), ("p3", "p2"), ("c3", "p3")])
    corpus += _pairs("direct-subset", [("p3", "c3"), ("p3", "k2")])
    corpus += _pairs("direct-regular", [("k2", "k2"), ("c3", "c3"), ("c4", "k3")])
    corpus += _pairs("strong-subset", [("k2", "k2"), ("p3", "c4")])
    corpus += _pairs("strong-regular", [("k2", "k2"), ("c4", "k2"), ("c3", "c3")])
    corpus += coalescence_cases(20, seed)
    corpus.append(
        VerificationCase(
            "coalescence",
            {"g": "c3", "u": 0, "h": "c3", "v": 0},
            alphas=COALESCENCE_GRID,
            tolerance=POLY_TOLERANCE,
        )
    )
    corpus += _singles("splitting", ["k2", "k3", "k4", "k5", "c3", "c4", "c5", "c6"], tolerance=POLY_TOLERANCE)

    # families
    corpus += [
        VerificationCase("pineapple", {"p": p, "q": q}, alphas=OPEN_GRID)
        for p, q in ((3, 1), (4, 2), (5, 3))
    ]
    corpus += [
        VerificationCase("h-graph", {"n": n, "l": l}, alphas=OPEN_GRID)
        for n, l in ((3, 1), (4, 2), (5, 3))
    ]
    corpus += [
        VerificationCase("kk-graph", {"n": n, "l": l}, alphas=OPEN_GRID)
        for n, l in ((3, 1), (4, 4), (5, 2))
    ]
    corpus += [
        VerificationCase("core-satellite", {"c": c, "s": s, "eta": eta})
        for c, s, eta in ((3, 2, 3), (1, 1, 4), (2, 3, 2))
    ]

    # structural claims
    corpus += _singles(
        "bipartite-equiv", ["p5", "c6", "k3,2", "c5", "k3"], tolerance=EXACT_TOLERANCE
    )
    corpus += _singles(
        "nonnegativity",
        ["pine5,3", "h4,2"] + random_tokens(3, seed + 1, connected_only=True),
        alphas=UPPER_GRID,
        tolerance=1e-10,
    )
    corpus += _pairs("kronecker", [("p3", "c4"), ("k3", "p2")], tolerance=1e-12)

    return corpus
