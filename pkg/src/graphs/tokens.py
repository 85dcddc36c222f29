# src/graphs/tokens.py
"""
Compact graph names used by the verification corpus and the verify command.

    k5        complete K_5              p4      path P_4
    c6        cycle C_6                 e3      empty graph on 3 vertices
    s5        star K_{1,4}              k3,2    complete bipartite K_{3,2}
    pine5,3   pineapple K_5^3           h5,2    H_5^2
    kk5,2     KK_5^2                    cs3,2,3 core-satellite Theta(3,2,3)
    gnp6,0.5,17   G(6, 0.5) drawn with seed 17
"""

import re
from typing import Callable, Dict, List

from src.errors import ParameterOutOfRange
from src.graphs.families import (
    make_core_satellite,
    make_h_graph,
    make_kk_graph,
    make_named,
    make_pineapple,
)
from src.graphs.graph import Graph
from src.utils.sampling import random_graph

_TOKEN_RE = re.compile(r"^(?P<name>[a-z]+)(?P<args>[0-9.,]*)$")


def _ints(token: str, args: List[str], count: int) -> List[int]:
    if len(args) != count:
        raise ParameterOutOfRange(f"graph token {token!r} needs {count} integer argument(s)")
    try:
        return [int(a) for a in args]
    except ValueError:
        raise ParameterOutOfRange(f"graph token {token!r} has a non-integer argument")


def parse_graph_token(token: str) -> Graph:
    """
    Build a graph from a compact token (see module docstring).

    Raises:
        ParameterOutOfRange for unknown names, wrong arity or bad parameters.
    """
    cleaned = token.strip().lower()
    match = _TOKEN_RE.match(cleaned)
    if not match:
        raise ParameterOutOfRange(f"cannot parse graph token {token!r}")

    name = match.group("name")
    args = [a for a in match.group("args").split(",") if a != ""]

    if name == "k":
        if len(args) == 2:
            p, q = _ints(token, args, 2)
            return make_named("complete_bipartite", p, q)
        return make_named("complete", *_ints(token, args, 1))

    if name == "gnp":
        if len(args) != 3:
            raise ParameterOutOfRange(f"graph token {token!r} needs n,p,seed")
        try:
            n, p, seed = int(args[0]), float(args[1]), int(args[2])
        except ValueError:
            raise ParameterOutOfRange(f"graph token {token!r} has a malformed argument")
        if n < 0 or not 0.0 <= p <= 1.0:
            raise ParameterOutOfRange(f"graph token {token!r} needs n >= 0 and 0 <= p <= 1")
        return random_graph(n, p, seed)

    single: Dict[str, str] = {"p": "path", "c": "cycle", "e": "empty", "s": "star"}
    if name in single:
        return make_named(single[name], *_ints(token, args, 1))

    builders: Dict[str, Callable[..., Graph]] = {
        "pine": make_pineapple,
        "h": make_h_graph,
        "kk": make_kk_graph,
    }
    if name in builders:
        return builders[name](*_ints(token, args, 2))

    if name == "cs":
        return make_core_satellite(*_ints(token, args, 3))

    raise ParameterOutOfRange(f"unknown graph token {token!r}")
