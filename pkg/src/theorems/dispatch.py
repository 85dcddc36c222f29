# src/theorems/dispatch.py
"""
Single entry point from a theorem id + parameters to a TheoremResult and the
graph whose L_alpha matrix is the oracle for it.

Graph parameters ("g", "h") may be Graph objects or graph tokens such as
"c4" or "pine5,3" (see src.graphs.tokens).
"""

from typing import Any, Callable, Dict, List, Mapping, Tuple, Union

from src.errors import NotConnected, NotRegular, ParameterOutOfRange, UnknownTheorem
from src.graphs import operations as ops
from src.graphs.families import (
    make_core_satellite,
    make_h_graph,
    make_kk_graph,
    make_named,
    make_pineapple,
    make_splitting,
)
from src.graphs.graph import Graph
from src.graphs.structure import regular_degree, structural_report
from src.graphs.tokens import parse_graph_token
from src.linalg.eigen import Spectrum, eigen_sym
from src.linalg.matrices import (
    a_alpha_matrix,
    adjacency_matrix,
    check_alpha,
    l_alpha_matrix,
    principal_submatrix,
)
from src.linalg.poly import char_poly
from src.linalg.quotient import Partition, coarsest_equitable_partition, quotient_spectrum
from src.theorems import basic, families
from src.theorems import operations as spectral_ops
from src.theorems.results import TheoremResult

Params = Mapping[str, Any]

THEOREM_IDS: List[str] = [
    "complete",
    "complete-bipartite",
    "star",
    "regular-shift",
    "twins",
    "quotient",
    "union",
    "join-lifted",
    "join-regular",
    "cartesian",
    "direct-subset",
    "direct-regular",
    "strong-subset",
    "strong-regular",
    "coalescence",
    "splitting",
    "pineapple",
    "h-graph",
    "kk-graph",
    "core-satellite",
    "bipartite-equiv",
    "nonnegativity",
    "kronecker",
]


# ---------- parameter helpers ----------


def resolve_graph(value: Union[Graph, str]) -> Graph:
    if isinstance(value, Graph):
        return value
    return parse_graph_token(str(value))


def _graph(params: Params, key: str) -> Graph:
    if key not in params:
        raise ParameterOutOfRange(f"missing graph parameter {key!r}")
    return resolve_graph(params[key])


def _int(params: Params, key: str) -> int:
    if key not in params:
        raise ParameterOutOfRange(f"missing integer parameter {key!r}")
    try:
        return int(params[key])
    except (TypeError, ValueError):
        raise ParameterOutOfRange(f"parameter {key!r} must be an integer, got {params[key]!r}")


def _regular(g: Graph, what: str) -> int:
    k = regular_degree(g)
    if k is None:
        raise NotRegular(f"{what} is not regular (degrees {sorted(set(g.degrees()))})")
    return k


def _connected(g: Graph, what: str) -> Graph:
    if not structural_report(g).is_connected:
        raise NotConnected(f"{what} is not connected")
    return g


def _l_spec(g: Graph, alpha: float) -> Spectrum:
    return eigen_sym(l_alpha_matrix(g, alpha))


def _a_spec(g: Graph) -> Spectrum:
    return eigen_sym(adjacency_matrix(g))


def _grouped(values: List[float]) -> List[Tuple[float, int]]:
    return list(Spectrum.from_values(values).entries)


def _partition(params: Params, g: Graph) -> Partition:
    blocks = params.get("blocks")
    if blocks is None:
        return coarsest_equitable_partition(g)
    return Partition.from_blocks(blocks, g.n)


# ---------- oracle graphs ----------


def _family_graph(theorem_id: str, params: Params) -> Graph:
    if theorem_id == "complete":
        return make_named("complete", _int(params, "n"))
    if theorem_id == "complete-bipartite":
        return make_named("complete_bipartite", _int(params, "p"), _int(params, "q"))
    if theorem_id == "star":
        return make_named("star", _int(params, "n"))
    if theorem_id == "pineapple":
        return make_pineapple(_int(params, "p"), _int(params, "q"))
    if theorem_id == "h-graph":
        return make_h_graph(_int(params, "n"), _int(params, "l"))
    if theorem_id == "kk-graph":
        return make_kk_graph(_int(params, "n"), _int(params, "l"))
    if theorem_id == "core-satellite":
        return make_core_satellite(_int(params, "c"), _int(params, "s"), _int(params, "eta"))
    raise UnknownTheorem(f"unknown theorem id {theorem_id!r}")


_BINARY_GRAPHS: Dict[str, Callable[[Graph, Graph], Graph]] = {
    "union": ops.union,
    "join-lifted": ops.join,
    "join-regular": ops.join,
    "cartesian": ops.cartesian,
    "direct-subset": ops.direct,
    "direct-regular": ops.direct,
    "strong-subset": ops.strong,
    "strong-regular": ops.strong,
}

_SINGLE_GRAPH = {"regular-shift", "twins", "quotient", "bipartite-equiv", "nonnegativity"}


# Closed-form parameter ranges that are narrower than the constructors'.
_FAMILY_PRECONDITIONS: Dict[str, Callable[[Params], Tuple[bool, str]]] = {
    "complete": lambda p: (_int(p, "n") >= 1, "complete graph spectrum needs n >= 1"),
    "complete-bipartite": lambda p: (
        _int(p, "p") >= _int(p, "q") >= 1,
        "complete bipartite spectrum needs p >= q >= 1",
    ),
    "star": lambda p: (_int(p, "n") >= 2, "star spectrum needs n >= 2"),
    "h-graph": lambda p: (_int(p, "l") < _int(p, "n"), "H graph spectrum needs l < n"),
}


def oracle_graph(theorem_id: str, params: Params) -> Graph:
    """
    The graph whose L_alpha spectrum the theorem describes.

    Also validates inputs that do not depend on alpha (explicit quotient
    blocks, closed-form parameter ranges), so every ParameterOutOfRange is
    raised here rather than during evaluation.
    """
    if theorem_id in _BINARY_GRAPHS:
        return _BINARY_GRAPHS[theorem_id](_graph(params, "g"), _graph(params, "h"))
    if theorem_id in _SINGLE_GRAPH:
        g = _graph(params, "g")
        if theorem_id == "quotient":
            _partition(params, g)
        return g
    if theorem_id == "coalescence":
        return ops.coalesce(
            _graph(params, "g"), _int(params, "u"), _graph(params, "h"), _int(params, "v")
        )
    if theorem_id == "splitting":
        return make_splitting(_graph(params, "g"))
    if theorem_id == "kronecker":
        return ops.strong(_graph(params, "g"), _graph(params, "h"))

    g = _family_graph(theorem_id, params)
    if theorem_id in _FAMILY_PRECONDITIONS:
        ok, message = _FAMILY_PRECONDITIONS[theorem_id](params)
        if not ok:
            raise ParameterOutOfRange(f"{message}, got {dict(params)}")
    return g


# ---------- theorem evaluation ----------


def _binary(theorem_id: str, params: Params, alpha: float) -> TheoremResult:
    g, h = _graph(params, "g"), _graph(params, "h")

    if theorem_id == "union":
        return TheoremResult.full(theorem_id, spectral_ops.spec_union(_l_spec(g, alpha), _l_spec(h, alpha)))

    if theorem_id == "cartesian":
        return TheoremResult.full(theorem_id, spectral_ops.spec_cartesian(_l_spec(g, alpha), _l_spec(h, alpha)))

    if theorem_id == "join-lifted":
        values = spectral_ops.join_lifted_eigs(
            spectral_ops.orthogonal_eigenpairs(l_alpha_matrix(g, alpha)),
            spectral_ops.orthogonal_eigenpairs(l_alpha_matrix(h, alpha)),
            g.n,
            h.n,
            alpha,
        )
        return TheoremResult.subset(theorem_id, _grouped(values))

    if theorem_id == "join-regular":
        k, r = _regular(g, "G"), _regular(h, "H")
        spectrum = spectral_ops.spec_join_regular(k, g.n, r, h.n, _a_spec(g), _a_spec(h), alpha)
        return TheoremResult.full(theorem_id, spectrum)

    if theorem_id == "direct-subset":
        _connected(g, "G")
        r = _regular(h, "H")
        return TheoremResult.subset(
            theorem_id, _grouped(spectral_ops.spec_direct_subset(_l_spec(g, alpha), r))
        )

    if theorem_id == "strong-subset":
        _connected(g, "G")
        r = _regular(h, "H")
        return TheoremResult.subset(
            theorem_id, _grouped(spectral_ops.spec_strong_subset(_l_spec(g, alpha), r, alpha))
        )

    r1, r2 = _regular(g, "G"), _regular(h, "H")
    if theorem_id == "direct-regular":
        spectrum = spectral_ops.spec_direct_regular(r1, r2, _a_spec(g), _a_spec(h), alpha)
    else:
        spectrum = spectral_ops.spec_strong_regular(r1, r2, _a_spec(g), _a_spec(h), alpha)
    return TheoremResult.full(theorem_id, spectrum)


def _families(theorem_id: str, params: Params, alpha: float) -> TheoremResult:
    if theorem_id == "complete":
        return TheoremResult.full(theorem_id, basic.spec_complete(_int(params, "n"), alpha))
    if theorem_id == "complete-bipartite":
        return TheoremResult.full(
            theorem_id, basic.spec_complete_bipartite(_int(params, "p"), _int(params, "q"), alpha)
        )
    if theorem_id == "star":
        return TheoremResult.full(theorem_id, basic.spec_star(_int(params, "n"), alpha))
    if theorem_id == "core-satellite":
        spectrum = families.spec_core_satellite(
            _int(params, "c"), _int(params, "s"), _int(params, "eta"), alpha
        )
        return TheoremResult.full(theorem_id, spectrum)

    if theorem_id == "pineapple":
        p, q = _int(params, "p"), _int(params, "q")
        spectrum = families.spec_pineapple(p, q, alpha)
        check = families.formula_discrepancy("pineapple", (p, q), alpha)
    elif theorem_id == "h-graph":
        n, l = _int(params, "n"), _int(params, "l")
        spectrum = families.spec_h_graph(n, l, alpha)
        check = families.formula_discrepancy("h-graph", (n, l), alpha)
    elif theorem_id == "kk-graph":
        n, l = _int(params, "n"), _int(params, "l")
        spectrum = families.spec_kk_graph(n, l, alpha)
        check = families.formula_discrepancy("kk-graph", (n, l), alpha)
    else:
        raise UnknownTheorem(f"unknown theorem id {theorem_id!r}")

    notes = [] if check.agrees else [check.note()]
    return TheoremResult.full(theorem_id, spectrum, notes)


def evaluate_theorem(theorem_id: str, params: Params, alpha: float) -> TheoremResult:
    """
    Evaluate one closed form at alpha.

    Raises:
        UnknownTheorem for ids without a closed form (nonnegativity and
        kronecker are harness checks, not theorems), plus whatever hypothesis
        error the underlying theorem raises.
    """
    alpha = check_alpha(alpha)

    if theorem_id in _BINARY_GRAPHS:
        return _binary(theorem_id, params, alpha)

    if theorem_id == "regular-shift":
        return TheoremResult.full(theorem_id, basic.spec_regular_shift(_graph(params, "g"), alpha))

    if theorem_id == "twins":
        return TheoremResult.subset(theorem_id, basic.twin_eigenvalues(_graph(params, "g"), alpha))

    if theorem_id == "quotient":
        g = _graph(params, "g")
        partition = _partition(params, g)
        spectrum = quotient_spectrum(l_alpha_matrix(g, alpha), partition)
        return TheoremResult.subset(
            theorem_id, list(spectrum.entries), [f"{len(partition)} blocks"]
        )

    if theorem_id == "bipartite-equiv":
        g = _graph(params, "g")
        return TheoremResult.full(theorem_id, eigen_sym(a_alpha_matrix(g, alpha)))

    if theorem_id == "coalescence":
        g, h = _graph(params, "g"), _graph(params, "h")
        u, v = g.check_vertex(_int(params, "u")), h.check_vertex(_int(params, "v"))
        lg, lh = l_alpha_matrix(g, alpha), l_alpha_matrix(h, alpha)
        polynomial = spectral_ops.charpoly_coalescence(
            char_poly(lg),
            char_poly(principal_submatrix(lg, u)),
            char_poly(lh),
            char_poly(principal_submatrix(lh, v)),
        )
        return TheoremResult.poly(theorem_id, polynomial)

    if theorem_id == "splitting":
        g = _graph(params, "g")
        k = _regular(g, "G")
        return TheoremResult.poly(
            theorem_id, spectral_ops.charpoly_splitting_regular(k, _a_spec(g), alpha)
        )

    if theorem_id in ("nonnegativity", "kronecker"):
        raise UnknownTheorem(f"{theorem_id!r} is a harness check without a closed form")

    return _families(theorem_id, params, alpha)
