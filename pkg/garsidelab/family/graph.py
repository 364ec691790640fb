import math
import warnings
from collections import Counter, deque
from typing import Dict, NamedTuple, Optional, Tuple

import networkx as nx

from .._garside_common import (
    BudgetExceeded,
    FamilyConsistencyError,
    FamilyRegimeWarning,
    NotM0,
)
from ..braid import is_rigid
from ..const import (
    CYCLING,
    DEFAULT_MAX_NODES,
    DISJOINT_REGIME_MIN_STRANDS,
    INITIALIZING,
    PLAIN,
    SWITCHING,
    TAU,
)
from ..invariant_sets import ConjugacyGraph
from ..types import BraidKey, Matrix
from .blocks import alpha
from .conjugators import cycling_edge, initializer, switchings, verify_edge
from .matrix import FamilyElement, is_terminal


class GraphStatistics(NamedTuple):
    nodes: int
    plain_nodes: int
    tau_nodes: int
    edges: Dict[str, int]
    lattice_sizes: Tuple[int, ...]
    strongly_connected: bool


def _p_of(n: int) -> int:
    return (n - 2) // 2 if n % 2 == 0 else (n - 3) // 2


def expected_rigid_size(n: int, k: int) -> int:
    """Predicted number of rigid conjugates of a family braid: ``k * 2^(p-3)``."""
    return k * 2 ** (_p_of(n) - 3)


def size_lower_bound(n: int, k: int) -> float:
    """``k * sqrt(2)^n / 23``, which ``expected_rigid_size`` exceeds for ``n >= 14``."""
    return k * math.sqrt(2) ** n / 23


def family_rigid_graph(
    e: FamilyElement, verify: bool = True, max_nodes: int = DEFAULT_MAX_NODES
) -> ConjugacyGraph:
    """Closure of ``alpha(e)`` under cycling, switching and initializing edges.

    Parameters
    ----------
    e
        An element of M0
    verify
        Check every edge's conjugation identity, the rigidity of every node
        and that distinct matrices give distinct braids
    max_nodes
        Raise ``BudgetExceeded`` (with the graph so far) above this size

    Every node carries its ``element`` next to its ``braid``.
    """
    if not e.is_m0():
        raise NotM0(f"family graphs start from an M0 element, got {e.rows} (b={e.b})")
    if e.n < DISJOINT_REGIME_MIN_STRANDS:
        warnings.warn(
            f"{e.n} strands is below {DISJOINT_REGIME_MIN_STRANDS}: the two sides of "
            "the family graph may overlap",
            FamilyRegimeWarning,
        )
    graph = ConjugacyGraph(e.n)
    owners: Dict[BraidKey, Tuple[Matrix, Optional[int]]] = {}

    def visit(element: FamilyElement) -> bool:
        braid = alpha(element)
        key = braid.key()
        actual = (element.matrix, element.slot)
        if key in owners:
            if verify and owners[key] != actual:
                raise FamilyConsistencyError(
                    f"matrices {owners[key][0]} and {actual[0]} give the same braid"
                )
            return False
        if verify and not is_rigid(braid):
            raise FamilyConsistencyError(f"family braid {braid} is not rigid")
        owners[key] = actual
        graph.add_node(braid, element=element)
        if len(graph) > max_nodes:
            message = f"family graph exceeded {max_nodes} nodes"
            raise BudgetExceeded(message, partial=graph)
        return True

    visit(e)
    queue = deque([e])
    while queue:
        node = queue.popleft()
        moves = [(*cycling_edge(node), CYCLING)]
        moves.extend((rho, target, SWITCHING) for rho, target in switchings(node))
        if is_terminal(node):
            moves.append((*initializer(node, warn=False), INITIALIZING))
        for rho, target, kind in moves:
            if verify:
                verify_edge(node, rho, target)
            if visit(target):
                queue.append(target)
            graph.add_edge(alpha(node), rho, alpha(target), kind)
    return graph


def graph_statistics(graph: ConjugacyGraph) -> GraphStatistics:
    """Sizes of the sides, edge kinds and switching lattices of a family graph."""
    nodes = graph.graph.nodes(data="element")
    sides = Counter(element.side for _, element in nodes if element is not None)
    kinds = Counter(kind for _, _, kind in graph.graph.edges(data="kind"))
    switching_only = nx.DiGraph()
    switching_only.add_nodes_from(graph.graph.nodes)
    edges = graph.graph.edges(data="kind")
    switching_only.add_edges_from((u, v) for u, v, kind in edges if kind == SWITCHING)
    lattices = sorted(
        (len(c) for c in nx.weakly_connected_components(switching_only)), reverse=True
    )
    return GraphStatistics(
        nodes=len(graph),
        plain_nodes=sides[PLAIN],
        tau_nodes=sides[TAU],
        edges=dict(sorted(kinds.items())),
        lattice_sizes=tuple(lattices),
        strongly_connected=graph.is_strongly_connected(),
    )
