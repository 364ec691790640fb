"""Rigid conjugacy sets as directed graphs.

The rigid conjugacy set of a rigid braid is generated from the braid by
repeated conjugation with minimal simple conjugators. Candidates are searched
breadth first over two down-sets of the prefix lattice: prefixes of the
twisted first factor (cut-head) and prefixes of the right complement of the
last factor (add-tail).
"""

from collections import deque
from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Set, Tuple

import networkx as nx

from ._garside_common import (
    BudgetExceeded,
    FamilyConsistencyError,
    NotRigid,
    NotSupported,
    StrandMismatch,
)
from .braid import (
    Braid,
    conjugate,
    from_simple,
    identity_braid,
    inverse,
    is_rigid,
    multiply,
    tau_braid,
)
from .conjugacy import cycling, to_super_summit
from .const import (
    ADD_TAIL,
    CONJUGATOR_KINDS,
    CUT_HEAD,
    DEFAULT_MAX_NODES,
    DEFAULT_MAX_PREFIX_STATES,
)
from .simple import (
    SimpleBraid,
    atoms_below,
    extensions,
    is_prefix,
    right_complement,
    tau,
    tau_power,
)
from .types import BraidKey


@dataclass(frozen=True)
class SearchBudget:
    max_prefix_states: int = DEFAULT_MAX_PREFIX_STATES
    max_nodes: int = DEFAULT_MAX_NODES

    def __post_init__(self):
        if self.max_prefix_states <= 0 or self.max_nodes <= 0:
            raise ValueError(f"budgets must be positive: {self}")


class ConjugacyGraph:
    """Braids of an invariant set joined by conjugator-labelled edges.

    An edge ``(source, conjugator, target, kind)`` always satisfies
    ``conjugator^-1 * source * conjugator == target``.
    """

    def __init__(self, n: int):
        self.n = n
        self.graph = nx.MultiDiGraph()

    def add_node(self, braid: Braid, **attrs) -> BraidKey:
        if braid.n != self.n:
            raise StrandMismatch(f"strand counts differ: {self.n} != {braid.n}")
        key = braid.key()
        if key not in self.graph:
            self.graph.add_node(key, braid=braid, **attrs)
        return key

    def add_edge(
        self,
        source: Braid,
        conjugator: SimpleBraid,
        target: Braid,
        kind: str,
        **attrs,
    ) -> None:
        src = self.add_node(source)
        dst = self.add_node(target)
        self.graph.add_edge(src, dst, conjugator=conjugator, kind=kind, **attrs)

    def __len__(self) -> int:
        return self.graph.number_of_nodes()

    def __contains__(self, braid: Braid) -> bool:
        return braid.key() in self.graph

    def keys(self) -> Set[BraidKey]:
        return set(self.graph.nodes)

    @property
    def nodes(self) -> List[Braid]:
        return [self.graph.nodes[key]["braid"] for key in sorted(self.graph.nodes)]

    @property
    def edges(self) -> List[Tuple[Braid, SimpleBraid, Braid, str]]:
        result = []
        for src, dst, data in self.graph.edges(data=True):
            result.append(
                (
                    self.graph.nodes[src]["braid"],
                    data["conjugator"],
                    self.graph.nodes[dst]["braid"],
                    data["kind"],
                )
            )
        result.sort(key=lambda e: (e[0].key(), e[2].key(), e[1].pi, e[3]))
        return result

    def is_strongly_connected(self) -> bool:
        return len(self) > 0 and nx.is_strongly_connected(self.graph)

    def edge_errors(self) -> List[str]:
        """Edges whose conjugation identity does not hold."""
        errors = []
        for source, conj, target, kind in self.edges:
            if conjugate(source, conj) != target:
                errors.append(f"{kind} edge {source} -> {target} by {conj}")
        return errors

    def path_conjugator(self, source: Braid, target: Braid) -> Braid:
        """Product of edge conjugators along a shortest path."""
        path = nx.shortest_path(self.graph, source.key(), target.key())
        result = identity_braid(self.n)
        for src, dst in zip(path, path[1:]):
            data = min(
                self.graph.get_edge_data(src, dst).values(),
                key=lambda d: d["conjugator"].pi,
            )
            result = multiply(result, from_simple(data["conjugator"]))
        return result

    def tau_image(self) -> "ConjugacyGraph":
        image = ConjugacyGraph(self.n)
        for braid in self.nodes:
            image.add_node(tau_braid(braid))
        for source, conj, target, kind in self.edges:
            image.add_edge(tau_braid(source), tau(conj), tau_braid(target), kind)
        return image


class _StateCounter:
    def __init__(self, limit: int):
        self.limit = limit
        self.count = 0

    def tick(self, found) -> None:
        self.count += 1
        if self.count > self.limit:
            raise BudgetExceeded(
                f"prefix search exceeded {self.limit} states",
                partial=[(rho, kind) for rho, kind, _ in found],
            )


def _rigid_conjugate(u: Braid, y: Braid) -> bool:
    if not is_rigid(y):
        return False
    # rigid conjugates of a rigid braid share its super summit shape
    if (y.inf, y.length) != (u.inf, u.length):
        raise FamilyConsistencyError(
            f"rigid conjugate {y} of {u} has a different inf or length"
        )
    return True


def _search_down_set(
    u: Braid,
    bound: SimpleBraid,
    kind: str,
    counter: _StateCounter,
    found: List[Tuple[SimpleBraid, str, Braid]],
) -> None:
    hits: List[SimpleBraid] = []
    level = atoms_below(bound)
    seen = {s.pi for s in level}
    while level:
        following = []
        for rho in level:
            counter.tick(found)
            if any(is_prefix(h, rho) for h in hits):
                continue
            y = conjugate(u, rho)
            if _rigid_conjugate(u, y):
                hits.append(rho)
                found.append((rho, kind, y))
                continue
            for nxt in extensions(rho, bound):
                if nxt.pi not in seen:
                    seen.add(nxt.pi)
                    following.append(nxt)
        level = following


def _minimal_conjugators(
    u: Braid,
    budget: Optional[SearchBudget],
    kinds: Sequence[str],
) -> List[Tuple[SimpleBraid, str, Braid]]:
    if not is_rigid(u):
        raise NotRigid(f"{u} is not rigid")
    budget = budget or SearchBudget()
    for kind in kinds:
        if kind not in CONJUGATOR_KINDS:
            raise ValueError(f"unknown conjugator kind: {kind}")
    counter = _StateCounter(budget.max_prefix_states)
    found: List[Tuple[SimpleBraid, str, Braid]] = []
    if CUT_HEAD in kinds:
        head = tau_power(u.factors[0], u.inf)
        _search_down_set(u, head, CUT_HEAD, counter, found)
    if ADD_TAIL in kinds:
        tail = right_complement(u.factors[-1])
        _search_down_set(u, tail, ADD_TAIL, counter, found)
    found.sort(key=lambda item: (item[1], item[0].length, item[0].pi))
    return found


def minimal_conjugators(
    u: Braid,
    budget: Optional[SearchBudget] = None,
    kinds: Sequence[str] = CONJUGATOR_KINDS,
) -> List[Tuple[SimpleBraid, str]]:
    """Minimal simple conjugators of a rigid braid into its rigid set.

    Parameters
    ----------
    u
        A rigid braid
    budget
        Search caps; the prefix-state cap is shared by both down-sets
    kinds
        Which down-sets to search, ``"cut-head"`` and/or ``"add-tail"``

    Returns the antichain of pairs ``(conjugator, kind)`` sorted by kind,
    length and permutation. Raises ``BudgetExceeded`` (with the pairs found so
    far on ``partial``) when the cap trips.
    """
    return [(rho, kind) for rho, kind, _ in _minimal_conjugators(u, budget, kinds)]


def enumerate_class(x: Braid, budget: Optional[SearchBudget] = None) -> ConjugacyGraph:
    """Breadth-first enumeration of the rigid conjugacy set of ``x``."""
    if not is_rigid(x):
        raise NotRigid(f"{x} is not rigid")
    budget = budget or SearchBudget()
    graph = ConjugacyGraph(x.n)
    graph.add_node(x)
    queue = deque([x])
    while queue:
        node = queue.popleft()
        try:
            found = _minimal_conjugators(node, budget, CONJUGATOR_KINDS)
        except BudgetExceeded as error:
            raise BudgetExceeded(str(error), partial=graph) from error
        for rho, kind, target in found:
            is_new = target not in graph
            graph.add_edge(node, rho, target, kind)
            if is_new:
                if len(graph) > budget.max_nodes:
                    raise BudgetExceeded(
                        f"rigid set exceeded {budget.max_nodes} nodes", partial=graph
                    )
                queue.append(target)
    return graph


def _cycling_orbit(y: Braid, limit: int) -> Iterator[Tuple[Braid, Braid]]:
    conj = identity_braid(y.n)
    seen = set()
    for _ in range(limit):
        if y.key() in seen:
            return
        seen.add(y.key())
        yield y, conj
        y, c = cycling(y)
        conj = multiply(conj, from_simple(c))


def rigid_representative(
    x: Braid, budget: Optional[SearchBudget] = None
) -> Tuple[Braid, Braid]:
    """A rigid conjugate of ``x`` and the conjugator reaching it.

    Braids of canonical length 0 are returned unchanged. Raises
    ``NotSupported`` when neither the super summit reduction nor the cycling
    orbit of its result yields a rigid braid.
    """
    if not x.factors or is_rigid(x):
        return x, identity_braid(x.n)
    budget = budget or SearchBudget()
    cert = to_super_summit(x)
    for y, conj in _cycling_orbit(cert.representative, budget.max_nodes):
        if is_rigid(y):
            return y, multiply(cert.conjugator, conj)
        if not y.factors:
            return y, multiply(cert.conjugator, conj)
    raise NotSupported(f"no rigid conjugate of {x} found by cycling")


def is_conjugate(
    x: Braid, y: Braid, budget: Optional[SearchBudget] = None
) -> Tuple[bool, Optional[Braid]]:
    """Decide conjugacy of two braids with rigid representatives.

    Returns ``(True, w)`` with ``w^-1 * x * w == y`` or ``(False, None)``.
    """
    if x.n != y.n:
        raise StrandMismatch(f"strand counts differ: {x.n} != {y.n}")
    rx, cx = rigid_representative(x, budget)
    ry, cy = rigid_representative(y, budget)
    if not rx.factors or not ry.factors:
        if rx == ry:
            return True, multiply(cx, inverse(cy))
        return False, None
    if (rx.inf, rx.length) != (ry.inf, ry.length):
        return False, None
    graph = enumerate_class(rx, budget)
    if ry not in graph:
        return False, None
    path = graph.path_conjugator(rx, ry)
    return True, multiply(multiply(cx, path), inverse(cy))

