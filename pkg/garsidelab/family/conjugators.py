"""Closed-form conjugators between family braids.

Three kinds of edges join the rigid conjugates of a family braid: cycling by
the first row, switchings that move a zero column of the constant block one
step right (or clear column 2), and the initializer that sends a terminal
element to the initial element on the other side.
"""

import random
import warnings
from typing import List, Optional, Set, Tuple

import networkx as nx

from .._garside_common import (
    FamilyConsistencyError,
    FamilyRegimeWarning,
    NotM0,
    NotTerminal,
)
from ..braid import (
    Braid,
    as_simple,
    conjugate,
    delta_power,
    from_simple,
    identity_braid,
    inverse,
    multiply,
    normal_form,
)
from ..const import ADD_TAIL, CUT_HEAD, DISJOINT_REGIME_MIN_STRANDS, PLAIN, TAU
from ..simple import SimpleBraid, simple_from_word, tau
from ..types import BitRow, Matrix, PositiveWord
from .blocks import alpha, alpha_row, theta
from .matrix import FamilyElement, hat_rows, is_terminal, transform


def switching_word(j: int) -> PositiveWord:
    """Positive word of the switching conjugator indexed by the odd generator ``j``."""
    if j == 3:
        return (3, 2, 4, 3, 1)
    if j < 5 or j % 2 == 0:
        raise ValueError(f"no switching conjugator for index {j}")
    return (j, j - 1, j + 1, j)


def switching_conjugator(n: int, j: int) -> SimpleBraid:
    return simple_from_word(n, switching_word(j))


def _switched_rows(rows: Matrix, i: int) -> Matrix:
    if i == 1:
        return tuple(row[:1] + (0,) + row[2:] for row in rows)
    return tuple(row[: i - 1] + (1, 0) + row[i + 1 :] for row in rows)


def switchings(e: FamilyElement) -> List[Tuple[SimpleBraid, FamilyElement]]:
    """Switching conjugators of an M0 element (or its tau image) and their targets.

    Column 2 equal to 1 gives the conjugator ``s3 s2 s4 s3 s1`` clearing it;
    each pair of columns ``i, i + 1`` (``2 <= i <= p - 4``) equal to 0 and 1
    gives ``s(2i+1) s(2i) s(2i+2) s(2i+1)`` exchanging them.
    """
    if not e.is_m0():
        raise NotM0(f"switchings need an M0 element, got {e.rows} (b={e.b})")
    first, p = e.rows[0], e.p
    moves = []
    if p >= 5 and first[1] == 1:
        moves.append((3, 1))
    for i in range(2, p - 3):
        if first[i - 1] == 0 and first[i] == 1:
            moves.append((2 * i + 1, i))
    result = []
    for j, i in moves:
        rho = switching_conjugator(e.n, j)
        target = e.with_rows(_switched_rows(e.rows, i))
        result.append((tau(rho) if e.side == TAU else rho, target))
    return result


def switching_lattice(e: FamilyElement) -> nx.DiGraph:
    """Switching moves from the initial element of ``e``'s lattice.

    Nodes are stored matrices; every edge carries its ``conjugator``.
    """
    start = transform(e, "hat")
    lattice = nx.DiGraph()
    lattice.add_node(start.rows)
    stack = [start]
    while stack:
        node = stack.pop()
        for rho, target in switchings(node):
            if target.rows not in lattice:
                stack.append(target)
            lattice.add_edge(node.rows, target.rows, conjugator=rho)
    return lattice


def rho_path(e: FamilyElement, rng: Optional[random.Random] = None) -> Braid:
    """Product of switching conjugators from the initial element to ``e``.

    A shortest path is used unless ``rng`` is given, in which case a random
    path through the lattice is followed.
    """
    lattice = switching_lattice(e)
    start = hat_rows(e.rows)
    if e.rows not in lattice:
        raise FamilyConsistencyError(f"{e.rows} is not reachable by switchings")
    if rng is None:
        path = nx.shortest_path(lattice, start, e.rows)
    else:
        allowed = nx.ancestors(lattice, e.rows) | {e.rows}
        path = [start]
        while path[-1] != e.rows:
            options = sorted(s for s in lattice.successors(path[-1]) if s in allowed)
            path.append(rng.choice(options))
    result = identity_braid(e.n)
    for src, dst in zip(path, path[1:]):
        result = multiply(result, from_simple(lattice.edges[src, dst]["conjugator"]))
    return result


def rho_closed_form(n: int) -> Braid:
    """Conjugator from the initial to the terminal element as a product of switchings.

    The product runs over ``t = p - 4, .., 1`` of ``rho_3 rho_5 .. rho_(2t+1)``.
    """
    p = (n - 2) // 2 if n % 2 == 0 else (n - 3) // 2
    result = identity_braid(n)
    for t in range(p - 4, 0, -1):
        for j in range(3, 2 * t + 2, 2):
            result = multiply(result, from_simple(switching_conjugator(n, j)))
    return result


def rho_generator_form(n: int) -> Braid:
    """The same conjugator spelled in Artin generators.

    ``s1^-1`` then, for ``i = 4, .., p - 1``, the runs ``s3 .. s(2(p-i)+2)``
    and ``s1 .. s(2(p-i)+1)``, then ``s1``.
    """
    p = (n - 2) // 2 if n % 2 == 0 else (n - 3) // 2
    word = [-1]
    for i in range(4, p):
        word += range(3, 2 * (p - i) + 3)
        word += range(1, 2 * (p - i) + 2)
    word.append(1)
    return normal_form(n, word)


def _warn_regime(n: int) -> None:
    if n < DISJOINT_REGIME_MIN_STRANDS:
        warnings.warn(
            f"{n} strands is below {DISJOINT_REGIME_MIN_STRANDS}: the two sides of "
            "the family graph may overlap",
            FamilyRegimeWarning,
        )


def initializer(
    e: FamilyElement, warn: bool = True
) -> Tuple[SimpleBraid, FamilyElement]:
    """The initializing conjugator of a terminal element and its target.

    For a terminal ``A`` the conjugator is ``alpha(A_k)^-1 rho_A^-1 Delta``
    and the target is ``tau(uncycle(hat(A)))``, on the other side.
    """
    if not is_terminal(e):
        raise NotTerminal(f"{e.rows} (b={e.b}) is not a terminal M0 element")
    if warn:
        _warn_regime(e.n)
    base = e.base
    last = from_simple(alpha_row(base.rows[-1], base.b))
    rho_braid = multiply(
        multiply(inverse(last), inverse(rho_closed_form(e.n))), delta_power(e.n, 1)
    )
    try:
        rho = as_simple(rho_braid)
    except ValueError as error:
        message = f"initializer of {e.rows} is not simple"
        raise FamilyConsistencyError(message) from error
    start = transform(transform(base, "hat"), "uncycle")
    if e.side == TAU:
        return tau(rho), FamilyElement(start.rows, e.b, PLAIN)
    return rho, FamilyElement(start.rows, e.b, TAU)


def cycling_edge(e: FamilyElement) -> Tuple[SimpleBraid, FamilyElement]:
    """Cycling conjugator: the first canonical factor of ``alpha(e)``."""
    return alpha(e).factors[0], transform(e, "cycle")


def verify_edge(source: FamilyElement, rho: SimpleBraid, target: FamilyElement) -> None:
    if conjugate(alpha(source), rho) != alpha(target):
        raise FamilyConsistencyError(
            f"conjugating alpha{source.matrix} by {rho} does not give alpha{target.matrix}"
        )


def _tau_word(word: PositiveWord, n: int) -> PositiveWord:
    return tuple(n - m for m in word)


def _tau_row(a: BitRow) -> BitRow:
    return tuple(1 - v for v in reversed(a))


def _cut_head(a: BitRow, seed: int) -> Set[PositiveWord]:
    p = len(a)
    phi = theta(a).inverse()
    if seed == 1:
        return {(2, phi(1))}
    if seed == 2 * p + 1:
        return {(2 * p, phi(2 * p + 1))}
    if seed % 2 == 0 and 2 <= seed <= 2 * p:
        return {(seed, phi(seed))}
    raise ValueError(f"cut-head seed {seed} is not a label of a {p}-bit row")


def _add_tail_even(a: BitRow, seed: int, mirror: bool = True) -> Set[PositiveWord]:
    p = len(a)
    i = (seed - 1) // 2
    if seed % 2 == 0 or not 1 <= i <= p - 1:
        raise ValueError(f"add-tail seed {seed} is not an odd index 3..{2 * p - 1}")
    words: Set[PositiveWord] = set()
    if a[i - 1] == 0 and a[i] == 1:
        words.add((seed, seed - 1, seed + 1, seed))
    if a[i] == 0:
        end = theta(a)(2 * i + 2)
        words.add((seed,) + tuple(range(seed + 2, end + 1)))
        if end != 2 * p + 1:
            words |= _add_tail_even(a, end + 1, mirror)
    if mirror and a[i - 1] == 1:
        mirrored = _add_tail_even(_tau_row(a), 2 * (p - i) + 1, mirror=False)
        words |= {_tau_word(w, 2 * p + 2) for w in mirrored}
    return words


def _add_tail_odd(a: BitRow, b: int, seed: int) -> Set[PositiveWord]:
    p = len(a)
    if not 1 <= b <= p - 1:
        raise ValueError(f"odd forced prefixes need 1 <= b <= {p - 1}, got {b}")
    if seed == 2 * b + 1:
        if a[b - 1] == 0:
            return {(seed, seed - 1)}
        return {(seed,) + tuple(range(seed - 2, theta(a)(2 * b) - 1, -1))}
    if seed == 2 * b + 2:
        n = 2 * p + 3
        mirrored = _add_tail_odd(_tau_row(a), p - b, n - seed)
        return {_tau_word(w, n) for w in mirrored}
    raise ValueError(
        f"odd forced prefixes start at {2 * b + 1} or {2 * b + 2}, got {seed}"
    )


def forced_prefixes(
    a: BitRow, b: Optional[int], seed: int, mode: str
) -> Set[PositiveWord]:
    """Positive words forced into every minimal conjugator containing ``seed``.

    Parameters
    ----------
    a
        A row with ``a_1 == 0`` and ``a_p == 1``
    b
        Slot of the vertical strand, or ``None`` for even strand counts
    seed
        For ``"cut-head"`` a label ``1, 2, 4, .., 2p, 2p + 1`` of the reduced
        cycle; for ``"add-tail"`` the odd generator that starts the conjugator
    mode
        ``"cut-head"`` or ``"add-tail"``

    Every word returned is a prefix of ``alpha_row(a, b)`` (cut-head) or of
    its right complement (add-tail).
    """
    a = tuple(a)
    if mode == CUT_HEAD:
        if b is not None:
            raise ValueError(
                "cut-head forced prefixes are defined for even strand counts"
            )
        return _cut_head(a, seed)
    if mode == ADD_TAIL:
        if b is None:
            return _add_tail_even(a, seed)
        return _add_tail_odd(a, b, seed)
    raise ValueError(f"unknown mode {mode!r}")
