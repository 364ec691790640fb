"""Permutation braids and the weak-order lattice they form.

A simple braid on ``n`` strands is stored as its permutation ``pi`` where
``pi[i - 1]`` is the ending position of the strand starting at position ``i``.
Words compose left to right, so ``simple_from_word(3, [1, 2])`` is the braid
sigma_1 sigma_2 with ``pi == (3, 1, 2)``.

Example::

    from garsidelab.simple import simple_from_word, meet, join

    a = simple_from_word(4, [1, 2])
    b = simple_from_word(4, [1, 3])
    meet(a, b).word()   # (1,)
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import FrozenSet, Iterable, Iterator, List, Optional, Tuple

from ._garside_common import LetterOutOfRange, NotReduced, StrandMismatch
from .types import Permutation, PositiveWord


@dataclass(frozen=True, order=True)
class SimpleBraid:
    n: int
    pi: Permutation

    @property
    def length(self) -> int:
        """Number of crossings (the inversion count of ``pi``)."""
        pi = self.pi
        return sum(
            1
            for i in range(self.n)
            for j in range(i + 1, self.n)
            if pi[i] > pi[j]
        )

    @property
    def is_identity(self) -> bool:
        return all(v == i + 1 for i, v in enumerate(self.pi))

    @property
    def is_delta(self) -> bool:
        return all(v == self.n - i for i, v in enumerate(self.pi))

    def inverse_permutation(self) -> Permutation:
        return _invert(self.pi)

    def word(self) -> PositiveWord:
        return canonical_word(self)

    def __str__(self) -> str:
        return " ".join(str(i) for i in self.word()) or "e"


def _invert(pi: Iterable[int]) -> Permutation:
    values = list(pi)
    inv = [0] * len(values)
    for i, v in enumerate(values):
        inv[v - 1] = i + 1
    return tuple(inv)


def _check_same(a: SimpleBraid, b: SimpleBraid) -> None:
    if a.n != b.n:
        raise StrandMismatch(f"strand counts differ: {a.n} != {b.n}")


def from_permutation(pi: Iterable[int]) -> SimpleBraid:
    """Build a simple braid from a 1-based permutation, validating it."""
    values = tuple(pi)
    n = len(values)
    if n < 1 or sorted(values) != list(range(1, n + 1)):
        raise ValueError(f"{values} is not a permutation of 1..{n}")
    return SimpleBraid(n, values)


@lru_cache(maxsize=None)
def identity(n: int) -> SimpleBraid:
    return SimpleBraid(n, tuple(range(1, n + 1)))


@lru_cache(maxsize=None)
def delta(n: int) -> SimpleBraid:
    return SimpleBraid(n, tuple(range(n, 0, -1)))


@lru_cache(maxsize=None)
def generator(n: int, i: int) -> SimpleBraid:
    if not 1 <= i <= n - 1:
        raise LetterOutOfRange(f"generator {i} out of range for {n} strands")
    pi = list(range(1, n + 1))
    pi[i - 1], pi[i] = pi[i], pi[i - 1]
    return SimpleBraid(n, tuple(pi))


def _arrangement_to_simple(n: int, arrangement: List[int]) -> SimpleBraid:
    # arrangement[p] is the strand sitting at position p + 1
    return SimpleBraid(n, _invert(arrangement))


def simple_from_word(n: int, word: Iterable[int]) -> SimpleBraid:
    """Return the permutation braid of a reduced positive word.

    Parameters
    ----------
    n
        Number of strands
    word
        Generator indices, each in ``1..n-1``

    Raises ``NotReduced`` if some pair of strands would cross twice.
    """
    arrangement = list(range(1, n + 1))
    for letter in word:
        if not 1 <= letter <= n - 1:
            raise LetterOutOfRange(f"letter {letter} out of range for {n} strands")
        i = letter - 1
        if arrangement[i] > arrangement[i + 1]:
            raise NotReduced(
                f"strands {arrangement[i + 1]} and {arrangement[i]} cross twice"
            )
        arrangement[i], arrangement[i + 1] = arrangement[i + 1], arrangement[i]
    return _arrangement_to_simple(n, arrangement)


def canonical_word(s: SimpleBraid) -> PositiveWord:
    """A reduced word for ``s``, stripping the smallest starting letter first."""
    pi = list(s.pi)
    letters = []
    i = 0
    while i < s.n - 1:
        if pi[i] > pi[i + 1]:
            letters.append(i + 1)
            pi[i], pi[i + 1] = pi[i + 1], pi[i]
            i = max(i - 1, 0)
        else:
            i += 1
    return tuple(letters)


def starting_set(s: SimpleBraid) -> FrozenSet[int]:
    pi = s.pi
    return frozenset(i + 1 for i in range(s.n - 1) if pi[i] > pi[i + 1])


def finishing_set(s: SimpleBraid) -> FrozenSet[int]:
    inv = _invert(s.pi)
    return frozenset(i + 1 for i in range(s.n - 1) if inv[i] > inv[i + 1])


def boundary_sets(s: SimpleBraid) -> Tuple[FrozenSet[int], FrozenSet[int]]:
    """Return the starting and finishing sets ``(S, F)`` of ``s``."""
    return starting_set(s), finishing_set(s)


def compose(a: SimpleBraid, b: SimpleBraid) -> Permutation:
    """Permutation of the product ``a * b`` (not necessarily simple)."""
    _check_same(a, b)
    bp = b.pi
    return tuple(bp[v - 1] for v in a.pi)


def product_if_simple(a: SimpleBraid, b: SimpleBraid) -> Optional[SimpleBraid]:
    """Return ``a * b`` when it is a permutation braid, else ``None``."""
    pi = compose(a, b)
    product = SimpleBraid(a.n, pi)
    if product.length != a.length + b.length:
        return None
    return product


def is_prefix(a: SimpleBraid, b: SimpleBraid) -> bool:
    """``a`` is a prefix of ``b``: every crossing of ``a`` is a crossing of ``b``."""
    _check_same(a, b)
    ap, bp = a.pi, b.pi
    n = a.n
    for i in range(n):
        for j in range(i + 1, n):
            if ap[i] > ap[j] and bp[i] < bp[j]:
                return False
    return True


def right_complement(s: SimpleBraid) -> SimpleBraid:
    """The simple braid ``d`` with ``s * d == delta``."""
    n = s.n
    inv = _invert(s.pi)
    return SimpleBraid(n, tuple(n + 1 - inv[j] for j in range(n)))


def left_complement(s: SimpleBraid) -> SimpleBraid:
    """The simple braid ``c`` with ``c * s == delta``."""
    n = s.n
    inv = _invert(s.pi)
    return SimpleBraid(n, tuple(inv[n - 1 - j] for j in range(n)))


def tau(s: SimpleBraid) -> SimpleBraid:
    """Conjugation by delta: sigma_i maps to sigma_{n-i}."""
    n = s.n
    pi = s.pi
    return SimpleBraid(n, tuple(n + 1 - pi[n - 1 - j] for j in range(n)))


def tau_power(s: SimpleBraid, k: int) -> SimpleBraid:
    return tau(s) if k % 2 else s


def reverse(s: SimpleBraid) -> SimpleBraid:
    """The simple braid spelled by the reversed word of ``s``."""
    return SimpleBraid(s.n, _invert(s.pi))


def meet(a: SimpleBraid, b: SimpleBraid) -> SimpleBraid:
    """Greatest common prefix of two simple braids."""
    _check_same(a, b)
    n = a.n
    ap, bp = list(a.pi), list(b.pi)

    def common(j):
        return ap[j] > ap[j + 1] and bp[j] > bp[j + 1]

    arrangement = list(range(1, n + 1))
    stack = [j for j in range(n - 2, -1, -1) if common(j)]
    while stack:
        j = stack.pop()
        if not common(j):
            continue
        ap[j], ap[j + 1] = ap[j + 1], ap[j]
        bp[j], bp[j + 1] = bp[j + 1], bp[j]
        arrangement[j], arrangement[j + 1] = arrangement[j + 1], arrangement[j]
        for m in (j - 1, j + 1):
            if 0 <= m < n - 1 and common(m):
                stack.append(m)
    return _arrangement_to_simple(n, arrangement)


def suffix_meet(a: SimpleBraid, b: SimpleBraid) -> SimpleBraid:
    """Greatest common suffix of two simple braids."""
    return reverse(meet(reverse(a), reverse(b)))


def join(a: SimpleBraid, b: SimpleBraid) -> SimpleBraid:
    """Least common multiple of two simple braids under the prefix order."""
    _check_same(a, b)
    return left_complement(suffix_meet(right_complement(a), right_complement(b)))


def left_weight_pair(u: SimpleBraid, v: SimpleBraid) -> Tuple[SimpleBraid, SimpleBraid]:
    """Move the largest possible prefix of ``v`` onto the end of ``u``.

    Returns ``(u2, v2)`` with ``u2 * v2 == u * v`` and ``F(u2) >= S(v2)``.
    """
    _check_same(u, v)
    n = u.n
    # iu[p]: strand of u ending at position p + 1
    iu = list(_invert(u.pi))
    vp = list(v.pi)

    def movable(j):
        return iu[j] < iu[j + 1] and vp[j] > vp[j + 1]

    stack = [j for j in range(n - 2, -1, -1) if movable(j)]
    if not stack:
        return u, v
    while stack:
        j = stack.pop()
        if not movable(j):
            continue
        iu[j], iu[j + 1] = iu[j + 1], iu[j]
        vp[j], vp[j + 1] = vp[j + 1], vp[j]
        for m in (j - 1, j + 1):
            if 0 <= m < n - 1 and movable(m):
                stack.append(m)
    return SimpleBraid(n, _invert(iu)), SimpleBraid(n, tuple(vp))


def is_left_weighted(u: SimpleBraid, v: SimpleBraid) -> bool:
    return finishing_set(u) >= starting_set(v)


def extensions(s: SimpleBraid, bound: SimpleBraid) -> Iterator[SimpleBraid]:
    """Simple braids ``s * sigma_j`` that are still prefixes of ``bound``."""
    n = s.n
    inv = _invert(s.pi)
    bp = bound.pi
    for j in range(n - 1):
        left, right = inv[j], inv[j + 1]
        if left < right and bp[left - 1] > bp[right - 1]:
            pi = list(s.pi)
            pi[left - 1], pi[right - 1] = j + 2, j + 1
            yield SimpleBraid(n, tuple(pi))


def atoms_below(bound: SimpleBraid) -> List[SimpleBraid]:
    return [generator(bound.n, i) for i in sorted(starting_set(bound))]


def all_simples(n: int) -> Iterator[SimpleBraid]:
    """Every permutation braid on ``n`` strands (``n!`` of them)."""
    for pi in permutations(range(1, n + 1)):
        yield SimpleBraid(n, pi)
