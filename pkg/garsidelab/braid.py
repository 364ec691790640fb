"""Left canonical form of braids and the group operations on it.

Every braid is stored as ``Delta^inf * f1 * ... * fl`` with simple factors
``f1..fl`` that are neither trivial nor ``Delta`` and where each adjacent pair
is left-weighted.
"""

from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple, Union

from ._garside_common import LetterOutOfRange, StrandMismatch
from .simple import (
    SimpleBraid,
    delta,
    finishing_set,
    generator,
    identity,
    left_complement,
    left_weight_pair,
    starting_set,
    tau,
    tau_power,
)
from .types import BraidKey, SignedWord


@dataclass(frozen=True)
class Braid:
    n: int
    inf: int
    factors: Tuple[SimpleBraid, ...] = ()

    @property
    def length(self) -> int:
        """Canonical length."""
        return len(self.factors)

    @property
    def sup(self) -> int:
        return self.inf + len(self.factors)

    def key(self) -> BraidKey:
        """Serialized normal form, used to key sets of braids."""
        body = "|".join(",".join(str(v) for v in f.pi) for f in self.factors)
        return f"{self.n}:{self.inf}:{body}"

    def word(self) -> Tuple[int, ...]:
        """A signed word spelling this braid."""
        d = delta(self.n).word()
        if self.inf >= 0:
            letters = list(d) * self.inf
        else:
            letters = [-i for i in reversed(d)] * (-self.inf)
        for f in self.factors:
            letters.extend(f.word())
        return tuple(letters)

    def __mul__(self, other: "Braid") -> "Braid":
        return multiply(self, other)

    def __str__(self) -> str:
        parts = [f"D^{self.inf}"]
        parts.extend(str(f) for f in self.factors)
        return " . ".join(parts)


Piece = Union[int, SimpleBraid]


def _append(factors: List[SimpleBraid], s: SimpleBraid) -> None:
    factors.append(s)
    i = len(factors) - 2
    while i >= 0:
        u2, v2 = left_weight_pair(factors[i], factors[i + 1])
        if u2 == factors[i]:
            break
        factors[i], factors[i + 1] = u2, v2
        i -= 1


def _settle(n: int, k: int, factors: List[SimpleBraid]) -> Braid:
    changed = True
    while changed:
        changed = False
        for i in range(len(factors) - 1):
            u2, v2 = left_weight_pair(factors[i], factors[i + 1])
            if u2 != factors[i]:
                factors[i], factors[i + 1] = u2, v2
                changed = True
    start = 0
    while start < len(factors) and factors[start].is_delta:
        start += 1
    end = len(factors)
    while end > start and factors[end - 1].is_identity:
        end -= 1
    return Braid(n, k + start, tuple(factors[start:end]))


def _assemble(n: int, pieces: Iterable[Piece]) -> Braid:
    """Normalize a product of simple braids and powers of delta (ints)."""
    k = 0
    factors: List[SimpleBraid] = []
    for piece in pieces:
        if isinstance(piece, int):
            # factors * Delta^e == Delta^e * tau^e(factors)
            if piece % 2:
                factors = [tau(f) for f in factors]
            k += piece
        else:
            if piece.n != n:
                raise StrandMismatch(f"strand counts differ: {n} != {piece.n}")
            _append(factors, piece)
    return _settle(n, k, factors)


def from_factors(n: int, inf: int, factors: Iterable[SimpleBraid]) -> Braid:
    """Normal form of ``Delta^inf * f1 * ... * fl`` for arbitrary simples."""
    return _assemble(n, [inf, *factors])


def from_simple(s: SimpleBraid) -> Braid:
    return _assemble(s.n, [s])


def identity_braid(n: int) -> Braid:
    return Braid(n, 0, ())


def delta_power(n: int, k: int) -> Braid:
    return Braid(n, k, ())


def normal_form(n: int, word: SignedWord) -> Braid:
    """Left canonical form of a signed word.

    Parameters
    ----------
    n
        Number of strands
    word
        Signed generator indices: ``i`` is sigma_i and ``-i`` its inverse

    Example::

        from garsidelab.braid import normal_form
        x = normal_form(3, [2, 1, 1, 2])
        x.inf, [f.word() for f in x.factors]   # 0, [(2, 1), (1, 2)]
    """
    pieces: List[Piece] = []
    for letter in word:
        i = abs(letter)
        if letter == 0 or i > n - 1:
            raise LetterOutOfRange(f"letter {letter} out of range for {n} strands")
        if letter > 0:
            pieces.append(generator(n, i))
        else:
            pieces.append(-1)
            pieces.append(left_complement(generator(n, i)))
    return _assemble(n, pieces)


def multiply(x: Braid, y: Braid) -> Braid:
    if x.n != y.n:
        raise StrandMismatch(f"strand counts differ: {x.n} != {y.n}")
    factors = [tau_power(f, y.inf) for f in x.factors]
    for f in y.factors:
        _append(factors, f)
    return _settle(x.n, x.inf + y.inf, factors)


def inverse(x: Braid) -> Braid:
    pieces: List[Piece] = []
    for f in reversed(x.factors):
        pieces.append(-1)
        pieces.append(left_complement(f))
    pieces.append(-x.inf)
    return _assemble(x.n, pieces)


def tau_braid(x: Braid) -> Braid:
    return Braid(x.n, x.inf, tuple(tau(f) for f in x.factors))


def conjugate(x: Braid, c: Union[Braid, SimpleBraid]) -> Braid:
    """Return ``c^-1 * x * c``."""
    if isinstance(c, SimpleBraid):
        c = from_simple(c)
    return multiply(multiply(inverse(c), x), c)


def is_left_weighted(factors: Sequence[SimpleBraid]) -> bool:
    return all(
        finishing_set(u) >= starting_set(v) for u, v in zip(factors, factors[1:])
    )


def is_rigid(x: Braid) -> bool:
    """The wrap-around pair ``(f_l, tau^inf(f_1))`` is left-weighted too."""
    if not x.factors:
        return False
    first = tau_power(x.factors[0], x.inf)
    return finishing_set(x.factors[-1]) >= starting_set(first)


def as_simple(x: Braid) -> SimpleBraid:
    """The simple braid equal to ``x``; raises ``ValueError`` otherwise."""
    if x.inf == 0 and x.length == 1:
        return x.factors[0]
    if x.inf == 0 and x.length == 0:
        return identity(x.n)
    if x.inf == 1 and x.length == 0:
        return delta(x.n)
    raise ValueError(f"{x} is not a simple braid")
