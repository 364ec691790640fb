"""The permutation braids built from bit rows.

For a row ``a = (a_1..a_p)`` the braid ``alpha(a)`` on ``2p + 2`` strands is
defined by where every strand ends:

* for ``a_k == 1`` strand ``2k`` ends at ``2k + 1``; for ``a_k == 0`` strand
  ``2k + 1`` ends at ``2k``. These are the transposing strands.
* the other ``p + 2`` strands carry the labels ``1, 2, 4, .., 2p, 2p + 1``
  (strand 1, the non-transposing strand of each pair ``2k, 2k + 1``, and
  strand ``2p + 2``). The strand labelled ``l`` ends at the free slot of the
  label ``theta(l)``.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import FrozenSet, List, Optional, Tuple

from .._garside_common import FamilyConsistencyError
from ..braid import Braid, is_left_weighted, is_rigid, tau_braid
from ..const import TAU
from ..simple import SimpleBraid, from_permutation
from ..types import BitRow, Permutation
from .matrix import FamilyElement, plain_element


@dataclass(frozen=True)
class ReducedCycle:
    """A permutation of the labels ``1, 2, 4, .., 2p, 2p + 1``."""

    labels: Tuple[int, ...]
    images: Tuple[int, ...]

    def __call__(self, label: int) -> int:
        return self.images[self.labels.index(label)]

    def inverse(self) -> "ReducedCycle":
        back = {v: k for k, v in zip(self.labels, self.images)}
        return ReducedCycle(self.labels, tuple(back[label] for label in self.labels))

    def cycle(self, start: Optional[int] = None) -> Tuple[int, ...]:
        """The orbit of ``start`` (the smallest label by default)."""
        current = self.labels[0] if start is None else start
        orbit = [current]
        while True:
            current = self(current)
            if current == orbit[0]:
                return tuple(orbit)
            orbit.append(current)

    def is_single_cycle(self) -> bool:
        return len(self.cycle()) == len(self.labels)


def labels(p: int) -> Tuple[int, ...]:
    return (1,) + tuple(range(2, 2 * p + 1, 2)) + (2 * p + 1,)


def _check_row(a: BitRow) -> None:
    if len(a) < 2 or a[0] != 0 or a[-1] != 1 or any(v not in (0, 1) for v in a):
        raise ValueError(f"invalid row {a}: needs p >= 2 bits, a_1 = 0 and a_p = 1")


def all_rows(p: int) -> List[BitRow]:
    """Every row of length ``p`` with ``a_1 == 0`` and ``a_p == 1``."""
    return [(0,) + middle + (1,) for middle in product((0, 1), repeat=p - 2)]


def transposing_indices(a: BitRow) -> FrozenSet[int]:
    return frozenset(2 * k if bit else 2 * k + 1 for k, bit in enumerate(a, 1))


def theta(a: BitRow) -> ReducedCycle:
    """The cycle induced on the non-transposing strands."""
    _check_row(a)
    p = len(a)
    zeros = [j for j, bit in enumerate(a, 1) if not bit]
    ones = [j for j, bit in enumerate(a, 1) if bit]

    def next_zero(i: int) -> int:
        later = [j for j in zeros if j > i]
        return 2 * later[0] if later else 2 * p + 1

    def previous_one(i: int) -> int:
        earlier = [j for j in ones if j < i]
        return 2 * earlier[-1] if earlier else 1

    images = [next_zero(0)]
    for i, bit in enumerate(a, 1):
        images.append(previous_one(i) if bit else next_zero(i))
    images.append(previous_one(p + 1))
    return ReducedCycle(labels(p), tuple(images))


def _even_permutation(a: BitRow) -> List[int]:
    p = len(a)
    n = 2 * p + 2

    def free_slot(label: int) -> int:
        if label == 1:
            return 1
        if label == 2 * p + 1:
            return n
        j = label // 2
        return label + 1 if a[j - 1] == 0 else label

    def strand_of(label: int) -> int:
        if label == 1:
            return 1
        if label == 2 * p + 1:
            return n
        j = label // 2
        return label if a[j - 1] == 0 else label + 1

    pi = [0] * n
    for k, bit in enumerate(a, 1):
        if bit:
            pi[2 * k - 1] = 2 * k + 1
        else:
            pi[2 * k] = 2 * k
    cycle = theta(a)
    for label in cycle.labels:
        pi[strand_of(label) - 1] = free_slot(cycle(label))
    return pi


def insert_vertical_strand(pi: Permutation, slot: int) -> Permutation:
    """Insert a strand fixed at position ``slot``.

    Strands and positions at or above ``slot`` shift up by one.
    """
    shifted = [v + 1 if v >= slot else v for v in pi]
    return tuple(shifted[: slot - 1] + [slot] + shifted[slot - 1 :])


@lru_cache(maxsize=None)
def alpha_row(a: BitRow, b: Optional[int] = None) -> SimpleBraid:
    """The permutation braid of one row (with the vertical strand at slot ``b``).

    Example::

        from garsidelab.family.blocks import alpha_row
        alpha_row((0, 1)).pi   # (3, 6, 2, 5, 1, 4)
    """
    a = tuple(a)
    _check_row(a)
    pi: Permutation = tuple(_even_permutation(a))
    if b is None:
        return from_permutation(pi)
    if not 0 <= b <= len(a):
        raise ValueError(f"slot {b} outside 0..{len(a)}")
    return from_permutation(insert_vertical_strand(pi, 2 * b + 2))


def alpha(e: FamilyElement) -> Braid:
    """The braid of a family element, one canonical factor per row.

    Raises ``FamilyConsistencyError`` when the factors are not left-weighted
    and rigid as written.
    """
    if e.side == TAU:
        return tau_braid(alpha(e.base))
    factors = tuple(alpha_row(row, e.b) for row in e.rows)
    x = Braid(e.n, 0, factors)
    if not is_left_weighted(factors) or not is_rigid(x):
        raise FamilyConsistencyError(f"alpha{e.rows} is not rigid as written")
    return x


def decode_row(s: SimpleBraid) -> Optional[Tuple[BitRow, Optional[int]]]:
    """Row (and slot) ``(a, b)`` with ``alpha_row(a, b) == s``, or ``None``."""
    n = s.n
    if n < 6:
        return None
    if n % 2 == 0:
        p = (n - 2) // 2
        a = tuple(1 if s.pi[2 * k - 1] == 2 * k + 1 else 0 for k in range(1, p + 1))
        if a[0] != 0 or a[-1] != 1:
            return None
        return (a, None) if alpha_row(a) == s else None
    p = (n - 3) // 2
    for b in range(p + 1):
        slot = 2 * b + 2
        if s.pi[slot - 1] != slot:
            continue
        rest = [v - 1 if v > slot else v for v in s.pi[: slot - 1] + s.pi[slot:]]
        a = tuple(1 if rest[2 * k - 1] == 2 * k + 1 else 0 for k in range(1, p + 1))
        if a[0] == 0 and a[-1] == 1 and alpha_row(a, b) == s:
            return a, b
    return None


def element_from_braid(x: Braid, require_M0: bool = True) -> Optional[FamilyElement]:
    """Read a braid back as a family element.

    The braid must have infimum 0 and every factor must be a row braid with a
    common slot. With ``require_M0`` the element must lie in M0 or its image
    under ``tau``; otherwise ``None`` is returned.
    """
    if x.inf != 0 or not x.factors:
        return None
    decoded = [decode_row(f) for f in x.factors]
    if any(d is None for d in decoded):
        return None
    slots = {d[1] for d in decoded if d is not None}
    if len(slots) != 1:
        return None
    rows = tuple(d[0] for d in decoded if d is not None)
    e = plain_element(rows, slots.pop())
    if require_M0 and not e.is_m0():
        return None
    return e
