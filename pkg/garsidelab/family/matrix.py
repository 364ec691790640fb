"""Binary matrices indexing the family and the operations on them.

A k x p matrix ``A`` with first column all 0 and last column all 1 gives a
braid on ``2p + 2`` strands, or on ``2p + 3`` strands when a slot ``b`` for an
extra vertical strand is given. Elements on the ``tau`` side stand for the
image of their stored matrix under ``tau``.
"""

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator, Optional, Sequence

from .._garside_common import BadBoundaryColumns, BadSlot, NotM0
from ..const import M0_MIN_STRANDS, PLAIN, TAU
from ..types import BitRow, Matrix

TRANSFORMS = ("cycle", "uncycle", "tau", "hat", "check")


def _as_matrix(rows: Iterable[Sequence[int]]) -> Matrix:
    matrix = tuple(tuple(int(v) for v in row) for row in rows)
    if not matrix:
        raise ValueError("matrix has no rows")
    width = len(matrix[0])
    for row in matrix:
        if len(row) != width:
            raise ValueError(f"ragged matrix: rows of length {width} and {len(row)}")
        if any(v not in (0, 1) for v in row):
            raise ValueError(f"non-binary row {row}")
    if width < 2:
        raise ValueError(f"rows need at least 2 columns, got {width}")
    return matrix


def column(rows: Matrix, i: int) -> BitRow:
    """Column ``i`` (1-based)."""
    return tuple(row[i - 1] for row in rows)


def is_constant(col: BitRow) -> bool:
    return len(set(col)) == 1


def cycling_order(rows: Matrix) -> int:
    """Smallest ``m >= 1`` such that moving ``m`` rows to the bottom fixes ``rows``."""
    k = len(rows)
    for m in range(1, k + 1):
        if rows[m:] + rows[:m] == rows:
            return m
    return k


def tau_row(row: BitRow) -> BitRow:
    return tuple(1 - v for v in reversed(row))


def tau_rows(rows: Matrix) -> Matrix:
    return tuple(tau_row(row) for row in rows)


def m0_violation(rows: Matrix, b: Optional[int]) -> Optional[str]:
    """Reason ``(rows, b)`` is outside the M0 class, or ``None``."""
    k, p = len(rows), len(rows[0])
    n = 2 * p + 2 if b is None else 2 * p + 3
    if n < M0_MIN_STRANDS:
        return f"needs at least {M0_MIN_STRANDS} strands, got {n}"
    if k < 2:
        return f"needs at least 2 rows, got {k}"
    for i in range(2, p - 2):
        if not is_constant(column(rows, i)):
            return f"column {i} is not constant"
    for i in (p - 2, p - 1):
        if is_constant(column(rows, i)):
            return f"column {i} is constant"
    order = cycling_order(rows)
    if order != k:
        return f"cycling order {order} != {k}"
    return None


@dataclass(frozen=True)
class FamilyElement:
    rows: Matrix
    b: Optional[int] = None
    side: str = PLAIN

    @property
    def k(self) -> int:
        return len(self.rows)

    @property
    def p(self) -> int:
        return len(self.rows[0])

    @property
    def n(self) -> int:
        return 2 * self.p + (2 if self.b is None else 3)

    @property
    def matrix(self) -> Matrix:
        """The matrix this element stands for (``tau`` applied on the tau side)."""
        return tau_rows(self.rows) if self.side == TAU else self.rows

    @property
    def slot(self) -> Optional[int]:
        if self.b is None or self.side == PLAIN:
            return self.b
        return self.p - self.b

    @property
    def base(self) -> "FamilyElement":
        return FamilyElement(self.rows, self.b, PLAIN)

    def is_m0(self) -> bool:
        if m0_violation(self.rows, self.b) is not None:
            return False
        return self.b is None or self.b == self.p - 2

    def with_rows(self, rows: Matrix) -> "FamilyElement":
        return FamilyElement(rows, self.b, self.side)


def make_element(
    rows: Iterable[Sequence[int]],
    b: Optional[int] = None,
    require_M0: bool = False,
    side: str = PLAIN,
) -> FamilyElement:
    """Validate a matrix (and slot) and return the family element.

    Parameters
    ----------
    rows
        Rows of 0/1 entries, all of the same length ``p``
    b
        Slot of the vertical strand for odd strand counts, ``0 <= b <= p``
    require_M0
        Also enforce the M0 conditions: constant interior columns, the two
        columns before the last non-constant, full cycling order, ``b == p - 2``
    side
        ``"plain"`` or ``"tau"``

    Example::

        from garsidelab.family import make_element
        e = make_element([(0, 1, 0, 1, 1, 0, 1), (0, 1, 0, 1, 0, 1, 1)], b=5,
                         require_M0=True)
        e.n   # 17
    """
    matrix = _as_matrix(rows)
    p = len(matrix[0])
    if not is_constant(column(matrix, 1)) or matrix[0][0] != 0:
        raise BadBoundaryColumns(f"first column must be all 0: {column(matrix, 1)}")
    if not is_constant(column(matrix, p)) or matrix[0][p - 1] != 1:
        raise BadBoundaryColumns(f"last column must be all 1: {column(matrix, p)}")
    if b is not None and not 0 <= b <= p:
        raise BadSlot(f"slot {b} outside 0..{p}")
    if side not in (PLAIN, TAU):
        raise ValueError(f"unknown side {side!r}")
    if require_M0:
        reason = m0_violation(matrix, b)
        if reason is not None:
            raise NotM0(reason)
        if b is not None and b != p - 2:
            raise BadSlot(f"slot must be {p - 2} for M0 elements, got {b}")
    return FamilyElement(matrix, b, side)


def hat_rows(rows: Matrix) -> Matrix:
    p = len(rows[0])
    return tuple((0,) + (1,) * (p - 4) + row[p - 3 :] for row in rows)


def check_rows(rows: Matrix) -> Matrix:
    p = len(rows[0])
    return tuple((0,) + (0,) * (p - 4) + row[p - 3 :] for row in rows)


def _require_m0(e: FamilyElement, what: str) -> None:
    if not e.is_m0():
        raise NotM0(f"{what} needs an M0 element, got {e.rows} (b={e.b})")


def transform(e: FamilyElement, kind: str) -> FamilyElement:
    """Apply ``cycle``, ``uncycle``, ``tau``, ``hat`` or ``check`` to ``e``.

    Row cycling and the hat/check projections commute with ``tau`` and act on
    the stored matrix; ``tau`` switches the side.
    """
    if kind == "cycle":
        return e.with_rows(e.rows[1:] + e.rows[:1])
    if kind == "uncycle":
        return e.with_rows(e.rows[-1:] + e.rows[:-1])
    if kind == "tau":
        return FamilyElement(e.rows, e.b, TAU if e.side == PLAIN else PLAIN)
    if kind == "hat":
        _require_m0(e, "hat")
        return e.with_rows(hat_rows(e.rows))
    if kind == "check":
        _require_m0(e, "check")
        return e.with_rows(check_rows(e.rows))
    raise ValueError(f"unknown transform {kind!r}, expected one of {TRANSFORMS}")


def is_terminal(e: FamilyElement) -> bool:
    return e.is_m0() and e.rows == check_rows(e.rows)


def plain_element(rows: Matrix, b: Optional[int]) -> FamilyElement:
    """Element whose actual matrix is ``rows``: plain if in M0, else the tau side."""
    plain = FamilyElement(rows, b, PLAIN)
    if plain.is_m0():
        return plain
    flipped_b = None if b is None else len(rows[0]) - b
    mirrored = FamilyElement(tau_rows(rows), flipped_b, TAU)
    if mirrored.is_m0():
        return mirrored
    return plain


def m0_elements(k: int, n: int, terminal_only: bool = False) -> Iterator[FamilyElement]:
    """Every element of M0 with ``k`` rows on ``n`` strands.

    With ``terminal_only`` the constant columns are all 0, one element per
    switching lattice.
    """
    p = (n - 2) // 2 if n % 2 == 0 else (n - 3) // 2
    b = None if n % 2 == 0 else p - 2
    if 2 * p + (2 if b is None else 3) < M0_MIN_STRANDS or k < 2:
        return
    blocks = [(0,) * (p - 4)] if terminal_only else list(product((0, 1), repeat=p - 4))
    for block in blocks:
        for pairs in product(product((0, 1), repeat=2), repeat=k):
            rows = tuple((0,) + block + pair + (1,) for pair in pairs)
            if m0_violation(rows, b) is None:
                yield FamilyElement(rows, b, PLAIN)
