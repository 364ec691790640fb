"""Text formats for braid words, normal forms and family matrices.

Braid words are signed integers separated by spaces or commas (``"1 -2 3"``).
Normal forms print as ``D^k . w1 . w2`` where each ``wi`` is a positive word
of a canonical factor. Matrices are one row of ``0``/``1`` characters per line;
a ``|`` after the ``b``-th column marks the slot of the vertical strand.
"""

import re
from typing import Iterable, List, Optional, Tuple

from ..braid import Braid, from_factors
from ..simple import simple_from_word
from ..types import Matrix, SignedWord

_DELTA = re.compile(r"^D\^(-?\d+)$")


def parse_word(text: str) -> Tuple[int, ...]:
    """Parse ``"1 -2 3"`` or ``"1,-2,3"``; the empty string is the empty word."""
    tokens = [t for t in re.split(r"[\s,]+", text.strip()) if t]
    try:
        return tuple(int(t) for t in tokens)
    except ValueError as error:
        raise ValueError(f"invalid braid word {text!r}") from error


def format_word(word: SignedWord) -> str:
    return " ".join(str(letter) for letter in word)


def format_braid(x: Braid) -> str:
    return str(x)


def parse_braid(n: int, text: str) -> Braid:
    """Inverse of ``format_braid``; factors may be any reduced positive words."""
    parts = [part.strip() for part in text.split(".")]
    inf = 0
    match = _DELTA.match(parts[0]) if parts else None
    if match:
        inf = int(match.group(1))
        parts = parts[1:]
    factors = []
    for part in parts:
        if part == "e":
            continue
        word = parse_word(part)
        if any(letter <= 0 for letter in word):
            raise ValueError(f"canonical factor {part!r} is not a positive word")
        factors.append(simple_from_word(n, word))
    return from_factors(n, inf, factors)


def parse_matrix(text: str) -> Tuple[Matrix, Optional[int]]:
    """Parse matrix text into rows and the optional slot.

    Rows are separated by newlines or ``;``. Every row must carry its ``|`` at
    the same column if any row does.
    """
    lines = [line.strip() for line in re.split(r"[\n;]", text) if line.strip()]
    if not lines:
        raise ValueError("empty matrix")
    rows: List[Tuple[int, ...]] = []
    slots = set()
    for line in lines:
        line = line.replace(" ", "")
        if not re.fullmatch(r"[01]*\|?[01]*", line):
            raise ValueError(f"invalid matrix row {line!r}")
        slots.add(line.index("|") if "|" in line else None)
        rows.append(tuple(int(c) for c in line.replace("|", "")))
    if len(slots) != 1:
        raise ValueError(f"rows disagree on the slot marker: {sorted(slots, key=str)}")
    return tuple(rows), slots.pop()


def format_matrix(rows: Iterable[Iterable[int]], b: Optional[int] = None) -> str:
    lines = []
    for row in rows:
        bits = "".join(str(v) for v in row)
        lines.append(bits if b is None else f"{bits[:b]}|{bits[b:]}")
    return "\n".join(lines)


def matrix_to_json(rows: Iterable[Iterable[int]], b: Optional[int] = None) -> dict:
    data: dict = {"rows": ["".join(str(v) for v in row) for row in rows]}
    if b is not None:
        data["b"] = b
    return data


def matrix_from_json(data: dict) -> Tuple[Matrix, Optional[int]]:
    try:
        rows = tuple(tuple(int(c) for c in row) for row in data["rows"])
    except (KeyError, TypeError, ValueError) as error:
        raise ValueError(f"invalid matrix JSON {data!r}") from error
    return rows, data.get("b")
