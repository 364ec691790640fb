import random
from typing import Iterator, List, Optional, Tuple

from .const import DEFAULT_SEED, PLAIN
from .family.matrix import FamilyElement, m0_violation
from .types import BitRow, SignedWord


def _rng(rng: Optional[random.Random]) -> random.Random:
    return rng if rng is not None else random.Random(DEFAULT_SEED)


def random_word(n: int, length: int, rng: Optional[random.Random] = None) -> List[int]:
    """A signed word of the given length over ``sigma_1..sigma_(n-1)``."""
    rng = _rng(rng)
    return [rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(length)]


def _rewrite_once(word: List[int], n: int, rng: random.Random) -> List[int]:
    moves = []
    for i in range(len(word) - 1):
        a, b = word[i], word[i + 1]
        if abs(abs(a) - abs(b)) >= 2:
            moves.append(("commute", i))
        if i + 2 < len(word):
            c = word[i + 2]
            if a == c and abs(abs(a) - abs(b)) == 1 and (a > 0) == (b > 0):
                moves.append(("braid", i))
    moves.append(("insert", rng.randint(0, len(word))))
    kind, i = rng.choice(moves)
    if kind == "commute":
        return word[:i] + [word[i + 1], word[i]] + word[i + 2 :]
    if kind == "braid":
        a, b = word[i], word[i + 1]
        return word[:i] + [b, a, b] + word[i + 3 :]
    letter = rng.choice((1, -1)) * rng.randint(1, n - 1)
    return word[:i] + [letter, -letter] + word[i:]


def random_rewrite(
    word: SignedWord, n: int, steps: int, rng: Optional[random.Random] = None
) -> List[int]:
    """Apply ``steps`` random Artin relations (or free insertions) to ``word``."""
    rng = _rng(rng)
    result = list(word)
    for _ in range(steps):
        result = _rewrite_once(result, n, rng)
    return result


def random_row(p: int, rng: Optional[random.Random] = None) -> BitRow:
    rng = _rng(rng)
    return (0,) + tuple(rng.randint(0, 1) for _ in range(p - 2)) + (1,)


def _shape(n: int) -> Tuple[int, bool]:
    if n < 6:
        raise ValueError(f"family braids need at least 6 strands, got {n}")
    return ((n - 2) // 2, False) if n % 2 == 0 else ((n - 3) // 2, True)


def random_element(
    k: int, n: int, rng: Optional[random.Random] = None
) -> FamilyElement:
    """A random element of M(k, n); odd ``n`` gets a random slot."""
    rng = _rng(rng)
    p, odd = _shape(n)
    rows = tuple(random_row(p, rng) for _ in range(k))
    return FamilyElement(rows, rng.randint(0, p) if odd else None, PLAIN)


def random_m0_element(
    k: int, n: int, rng: Optional[random.Random] = None
) -> FamilyElement:
    """A random element of M0(k, n), drawn by rejection."""
    rng = _rng(rng)
    p, odd = _shape(n)
    if p < 4 or k < 2:
        raise ValueError(f"M0 needs k >= 2 and at least 10 strands, got k={k}, n={n}")
    b = p - 2 if odd else None
    while True:
        block = tuple(rng.randint(0, 1) for _ in range(p - 4))
        rows = tuple(
            (0,) + block + (rng.randint(0, 1), rng.randint(0, 1), 1) for _ in range(k)
        )
        if m0_violation(rows, b) is None:
            return FamilyElement(rows, b, PLAIN)


def generate_one(
    k: int, n: int, m0: bool = False, seed: int = DEFAULT_SEED
) -> FamilyElement:
    """
    Returns a single random family element.

    Parameters
    ----------
    k
        Number of rows
    n
        Number of strands
    m0
        Draw from M0(k, n) instead of M(k, n)
    seed
        Seed of the generator


    Example::

        from garsidelab.family import alpha
        from garsidelab.utils import generate_one

        alpha(generate_one(2, 14, m0=True))
    """
    return next(generate_many(k, n, 1, m0, seed))


def generate_many(
    k: int, n: int, count: int, m0: bool = False, seed: int = DEFAULT_SEED
) -> Iterator[FamilyElement]:
    """
    A generator that yields ``count`` random family elements, reproducibly for
    a given seed.
    """
    rng = random.Random(seed)
    for _ in range(count):
        yield random_m0_element(k, n, rng) if m0 else random_element(k, n, rng)
