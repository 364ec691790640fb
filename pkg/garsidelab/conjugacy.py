from dataclasses import dataclass
from typing import Set, Tuple

from ._garside_common import BudgetExceeded, ZeroLength
from .braid import (
    Braid,
    from_factors,
    from_simple,
    identity_braid,
    inverse,
    is_rigid,
    multiply,
)
from .const import DEFAULT_SUMMIT_STEPS
from .simple import SimpleBraid, tau_power


@dataclass(frozen=True)
class SummitCertificate:
    """``conjugator^-1 * input * conjugator == representative``."""

    representative: Braid
    conjugator: Braid
    inf_s: int
    sup_s: int


def cycling(x: Braid) -> Tuple[Braid, SimpleBraid]:
    """Move the first factor (twisted by ``tau^inf``) to the end.

    Returns the cycled braid and the simple conjugator ``c`` with
    ``c^-1 * x * c`` equal to it.
    """
    if not x.factors:
        raise ZeroLength(f"cannot cycle {x}: canonical length is 0")
    c = tau_power(x.factors[0], x.inf)
    return from_factors(x.n, x.inf, [*x.factors[1:], c]), c


def decycling(x: Braid) -> Tuple[Braid, Braid]:
    """Move the last factor (twisted by ``tau^inf``) to the front."""
    if not x.factors:
        raise ZeroLength(f"cannot decycle {x}: canonical length is 0")
    last = x.factors[-1]
    y = from_factors(x.n, x.inf, [tau_power(last, x.inf), *x.factors[:-1]])
    return y, inverse(from_simple(last))


class _StepCounter:
    def __init__(self, limit):
        self.limit = limit
        self.steps = 0

    def tick(self, y, conjugator):
        self.steps += 1
        if self.steps > self.limit:
            raise BudgetExceeded(
                f"super summit reduction exceeded {self.limit} steps",
                partial=SummitCertificate(y, conjugator, y.inf, y.sup),
            )


def to_super_summit(
    x: Braid, max_steps: int = DEFAULT_SUMMIT_STEPS
) -> SummitCertificate:
    """Conjugate ``x`` into its super summit set.

    Cycling is repeated while it raises the infimum; once the trajectory comes
    back to a braid it has already visited the infimum is maximal. Decycling
    then lowers the supremum the same way, and both phases alternate until
    neither changes anything.
    """
    conjugator = identity_braid(x.n)
    if is_rigid(x):
        return SummitCertificate(x, conjugator, x.inf, x.sup)
    counter = _StepCounter(max_steps)
    y = x
    while True:
        inf_before, sup_before = y.inf, y.sup

        seen: Set[str] = {y.key()}
        while y.factors:
            z, c = cycling(y)
            conjugator = multiply(conjugator, from_simple(c))
            counter.tick(z, conjugator)
            if z.inf > y.inf:
                seen = set()
            y = z
            if y.key() in seen:
                break
            seen.add(y.key())

        seen = {y.key()}
        while y.factors:
            z, d = decycling(y)
            conjugator = multiply(conjugator, d)
            counter.tick(z, conjugator)
            if z.sup < y.sup:
                seen = set()
            y = z
            if y.key() in seen:
                break
            seen.add(y.key())

        if (y.inf, y.sup) == (inf_before, sup_before):
            return SummitCertificate(y, conjugator, y.inf, y.sup)
