"""Property checks of the family construction against the generic engine.

``verify_suite`` runs every check over seeded samples and collects the
outcomes into a ``VerificationReport``. Checks that need the exhaustive
conjugator search run only when oracle mode is on and the strand count is at
most ``ORACLE_MAX_STRANDS``; elsewhere the closed-form conjugators are
verified directly.
"""

import datetime
import json
import random
import warnings
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Dict, FrozenSet, Iterable, List, Optional, Tuple

from ._garside_common import (
    BudgetExceeded,
    CheckResult,
    FamilyConsistencyError,
    FamilyError,
    FamilyRegimeWarning,
    VerificationError,
)
from .braid import (
    Braid,
    as_simple,
    conjugate,
    delta_power,
    from_simple,
    inverse,
    is_rigid,
    multiply,
    normal_form,
)
from .const import (
    ADD_TAIL,
    CUT_HEAD,
    DEFAULT_SAMPLE_SIZE,
    DEFAULT_SEED,
    DISJOINT_REGIME_MIN_STRANDS,
    M0_MIN_STRANDS,
    ORACLE_MAX_STRANDS,
    PLAIN,
)
from .curves import find_standard_reduction
from .family.blocks import (
    all_rows,
    alpha,
    alpha_row,
    decode_row,
    element_from_braid,
    theta,
    transposing_indices,
)
from .family.conjugators import (
    forced_prefixes,
    initializer,
    rho_closed_form,
    rho_generator_form,
    rho_path,
    switchings,
)
from .family.graph import expected_rigid_size, family_rigid_graph, size_lower_bound
from .family.matrix import FamilyElement, transform
from .invariant_sets import (
    ConjugacyGraph,
    SearchBudget,
    enumerate_class,
    minimal_conjugators,
)
from .simple import (
    SimpleBraid,
    atoms_below,
    extensions,
    finishing_set,
    is_prefix,
    right_complement,
    simple_from_word,
    starting_set,
)
from .utils import random_element, random_m0_element

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped"

BLOCK_RULE_MAX_P = 8

# check name -> the result it confirms
ANCHORS = {
    "row-blocks": "block-rules",
    "reduced-cycle": "reduced-cycle",
    "rigid-as-written": "alpha-rigid",
    "no-standard-reduction": "alpha-irreducible",
    "cut-head-conjugators": "cut-head-minimal",
    "forced-prefixes": "forced-accumulation",
    "switchings": "switching-exact",
    "closed-form": "switching-product",
    "initializer": "initializing-identity",
    "containment": "family-containment",
    "oracle-equivalence": "rigid-set-equality",
    "rigid-set-size": "rigid-set-count",
    "size-bound": "rigid-set-bound",
}

Outcome = Tuple[List[str], str]


@dataclass
class VerificationReport:
    seed: int
    checks: List[CheckResult] = field(default_factory=list)
    created: str = ""

    @property
    def totals(self) -> Dict[str, int]:
        counts = Counter(c.status for c in self.checks)
        return {status: counts[status] for status in (PASS, FAIL, SKIPPED)}

    @property
    def failures(self) -> List[CheckResult]:
        return [c for c in self.checks if c.status == FAIL]

    @property
    def ok(self) -> bool:
        return not self.failures

    @property
    def budget_exceeded(self) -> bool:
        return any(
            c.status == SKIPPED and c.details.startswith("budget") for c in self.checks
        )

    def to_dict(self) -> dict:
        return {
            "seed": self.seed,
            "created": self.created,
            "totals": self.totals,
            "checks": [c._asdict() for c in self.checks],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def __str__(self) -> str:
        lines = [str(c) for c in self.checks]
        totals = ", ".join(f"{count} {status}" for status, count in self.totals.items())
        lines.append(f"{len(self.checks)} checks: {totals}")
        return "\n".join(lines)


def _p_of(n: int) -> int:
    return (n - 2) // 2 if n % 2 == 0 else (n - 3) // 2


def _positive_starting_set(x: Braid) -> FrozenSet[int]:
    if x.inf > 0:
        return frozenset(range(1, x.n))
    return starting_set(x.factors[0]) if x.factors else frozenset()


def _proper_prefixes(rho: SimpleBraid) -> List[SimpleBraid]:
    found = {s.pi: s for s in atoms_below(rho)}
    level = list(found.values())
    while level:
        following = []
        for s in level:
            for nxt in extensions(s, rho):
                if nxt.pi not in found:
                    found[nxt.pi] = nxt
                    following.append(nxt)
        level = following
    found.pop(rho.pi, None)
    return sorted(found.values(), key=lambda s: s.pi)


def _is_rigid_conjugator(x: Braid, rho: SimpleBraid) -> bool:
    y = conjugate(x, rho)
    if not is_rigid(y):
        return False
    if (y.inf, y.length) != (x.inf, x.length):
        raise FamilyConsistencyError(f"rigid conjugate {y} of {x} changes shape")
    return True


class _Run:
    def __init__(self, n_range, k_range, sample_size, seed, oracle, budget):
        self.n_range = sorted(set(n_range))
        self.k_range = sorted(set(k_range))
        self.sample_size = sample_size
        self.oracle = oracle
        self.budget = budget
        self.report = VerificationReport(seed)
        rng = random.Random(seed)
        self.samples: Dict[Tuple[int, int], List[FamilyElement]] = {}
        self.m0_samples: Dict[Tuple[int, int], List[FamilyElement]] = {}
        for n in self.n_range:
            for k in self.k_range:
                if n >= 6:
                    self.samples[n, k] = [
                        random_element(k, n, rng) for _ in range(sample_size)
                    ]
                if n >= M0_MIN_STRANDS and k >= 2:
                    self.m0_samples[n, k] = [
                        random_m0_element(k, n, rng) for _ in range(sample_size)
                    ]
        self.graphs: Dict[Tuple[int, int], ConjugacyGraph] = {}

    def use_oracle(self, n: int) -> bool:
        return self.oracle and n <= ORACLE_MAX_STRANDS

    def check(self, name: str, parameters: dict, fn: Callable[[], Outcome]):
        try:
            with warnings.catch_warnings():
                warnings.simplefilter("ignore", FamilyRegimeWarning)
                problems, summary = fn()
        except BudgetExceeded as error:
            status, details = SKIPPED, f"budget exceeded: {error}"
        except (FamilyConsistencyError, FamilyError, ValueError) as error:
            status, details = FAIL, f"{type(error).__name__}: {error}"
        else:
            status = FAIL if problems else PASS
            details = "; ".join(problems[:5]) if problems else summary
        result = CheckResult(name, ANCHORS[name], parameters, status, details)
        self.report.checks.append(result)

    def skip(self, name: str, parameters: dict, reason: str):
        result = CheckResult(name, ANCHORS[name], parameters, SKIPPED, reason)
        self.report.checks.append(result)

    def graph(self, n: int, k: int) -> ConjugacyGraph:
        if (n, k) not in self.graphs:
            with warnings.catch_warnings():
                warnings.simplefilter("ignore", FamilyRegimeWarning)
                self.graphs[n, k] = family_rigid_graph(self.m0_samples[n, k][0])
        return self.graphs[n, k]


def _block_rules(p: int) -> Outcome:
    problems = []
    evens = frozenset(range(2, 2 * p + 1, 2))
    for a in all_rows(p):
        s = alpha_row(a)
        if s.length != 4 * p + 1:
            problems.append(f"{a}: {s.length} crossings")
        if starting_set(s) != evens:
            problems.append(f"{a}: starting set {sorted(starting_set(s))}")
        if finishing_set(s) != evens | {1, 2 * p + 1}:
            problems.append(f"{a}: finishing set {sorted(finishing_set(s))}")
        for k, bit in enumerate(a, 1):
            strand, end = (2 * k, 2 * k + 1) if bit else (2 * k + 1, 2 * k)
            if strand not in transposing_indices(a) or s.pi[strand - 1] != end:
                problems.append(f"{a}: strand {strand} does not end at {end}")
    return problems, f"{len(all_rows(p))} rows"


def _reduced_cycle(p: int) -> Outcome:
    problems = []
    for a in all_rows(p):
        cycle = theta(a)
        if len(cycle.cycle()) != p + 2:
            problems.append(f"{a}: cycle {cycle.cycle()}")
        zeros = [j for j, bit in enumerate(a, 1) if not bit]
        for i in zeros:
            later = [j for j in zeros if j > i]
            expected = 2 * later[0] if later else 2 * p + 1
            if cycle(2 * i) != expected:
                problems.append(f"{a}: theta({2 * i}) = {cycle(2 * i)} != {expected}")
    return problems, f"{len(all_rows(p))} rows"


def _rigid_as_written(sample: List[FamilyElement]) -> Outcome:
    problems = []
    owners: Dict[str, tuple] = {}
    for e in sample:
        x = alpha(e)
        word = [letter for f in x.factors for letter in f.word()]
        if normal_form(x.n, word) != x:
            problems.append(f"{e.rows}: normal form differs from the row factors")
        actual = (e.matrix, e.slot)
        if owners.setdefault(x.key(), actual) != actual:
            problems.append(f"{e.rows} and {owners[x.key()][0]} give the same braid")
    return problems, f"{len(sample)} elements"


def _no_reduction(sample: List[FamilyElement]) -> Outcome:
    problems = []
    for e in sample:
        curves = find_standard_reduction(alpha(e))
        if curves:
            problems.append(f"{e.rows}: periodic curve {curves[0].curve}")
    return problems, f"{len(sample)} elements"


def _cut_head(run: _Run, n: int, sample: List[FamilyElement]) -> Outcome:
    problems = []
    for e in sample:
        x = alpha(e)
        head = x.factors[0]
        if run.use_oracle(n):
            found = minimal_conjugators(x, run.budget, kinds=(CUT_HEAD,))
            if found != [(head, CUT_HEAD)]:
                problems.append(f"{e.rows}: cut-head set {[str(r) for r, _ in found]}")
        elif conjugate(x, head) != alpha(transform(e, "cycle")):
            problems.append(f"{e.rows}: first row does not cycle")
    mode = "exhaustive" if run.use_oracle(n) else "direct"
    return problems, f"{len(sample)} elements, {mode}"


def _forced(n: int, sample: List[FamilyElement]) -> Outcome:
    problems = []
    p = _p_of(n)
    count = 0
    rows = sorted({row for e in sample for row in e.rows})
    for a in rows:
        if n % 2 == 0:
            s = alpha_row(a)
            cases = [(None, seed, CUT_HEAD, s) for seed in theta(a).labels]
            tail = right_complement(s)
            cases += [(None, seed, ADD_TAIL, tail) for seed in range(3, 2 * p, 2)]
        else:
            cases = []
            for b in range(1, p):
                tail = right_complement(alpha_row(a, b))
                cases += [(b, seed, ADD_TAIL, tail) for seed in (2 * b + 1, 2 * b + 2)]
        for b, seed, mode, bound in cases:
            for word in forced_prefixes(a, b, seed, mode):
                count += 1
                if not is_prefix(simple_from_word(n, word), bound):
                    problems.append(
                        f"{a} b={b} {mode} seed {seed}: {word} not a prefix"
                    )
    for e in sample:
        if n % 2 == 0 and e.side == PLAIN and e.is_m0():
            count += _forced_divide_switchings(e, problems)
    return problems, f"{count} forced words"


def _forced_divide_switchings(e: FamilyElement, problems: List[str]) -> int:
    last, _ = decode_row(alpha(e).factors[-1])
    count = 0
    for rho, _ in switchings(e):
        for seed in range(3, 2 * e.p, 2):
            if not is_prefix(simple_from_word(e.n, (seed,)), rho):
                continue
            for word in forced_prefixes(last, None, seed, ADD_TAIL):
                count += 1
                if not is_prefix(simple_from_word(e.n, word), rho):
                    problems.append(f"{e.rows}: {word} does not divide switching {rho}")
    return count


def _switchings(run: _Run, n: int, sample: List[FamilyElement]) -> Outcome:
    problems = []
    count = 0
    for e in sample:
        x = alpha(e)
        predicted = switchings(e)
        for rho, target in predicted:
            count += 1
            if conjugate(x, rho) != alpha(target):
                problems.append(f"{e.rows}: {rho} does not reach {target.rows}")
            for prefix in _proper_prefixes(rho):
                if _is_rigid_conjugator(x, prefix):
                    problems.append(
                        f"{e.rows}: proper prefix {prefix} of {rho} is rigid"
                    )
        if run.use_oracle(n):
            expected = {rho.pi for rho, _ in predicted}
            if transform(e, "check") == e:
                expected.add(initializer(e, warn=False)[0].pi)
            minimal = minimal_conjugators(x, run.budget, (ADD_TAIL,))
            found = {rho.pi for rho, _ in minimal}
            if found != expected:
                problems.append(f"{e.rows}: add-tail set has {len(found)} conjugators")
    return problems, f"{count} switchings"


def _closed_form(run: _Run, n: int, sample: List[FamilyElement]) -> Outcome:
    problems = []
    p = _p_of(n)
    closed = rho_closed_form(n)
    terminal = transform(sample[0], "check")
    if rho_path(terminal) != closed:
        problems.append("switching path product differs from the closed form")
    if rho_generator_form(n) != closed:
        problems.append("generator spelling differs from the closed form")
    expected = frozenset(range(3, 2 * p - 6, 2))
    if _positive_starting_set(closed) != expected:
        problems.append(f"starting set {sorted(_positive_starting_set(closed))}")
    rng = random.Random(run.report.seed)
    for e in sample:
        if rho_path(e, rng) != rho_path(e, rng):
            problems.append(f"{e.rows}: switching paths disagree")
    return problems, f"p={p}"


def _initializer(n: int, sample: List[FamilyElement]) -> Outcome:
    problems = []
    for e in sample:
        terminal = transform(e, "check")
        rho, target = initializer(terminal, warn=False)
        if conjugate(alpha(terminal), rho) != alpha(target):
            problems.append(
                f"{terminal.rows}: initializer does not reach {target.rows}"
            )
        if _p_of(n) == 4:
            last = from_simple(alpha_row(terminal.rows[-1], terminal.b))
            short = as_simple(multiply(inverse(last), delta_power(n, 1)))
            if short != rho:
                problems.append(
                    f"{terminal.rows}: initializer is not the last row's complement"
                )
    return problems, f"{len(sample)} elements"


def _containment(graph: ConjugacyGraph) -> Outcome:
    problems = [f"edge: {err}" for err in graph.edge_errors()]
    for x in graph.nodes:
        if not is_rigid(x):
            problems.append(f"{x} is not rigid")
        if element_from_braid(x) is None:
            problems.append(f"{x} is not a family braid")
    if not graph.is_strongly_connected():
        problems.append("graph is not strongly connected")
    return problems, f"{len(graph)} nodes"


def _oracle_equivalence(run: _Run, graph: ConjugacyGraph, e: FamilyElement) -> Outcome:
    generic = enumerate_class(alpha(e), run.budget)
    if generic.keys() != graph.keys():
        missing = len(generic.keys() - graph.keys())
        extra = len(graph.keys() - generic.keys())
        return [f"{missing} rigid conjugates missing, {extra} extra"], ""
    return [], f"{len(graph)} nodes"


def _size(n: int, k: int, graph: ConjugacyGraph) -> Outcome:
    expected = expected_rigid_size(n, k)
    details = f"expected {expected}, counted {len(graph)}"
    return ([details] if len(graph) != expected else []), details


def _bound(n: int, k: int) -> Outcome:
    expected, bound = expected_rigid_size(n, k), size_lower_bound(n, k)
    details = f"{expected} >= {bound:.2f}"
    return ([] if expected >= bound else [details]), details


def verify_suite(
    n_range: Iterable[int],
    k_range: Iterable[int],
    sample_size: int = DEFAULT_SAMPLE_SIZE,
    seed: int = DEFAULT_SEED,
    raise_errors: bool = False,
    oracle: bool = True,
    budget: Optional[SearchBudget] = None,
) -> VerificationReport:
    """Run every family check over seeded samples.

    Parameters
    ----------
    n_range
        Strand counts to sample
    k_range
        Row counts to sample
    sample_size
        Elements drawn per ``(n, k)``
    seed
        Seed of the sample generator; equal seeds give equal reports apart
        from the ``created`` timestamp
    raise_errors
        Raise ``VerificationError`` with the failing checks instead of only
        recording them
    oracle
        Compare against the exhaustive search where ``n <= 11``
    budget
        Caps for the exhaustive searches; a check that trips them is skipped


    Example::

        from garsidelab.verification import verify_suite

        report = verify_suite([14], [2])
        report.ok   # True
    """
    run = _Run(n_range, k_range, sample_size, seed, oracle, budget or SearchBudget())
    run.report.created = datetime.datetime.now(datetime.timezone.utc).isoformat()
    ps = sorted(set(range(2, BLOCK_RULE_MAX_P + 1)) | {_p_of(n) for n in run.n_range})

    for p in ps:
        run.check("row-blocks", {"p": p}, lambda p=p: _block_rules(p))
    for p in ps:
        run.check("reduced-cycle", {"p": p}, lambda p=p: _reduced_cycle(p))
    for (n, k), sample in run.samples.items():
        run.check(
            "rigid-as-written",
            {"n": n, "k": k},
            lambda s=sample: _rigid_as_written(s),
        )
    for (n, k), sample in run.samples.items():
        run.check(
            "no-standard-reduction",
            {"n": n, "k": k},
            lambda s=sample: _no_reduction(s),
        )
    for (n, k), sample in run.samples.items():
        params = {"n": n, "k": k}
        if k < 2:
            reason = "needs k >= 2"
            run.skip("cut-head-conjugators", params, reason)
            continue
        run.check(
            "cut-head-conjugators",
            params,
            lambda n=n, s=sample: _cut_head(run, n, s),
        )
    for n in run.n_range:
        sample = [e for k in run.k_range for e in run.samples.get((n, k), [])]
        sample += [e for k in run.k_range for e in run.m0_samples.get((n, k), [])]
        if sample:
            run.check(
                "forced-prefixes",
                {"n": n},
                lambda n=n, s=sample: _forced(n, s),
            )
    for (n, k), sample in run.m0_samples.items():
        run.check(
            "switchings",
            {"n": n, "k": k},
            lambda n=n, s=sample: _switchings(run, n, s),
        )
    for n in sorted({n for n, _ in run.m0_samples}):
        sample = [e for k in run.k_range for e in run.m0_samples.get((n, k), [])]
        run.check(
            "closed-form",
            {"n": n},
            lambda n=n, s=sample: _closed_form(run, n, s),
        )
    for (n, k), sample in run.m0_samples.items():
        run.check(
            "initializer",
            {"n": n, "k": k},
            lambda n=n, s=sample: _initializer(n, s),
        )
    for n, k in run.m0_samples:
        run.check(
            "containment",
            {"n": n, "k": k},
            lambda n=n, k=k: _containment(run.graph(n, k)),
        )
    for (n, k), sample in run.m0_samples.items():
        params = {"n": n, "k": k}
        if not run.use_oracle(n):
            reason = "oracle off"
            if oracle:
                reason = f"more than {ORACLE_MAX_STRANDS} strands"
            run.skip("oracle-equivalence", params, reason)
            continue
        run.check(
            "oracle-equivalence",
            params,
            lambda n=n, k=k, e=sample[0]: _oracle_equivalence(run, run.graph(n, k), e),
        )
    for n, k in run.m0_samples:
        params = {"n": n, "k": k}
        if n < DISJOINT_REGIME_MIN_STRANDS:
            reason = f"fewer than {DISJOINT_REGIME_MIN_STRANDS} strands"
            run.skip("rigid-set-size", params, reason)
            continue
        run.check(
            "rigid-set-size",
            params,
            lambda n=n, k=k: _size(n, k, run.graph(n, k)),
        )
    for n in run.n_range:
        if n < DISJOINT_REGIME_MIN_STRANDS:
            continue
        for k in run.k_range:
            run.check(
                "size-bound",
                {"n": n, "k": k},
                lambda n=n, k=k: _bound(n, k),
            )

    if raise_errors and run.report.failures:
        raise VerificationError(*run.report.failures)
    return run.report
