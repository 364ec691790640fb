import json
import os
import sys
import warnings
from argparse import ArgumentParser, ArgumentTypeError
from typing import List, Optional

import garsidelab as garside
from ._garside_common import BudgetExceeded, NotSupported, OracleSizeWarning
from .braid import Braid, is_rigid, normal_form
from .const import (
    DEFAULT_MAX_NODES,
    DEFAULT_MAX_PREFIX_STATES,
    DEFAULT_SAMPLE_SIZE,
    DEFAULT_SEED,
    EXIT_BUDGET,
    EXIT_OK,
    EXIT_USAGE,
    EXIT_VERIFY_FAILED,
    ORACLE_MAX_STRANDS,
)
from .conjugacy import cycling, decycling, to_super_summit
from .curves import find_standard_reduction, pseudo_anosov_evidence
from .family import (
    alpha,
    element_from_braid,
    expected_rigid_size,
    family_rigid_graph,
    graph_statistics,
    make_element,
    size_lower_bound,
)
from .invariant_sets import (
    ConjugacyGraph,
    SearchBudget,
    enumerate_class,
    is_conjugate,
    rigid_representative,
)
from .io import (
    dumps,
    graph_to_json,
    matrix_from_json,
    parse_matrix,
    parse_word,
    write_dot,
)
from .verification import verify_suite


def int_range(text: str) -> List[int]:
    """``"14"``, ``"14,16"`` or ``"14-17"`` (inclusive)."""
    values: List[int] = []
    try:
        for part in text.split(","):
            if "-" in part.strip()[1:]:
                lo, hi = part.split("-", 1)
                values.extend(range(int(lo), int(hi) + 1))
            else:
                values.append(int(part))
    except ValueError as error:
        raise ArgumentTypeError(f"invalid range {text!r}") from error
    return values


def _word_braid(args) -> Braid:
    return normal_form(args.n, parse_word(" ".join(args.word)))


def _read_matrix(args):
    text = args.matrix
    if os.path.exists(text):
        with open(text) as fo:
            text = fo.read()
    if text.lstrip().startswith("{"):
        rows, b = matrix_from_json(json.loads(text))
    else:
        rows, b = parse_matrix(text)
    if args.b is not None:
        b = args.b
    return make_element(rows, b, require_M0=getattr(args, "require_m0", False))


def _budget(args) -> SearchBudget:
    return SearchBudget(args.budget_states, args.budget_nodes)


def _emit(args, data, text: str) -> None:
    if args.json:
        sys.stdout.write(dumps(data, indent=2, sort_keys=True) + "\n")
    else:
        sys.stdout.write(text + "\n")


def _write_graph(args, graph: ConjugacyGraph) -> None:
    if args.dot:
        with open(args.dot, "w") as fo:
            write_dot(graph, fo)


def cmd_nf(args) -> int:
    x = _word_braid(args)
    _emit(args, x, str(x))
    return EXIT_OK


def cmd_rigid(args) -> int:
    x = _word_braid(args)
    rigid = is_rigid(x)
    text = f"{x}: {'rigid' if rigid else 'not rigid'}"
    _emit(args, {"braid": x, "rigid": rigid}, text)
    return EXIT_OK


def cmd_cycle(args) -> int:
    x = _word_braid(args)
    y, c = cycling(x) if args.command == "cycle" else decycling(x)
    _emit(args, {"braid": y, "conjugator": c}, f"{y}\nconjugator: {c}")
    return EXIT_OK


def cmd_summit(args) -> int:
    cert = to_super_summit(_word_braid(args))
    data = {
        "representative": cert.representative,
        "conjugator": cert.conjugator,
        "inf": cert.inf_s,
        "sup": cert.sup_s,
    }
    text = (
        f"{cert.representative}\nconjugator: {cert.conjugator}\n"
        f"inf_s={cert.inf_s} sup_s={cert.sup_s}"
    )
    _emit(args, data, text)
    return EXIT_OK


def cmd_conjugate(args) -> int:
    x = normal_form(args.n, parse_word(args.first))
    y = normal_form(args.n, parse_word(args.second))
    try:
        found, witness = is_conjugate(x, y, _budget(args))
    except NotSupported as error:
        sys.stderr.write(f"{error}\n")
        return EXIT_USAGE
    text = f"conjugate, witness {witness}" if found else "not conjugate"
    _emit(args, {"conjugate": found, "witness": witness}, text)
    return EXIT_OK


def cmd_check_reduction(args) -> int:
    x = _word_braid(args)
    curves = find_standard_reduction(x)
    rigid, free = pseudo_anosov_evidence(x)
    lines = [f"{c.curve}: orbit {' '.join(map(str, c.orbit))}" for c in curves]
    lines.append("no standard reduction" if free else f"{len(curves)} periodic curves")
    lines.append(f"rigid: {rigid}")
    data = {
        "curves": [{"curve": c.curve, "orbit": c.orbit, "compatible": c.compatible}
                   for c in curves],
        "rigid": rigid,
        "reduction_free": free,
    }
    _emit(args, data, "\n".join(lines))
    return EXIT_OK


def cmd_family_build(args) -> int:
    e = _read_matrix(args)
    x = alpha(e)
    data = {"element": e, "n": e.n, "k": e.k, "p": e.p, "m0": e.is_m0(), "braid": x}
    text = f"n={e.n} k={e.k} p={e.p} M0={e.is_m0()}\n{x}"
    _emit(args, data, text)
    return EXIT_OK


def _graph_report(args, graph: ConjugacyGraph, extra: dict) -> None:
    _write_graph(args, graph)
    data = dict(graph_to_json(graph), **extra)
    lines = [f"{k}: {v}" for k, v in extra.items()]
    lines.extend(str(x) for x in graph.nodes)
    _emit(args, data, "\n".join(lines))


def cmd_family_rset(args) -> int:
    e = _read_matrix(args)
    graph = family_rigid_graph(e, max_nodes=args.budget_nodes)
    stats = graph_statistics(graph)
    extra = {"size": stats.nodes, "expected": expected_rigid_size(e.n, e.k),
             "lattices": list(stats.lattice_sizes), "edges": stats.edges}
    _graph_report(args, graph, extra)
    return EXIT_OK


def cmd_family_parse(args) -> int:
    x = _word_braid(args)
    e = element_from_braid(x, require_M0=False)
    if e is None:
        _emit(args, {"element": None}, f"{x} is not a family braid")
        return EXIT_OK
    data = {"element": e, "m0": e.is_m0()}
    rows = "\n".join("".join(map(str, row)) for row in e.matrix)
    _emit(args, data, f"{rows}\nslot={e.slot} side={e.side} M0={e.is_m0()}")
    return EXIT_OK


def cmd_family_table(args) -> int:
    rows = []
    for n in args.n_range:
        for k in args.k_range:
            rows.append({"n": n, "k": k, "expected": expected_rigid_size(n, k),
                         "bound": size_lower_bound(n, k)})
    text = "\n".join(f"n={r['n']} k={r['k']} {r['expected']} >= {r['bound']:.2f}"
                     for r in rows)
    _emit(args, rows, text)
    return EXIT_OK


def cmd_rset(args) -> int:
    if args.matrix and not args.oracle:
        return cmd_family_rset(args)
    if args.matrix:
        x = alpha(_read_matrix(args))
    else:
        x = _word_braid(args)
    if x.n > ORACLE_MAX_STRANDS:
        if not args.force:
            sys.stderr.write(
                f"generic enumeration is limited to {ORACLE_MAX_STRANDS} strands; "
                "use --force\n"
            )
            return EXIT_USAGE
        warnings.warn(f"enumerating on {x.n} strands", OracleSizeWarning)
    budget = _budget(args)
    y, _ = rigid_representative(x, budget)
    graph = enumerate_class(y, budget)
    _graph_report(args, graph, {"size": len(graph)})
    return EXIT_OK


def cmd_verify(args) -> int:
    report = verify_suite(
        args.n_range,
        args.k_range,
        sample_size=args.samples,
        seed=args.seed,
        oracle=not args.no_oracle,
        budget=_budget(args),
    )
    if args.json:
        sys.stdout.write(report.to_json() + "\n")
    else:
        sys.stdout.write(str(report) + "\n")
    if not report.ok:
        return EXIT_VERIFY_FAILED
    return EXIT_BUDGET if report.budget_exceeded else EXIT_OK


def _common(parser: ArgumentParser, word: bool = True, n: bool = True) -> None:
    if n:
        parser.add_argument("--n", type=int, required=word, help="number of strands")
    if word:
        parser.add_argument(
            "word", nargs="*", help="signed generator indices, e.g. `1 -2 3`"
        )
    parser.add_argument("--json", action="store_true", default=False, help="emit JSON")


def _budgets(parser: ArgumentParser) -> None:
    parser.add_argument(
        "--budget-states", type=int, default=DEFAULT_MAX_PREFIX_STATES,
        help=f"prefix states per search (default {DEFAULT_MAX_PREFIX_STATES})",
    )
    parser.add_argument(
        "--budget-nodes", type=int, default=DEFAULT_MAX_NODES,
        help=f"nodes per rigid set (default {DEFAULT_MAX_NODES})",
    )


def _matrix(parser: ArgumentParser, required: bool = True) -> None:
    parser.add_argument(
        "--matrix", required=required,
        help="matrix file or inline rows separated by `;`, `|` marks the slot",
    )
    parser.add_argument(
        "--b", type=int, default=None, help="slot of the vertical strand"
    )


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(
        prog="garsidelab", description="Garside normal forms and rigid braid families"
    )
    parser.add_argument(
        "--version", action="version", version=f"garsidelab {garside.__version__}"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    for name, func, help_text in [
        ("nf", cmd_nf, "left normal form of a word"),
        ("rigid", cmd_rigid, "is the braid rigid"),
        ("cycle", cmd_cycle, "cycle the braid"),
        ("decycle", cmd_cycle, "decycle the braid"),
        ("summit", cmd_summit, "conjugate into the super summit set"),
        ("check-reduction", cmd_check_reduction, "periodic standard curves"),
    ]:
        p = sub.add_parser(name, help=help_text)
        _common(p)
        p.set_defaults(func=func)

    p = sub.add_parser("conjugate", help="decide conjugacy of two braids")
    p.add_argument("--n", type=int, required=True, help="number of strands")
    p.add_argument("first", help="first braid word, e.g. '1,-2'")
    p.add_argument("second", help="second braid word")
    p.add_argument("--json", action="store_true", default=False, help="emit JSON")
    _budgets(p)
    p.set_defaults(func=cmd_conjugate)

    p = sub.add_parser("rset", help="rigid conjugacy set by exhaustive search")
    _common(p, word=True, n=False)
    p.add_argument("--n", type=int, default=None, help="number of strands")
    p.add_argument("--oracle", action="store_true", default=False,
                   help="enumerate a --matrix braid generically, not in closed form")
    p.add_argument("--force", action="store_true", default=False,
                   help=f"allow more than {ORACLE_MAX_STRANDS} strands")
    p.add_argument("--dot", default=None, help="write the graph as DOT")
    _matrix(p, required=False)
    _budgets(p)
    p.set_defaults(func=cmd_rset)

    family = sub.add_parser("family", help="the binary-matrix family")
    fsub = family.add_subparsers(dest="family_command", required=True)

    p = fsub.add_parser("build", help="braid of a matrix")
    _common(p, word=False, n=False)
    _matrix(p)
    p.add_argument("--require-m0", action="store_true", default=False,
                   help="reject matrices outside M0")
    p.set_defaults(func=cmd_family_build)

    p = fsub.add_parser("rset", help="closed-form rigid conjugacy graph")
    _common(p, word=False, n=False)
    _matrix(p)
    p.add_argument("--dot", default=None, help="write the graph as DOT")
    _budgets(p)
    p.set_defaults(func=cmd_family_rset, require_m0=True)

    p = fsub.add_parser("parse", help="read a braid back as a family matrix")
    _common(p)
    p.set_defaults(func=cmd_family_parse)

    p = fsub.add_parser("table", help="predicted rigid set sizes")
    p.add_argument("--n", dest="n_range", type=int_range, default=int_range("14-20"))
    p.add_argument("--k", dest="k_range", type=int_range, default=[2])
    p.add_argument("--json", action="store_true", default=False, help="emit JSON")
    p.set_defaults(func=cmd_family_table)

    p = sub.add_parser("verify", help="run the family verification suite")
    p.add_argument("--n", dest="n_range", type=int_range, default=int_range("14-15"),
                   help="strand counts, e.g. 10-17 (default 14-15)")
    p.add_argument("--k", dest="k_range", type=int_range, default=[2, 3],
                   help="row counts (default 2,3)")
    p.add_argument("--samples", type=int, default=DEFAULT_SAMPLE_SIZE,
                   help=f"elements per (n, k) (default {DEFAULT_SAMPLE_SIZE})")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED,
                   help=f"sampling seed (default {DEFAULT_SEED})")
    p.add_argument("--no-oracle", action="store_true", default=False,
                   help="skip the exhaustive comparisons at n <= 11")
    p.add_argument("--json", action="store_true", default=False, help="emit JSON")
    _budgets(p)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    argv = argv if argv is not None else sys.argv[1:]
    args = build_parser().parse_args(argv)
    if getattr(args, "word", None) is not None and getattr(args, "n", 0) is None:
        if not getattr(args, "matrix", None):
            sys.stderr.write("--n is required with a braid word\n")
            return EXIT_USAGE
    try:
        return args.func(args)
    except BudgetExceeded as error:
        sys.stderr.write(f"budget exceeded: {error}\n")
        return EXIT_BUDGET
    except ValueError as error:
        sys.stderr.write(f"{type(error).__name__}: {error}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
