# cli.py
#
# Command line surface. Reports go to stdout, diagnostics to stderr. Exit
# codes: 0 success, 1 invalid input, 2 inconsistent arithmetic, 3 parse error.

import argparse
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import replace

from .errors import ArithmeticInconsistency, NeronError, ParseError
from .formats import (
    emit_graph,
    format_value,
    read_graph,
    read_quaternion_input,
    render_check,
    render_phi_report,
    render_results_table,
    write_graph,
)
from .graphs import (
    bipartition,
    double_cover,
    integral_regularity,
    is_connected,
    mass,
    regularity,
)
from .homology import component_group, cycle_basis, gram_matrix, leading_minors
from .quaternion import FFInput, QInput, phi_ff, phi_q
from .regressions import run_regressions
from .selftest import REDUCED, SuiteConfig, run_selftest
from .spectral import (
    char_poly,
    double_cover_charpoly_identity,
    double_cover_discriminant,
    laplacian_matrix,
    verify_discriminant_formula,
)

logger = logging.getLogger(__name__)


class ArgumentParser(argparse.ArgumentParser):
    """argparse with usage errors raised as :class:`ParseError` (exit code 3)."""

    def error(self, message):
        raise ParseError(f"{self.prog}: {message}")


def _labels(g, vertices):
    return "{" + ", ".join(g.vertex_label(v) for v in sorted(vertices)) + "}"


def graph_invariants(path):
    g = read_graph(path)
    check = verify_discriminant_formula(g)
    group = component_group(g)
    gram = gram_matrix(g, cycle_basis(g))
    parts = bipartition(g)
    lines = [
        f"vertices = {g.num_vertices}, darts = {g.num_darts}, edges = {len(g.edge_classes())}",
        f"D(G) = {check.lhs}",
        f"component group = {group}",
        "invariant factors = " + (", ".join(map(str, group.nontrivial_factors)) or "none"),
        f"rank = {group.rank}",
        f"m(G) = {mass(g)}",
        f"regularity = {format_value(regularity(g))}",
        "bipartition = " + ("none" if parts is None else f"{_labels(g, parts[0])} | {_labels(g, parts[1])}"),
        "leading minors = " + (", ".join(map(str, leading_minors(gram))) or "none"),
        f"char poly of Laplacian = {format_value(char_poly(laplacian_matrix(g)))}",
        render_check("discriminant formula", check),
    ]
    print("\n".join(lines))
    return 0 if check.equal else ArithmeticInconsistency.exit_code


def graph_double_cover(path, out=None):
    g = read_graph(path)
    cover, _ = double_cover(g)
    identity = double_cover_charpoly_identity(g)
    checks = [render_check("double cover char poly", identity)]
    ok = identity.equal
    if is_connected(g) and integral_regularity(g) is not None and bipartition(g) is None:
        cover_check = double_cover_discriminant(g)
        ok = ok and cover_check.equal
        checks.append(render_check("double cover discriminant", cover_check))
    else:
        logger.debug("skipping the double cover discriminant: input is not regular and non-bipartite")
    header = f"double cover of {path}"
    if out is not None:
        write_graph(cover, out, header=header)
        print("\n".join(checks))
    else:
        sys.stdout.write(emit_graph(cover, header=header))
        print("\n".join(f"# {c}" for c in checks))
    return 0 if ok else ArithmeticInconsistency.exit_code


def graph_verify(path):
    check = verify_discriminant_formula(read_graph(path))
    print(render_check("discriminant formula", check))
    return 0 if check.equal else ArithmeticInconsistency.exit_code


def evaluate_file(path, field):
    """
    Evaluate one quaternion input file.

    Returns
    -------
    (int, str)
        Exit code and the text to print; errors are caught so that a batch
        keeps going.
    """
    try:
        inp = read_quaternion_input(path)
        expected = FFInput if field == "ff" else QInput
        if not isinstance(inp, expected):
            raise ParseError(f"{path} declares the wrong field for phi-{field}")
        report = phi_ff(inp) if field == "ff" else phi_q(inp)
    except NeronError as exc:
        return exc.exit_code, f"{path}: error: {exc}"
    except OSError as exc:
        return ParseError.exit_code, f"{path}: error: {exc}"
    return 0, render_phi_report(report, title=str(path))


def phi(paths, field, jobs=1):
    if jobs > 1 and len(paths) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(evaluate_file, paths, [field] * len(paths)))
    else:
        outcomes = [evaluate_file(path, field) for path in paths]
    code = 0
    for status, text in outcomes:
        print(text, file=sys.stderr if status else sys.stdout)
        code = max(code, status)
    return code


def reproduce(sweep=True):
    results = run_regressions(sweep=sweep)
    print(render_results_table(results))
    return 0 if all(r.passed for r in results) else ArithmeticInconsistency.exit_code


def selftest(seed=0, full=False):
    config = replace(SuiteConfig() if full else REDUCED, seed=seed)
    results = run_selftest(config)
    for result in results:
        print(result)
    return 0 if all(r.passed for r in results) else ArithmeticInconsistency.exit_code


def _non_negative(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"{text} is negative")
    return value


def build_parser():
    parser = ArgumentParser(
        prog="neronpy",
        description="Component groups of Jacobians of quaternionic modular curves, "
        "from weighted graphs and Brandt matrix data.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="log debug output to stderr")
    commands = parser.add_subparsers(dest="command", required=True, parser_class=ArgumentParser)

    p = commands.add_parser("graph-invariants", help="discriminant, component group and spectral data of a graph")
    p.add_argument("file")

    p = commands.add_parser("graph-double-cover", help="emit the bipartite double cover of a graph")
    p.add_argument("file")
    p.add_argument("--out", help="write the cover here instead of stdout")

    p = commands.add_parser("graph-verify", help="exit 0 iff the spectral discriminant formula holds")
    p.add_argument("file")

    for field in ("ff", "q"):
        p = commands.add_parser(f"phi-{field}", help=f"component group order over {'F_q(T)' if field == 'ff' else 'Q'}")
        p.add_argument("files", nargs="+")
        p.add_argument("--jobs", type=_non_negative, default=1, help="worker processes for several files")

    p = commands.add_parser("reproduce-paper", aliases=["reproduce"], help="run the fixed regression checks")
    p.add_argument("--quick", action="store_true", help="skip the closed form sweep")

    p = commands.add_parser("selftest", help="run the randomized property suites")
    p.add_argument("--seed", type=_non_negative, default=0)
    p.add_argument("--full", action="store_true", help="full suite sizes instead of the reduced ones")
    return parser


def run(args):
    """Dispatch parsed arguments; returns the exit code."""
    if args.command == "graph-invariants":
        return graph_invariants(args.file)
    if args.command == "graph-double-cover":
        return graph_double_cover(args.file, args.out)
    if args.command == "graph-verify":
        return graph_verify(args.file)
    if args.command in ("phi-ff", "phi-q"):
        return phi(args.files, args.command[4:], max(args.jobs, 1))
    if args.command in ("reproduce-paper", "reproduce"):
        return reproduce(sweep=not args.quick)
    return selftest(seed=args.seed, full=args.full)


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        return run(args)
    except NeronError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return ParseError.exit_code
