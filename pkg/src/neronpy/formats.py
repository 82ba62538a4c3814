# formats.py
#
# Text formats read and written by the command line, and the rendering of
# reports. Everything here is UTF-8 and line oriented; '#' starts a comment.

import logging
from pathlib import Path

from .errors import ParseError
from .graphs import Dart, WeightedGraph, require_well_formed
from .numtheory import int_poly, parse_fq_polynomial
from .quaternion import FFInput, QInput

logger = logging.getLogger(__name__)


def _records(text):
    """Yield (line number, tokens) for every non-blank line, comments removed."""
    for number, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if line:
            yield number, line.split()


def _integer(token, what, line):
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"{what} must be an integer, got {token!r}", line) from None


# Graph files

def parse_graph(text):
    """
    Read a weighted graph.

    Records are ``vertex <label> <weight>`` and
    ``dart <label> <inverse-label> <origin-label> <weight>``. A dart whose
    inverse label is its own label is a folded loop. Ids follow the order of
    declaration.

    Raises
    ------
    ParseError
        Unknown records, bad integers, duplicate or undeclared labels.
    GraphValidationError
        If the declared graph is not well formed, for instance when the two
        darts of a pair disagree on their weight.
    """
    vertices, darts = [], []
    vertex_ids, dart_ids = {}, {}
    for line, tokens in _records(text):
        kind = tokens[0]
        if kind == "vertex":
            if len(tokens) != 3:
                raise ParseError("expected 'vertex <label> <weight>'", line)
            label = tokens[1]
            if label in vertex_ids:
                raise ParseError(f"vertex {label!r} declared twice", line)
            vertex_ids[label] = len(vertices)
            vertices.append((label, _integer(tokens[2], "vertex weight", line)))
        elif kind == "dart":
            if len(tokens) != 5:
                raise ParseError("expected 'dart <label> <inverse> <origin> <weight>'", line)
            label = tokens[1]
            if label in dart_ids:
                raise ParseError(f"dart {label!r} declared twice", line)
            dart_ids[label] = len(darts)
            darts.append((line, label, tokens[2], tokens[3], _integer(tokens[4], "dart weight", line)))
        else:
            raise ParseError(f"unknown record {kind!r}", line)

    built = []
    for e, (line, label, inverse, origin, weight) in enumerate(darts):
        if origin not in vertex_ids:
            raise ParseError(f"dart {label!r} leaves undeclared vertex {origin!r}", line)
        if inverse not in dart_ids:
            raise ParseError(f"inverse {inverse!r} of dart {label!r} is not declared", line)
        built.append(Dart(e, vertex_ids[origin], dart_ids[inverse], weight))
    g = WeightedGraph(
        tuple(w for _, w in vertices),
        tuple(built),
        tuple(label for label, _ in vertices),
        tuple(d[1] for d in darts),
    )
    logger.debug("parsed graph with %d vertices and %d darts", g.num_vertices, g.num_darts)
    return require_well_formed(g)


def read_graph(path):
    return parse_graph(Path(path).read_text(encoding="utf-8"))


def emit_graph(g, header=None):
    """The graph text format of ``g``, one record per line."""
    lines = [f"# {header}"] if header else []
    for v, w in enumerate(g.vertex_weights):
        lines.append(f"vertex {g.vertex_label(v)} {w}")
    for d in g.darts:
        lines.append(
            f"dart {g.dart_label(d.id)} {g.dart_label(d.inverse)} {g.vertex_label(d.origin)} {d.weight}"
        )
    return "\n".join(lines) + "\n"


def write_graph(g, path, header=None):
    Path(path).write_text(emit_graph(g, header), encoding="utf-8")


# Quaternion input files

_KEYS = ("field", "q", "p", "dprime", "charpoly", "brandt", "weights")


def parse_quaternion_input(text):
    """
    Read an :class:`FFInput` or :class:`QInput`.

    Keys are ``field ff|q``, ``q <prime>`` (ff only), ``p <poly|prime>``,
    ``dprime <poly|prime> ...``, ``charpoly <c0> ... <ck>``, ``brandt``
    followed by the matrix rows, and ``weights <w1> ... <wh>``. Polynomials
    over F_q are written as coefficient lists or in T; the value of ``p``
    may contain spaces, the entries of ``dprime`` may not.
    """
    values, lines = {}, {}
    brandt_rows = None
    for line, tokens in _records(text):
        key = tokens[0]
        if brandt_rows is not None and key not in _KEYS:
            brandt_rows.append([_integer(t, "Brandt entry", line) for t in tokens])
            continue
        if key not in _KEYS:
            raise ParseError(f"unknown key {key!r}", line)
        if key in values:
            raise ParseError(f"key {key!r} given twice", line)
        lines[key] = line
        if key == "brandt":
            if len(tokens) != 1:
                raise ParseError("the Brandt rows go on the lines after 'brandt'", line)
            brandt_rows = values["brandt"] = []
            continue
        brandt_rows = None
        if len(tokens) < 2:
            raise ParseError(f"key {key!r} needs a value", line)
        values[key] = tokens[1:]

    for key in ("field", "p", "dprime"):
        if key not in values:
            raise ParseError(f"missing key {key!r}")
    field = values["field"]
    if field not in (["ff"], ["q"]):
        raise ParseError(f"field must be 'ff' or 'q', got {' '.join(field)!r}", lines["field"])

    charpoly = brandt = weights = None
    if "charpoly" in values:
        line = lines["charpoly"]
        charpoly = int_poly([_integer(t, "charpoly coefficient", line) for t in values["charpoly"]])
    if "brandt" in values:
        if not values["brandt"]:
            raise ParseError("'brandt' is not followed by any row", lines["brandt"])
        brandt = tuple(tuple(row) for row in values["brandt"])
    if "weights" in values:
        line = lines["weights"]
        weights = tuple(_integer(t, "weight", line) for t in values["weights"])

    if field == ["ff"]:
        if "q" not in values:
            raise ParseError("missing key 'q' for field ff")
        if len(values["q"]) != 1:
            raise ParseError("q takes a single prime", lines["q"])
        q = _integer(values["q"][0], "q", lines["q"])
        p = _fq(" ".join(values["p"]), q, lines["p"])
        dprime = tuple(_fq(t, q, lines["dprime"]) for t in values["dprime"])
        return FFInput(q, p, dprime, charpoly, brandt, weights)
    if "q" in values:
        raise ParseError("key 'q' only applies to field ff", lines["q"])
    if len(values["p"]) != 1:
        raise ParseError("p takes a single prime for field q", lines["p"])
    p = _integer(values["p"][0], "p", lines["p"])
    dprime = tuple(_integer(t, "prime of dprime", lines["dprime"]) for t in values["dprime"])
    return QInput(p, dprime, charpoly, brandt, weights)


def _fq(text, q, line):
    try:
        return parse_fq_polynomial(text, q)
    except ParseError as exc:
        raise ParseError(str(exc), line) from None


def read_quaternion_input(path):
    return parse_quaternion_input(Path(path).read_text(encoding="utf-8"))


def emit_quaternion_input(inp):
    """Inverse of :func:`parse_quaternion_input`, polynomials as coefficient lists."""
    if isinstance(inp, FFInput):
        lines = ["field ff", f"q {inp.q}", f"p {_coefficient_list(inp.p)}"]
        lines.append("dprime " + " ".join(_coefficient_list(f) for f in inp.dprime))
    else:
        lines = ["field q", f"p {inp.p}", "dprime " + " ".join(str(l) for l in inp.dprime)]
    if inp.charpoly is not None:
        coeffs = reversed(inp.charpoly.all_coeffs())
        lines.append("charpoly " + " ".join(str(int(c)) for c in coeffs))
    if inp.brandt is not None:
        lines.append("brandt")
        lines.extend(" ".join(str(v) for v in row) for row in inp.brandt)
    if inp.weights is not None:
        lines.append("weights " + " ".join(str(w) for w in inp.weights))
    return "\n".join(lines) + "\n"


def _coefficient_list(f):
    return "[" + ",".join(str(c) for c in f.coeffs) + "]"


# Reports

def format_value(value):
    """Exact values as text: ints and Fractions plainly, polynomials with carets."""
    if hasattr(value, "as_expr"):
        return str(value.as_expr()).replace("**", "^")
    if isinstance(value, (set, frozenset)):
        return "{" + ", ".join(str(v) for v in sorted(value)) + "}"
    if isinstance(value, dict):
        return "{" + ", ".join(f"{k}: {v}" for k, v in sorted(value.items())) + "}"
    return str(value)


def render_order(report):
    return f"order = {report.order} = {report.factored}"


def render_check(name, check):
    lhs, rhs, equal = check
    if equal:
        return f"{name}: {format_value(lhs)} = {format_value(rhs)} OK"
    return f"{name}: {format_value(lhs)} != {format_value(rhs)} FAILED"


def render_phi_report(report, title=None):
    """
    The order, its factorization and every intermediate, one per line.

    Example
    -------
        order = 1895575 = 5^2·11·61·113
          N = 3
          mass = 31/3
    """
    lines = [title] if title else []
    lines.append(render_order(report))
    for name, value in report.intermediates.items():
        lines.append(f"  {name} = {format_value(value)}")
    profile = report.profile
    if profile is not None:
        lines.append("  double cover graph:")
        lines.append(f"    vertices = {profile.vertices}")
        lines.append(f"    vertex weights = {format_value(profile.vertex_weights)}")
        lines.append(f"    mass = {profile.mass}")
        lines.append(f"    heavy edges = {format_value(profile.edge_weights)}")
        lines.append(f"    weight ratio = {profile.weight_ratio}")
    return "\n".join(lines)


def render_results_table(results):
    """Pass/fail table of regression checks."""
    width = max((len(r.name) for r in results), default=4)
    lines = [f"{'check'.ljust(width)}  result  expected / actual"]
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        lines.append(f"{r.name.ljust(width)}  {status:<6}  {r.expected} / {r.actual}")
    passed = sum(r.passed for r in results)
    lines.append(f"{passed}/{len(results)} checks passed")
    return "\n".join(lines)
