"""Command-line interface: ``stablemaps <command> [options]``.

Every command prints exact rationals as ``p/q`` strings. Exit status is 0 on
success, 1 when ``verify`` finds a failing check, and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from .algebra import format_rational
from .correlators import table3
from .localization import (
    degree4_monomials,
    forced_zero,
    parse_points,
    points_from_env,
    space,
)
from .relations import (
    ROW_ORDER,
    candidate_monomials,
    pairing_matrix,
    relation_space,
)
from .rings import MAIN_RING, get_presentation, get_ring, presentation_to_json, registry

__all__ = ["main", "run"]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--format", choices=("json", "csv", "markdown"), default=None, help="output format (default json)")
    p.add_argument("--points", default=None, help='two or more weight points, e.g. "3,1;5,2"')
    p.add_argument("--order", choices=("grevlex",), default="grevlex", help="monomial order")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for localization (default 1)")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _Parser(prog="stablemaps", description="Chow ring computations for two-pointed conics in P^1.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    b = sub.add_parser("betti", parents=[common], help="graded dimensions of a ring")
    b.add_argument("--ring", default=MAIN_RING)
    sub.add_parser("integrals", parents=[common], help="all degree-four integrals")
    r = sub.add_parser("relations", parents=[common], help="relations found from the pairing")
    r.add_argument("--degree", type=int, required=True, choices=(1, 2, 3))
    r.add_argument("--matrix", action="store_true", help="also emit the pairing matrix")
    sub.add_parser("correlators", parents=[common], help="two-point gravitational correlators")
    sub.add_parser("euler-classes", parents=[common], help="Euler classes of fixed components")
    sub.add_parser("restrictions", parents=[common], help="generator restrictions to fixed components")
    pr = sub.add_parser("presentations", parents=[common], help="built-in ring presentations")
    pr.add_argument("action", choices=("list", "show"))
    pr.add_argument("name", nargs="?")
    v = sub.add_parser("verify", parents=[common], help="run every consistency check")
    v.add_argument("--seed", type=int, default=None, help="seed for the extra random weight point")
    return parser


# -- rendering ---------------------------------------------------------------

def _render_pairs(pairs: List[Sequence[str]], header: Sequence[str], fmt: str) -> str:
    if fmt == "json":
        return json.dumps({k: v for k, v in pairs}, indent=2)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(pairs)
        return buf.getvalue().rstrip("\n")
    return _markdown([list(header)] + [list(p) for p in pairs])


def _markdown(rows: List[List[str]]) -> str:
    head, body = rows[0], rows[1:]
    lines = ["| " + " | ".join(head) + " |", "|" + "|".join("---" for _ in head) + "|"]
    lines += ["| " + " | ".join(r) + " |" for r in body]
    return "\n".join(lines)


def _render_grid(rows: List[List[str]], fmt: str) -> str:
    if fmt == "csv":
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(rows)
        return buf.getvalue().rstrip("\n")
    if fmt == "markdown":
        return _markdown(rows)
    head = rows[0][1:]
    return json.dumps({r[0]: dict(zip(head, r[1:])) for r in rows[1:]}, indent=2)


# -- commands -----------------------------------------------------------------

def _integral_worker(args):
    key, points = args
    return space(2, 2).integrate(key, points)


def cmd_betti(args, points) -> str:
    try:
        ring = get_ring(args.ring)
    except KeyError as exc:
        raise UsageError(str(exc.args[0]))
    dims = ring.graded_dimensions()
    if args.format == "json":
        return json.dumps({"ring": ring.name, "betti": dims})
    if args.format == "csv":
        return "degree,dimension\n" + "\n".join(f"{k},{d}" for k, d in enumerate(dims))
    if args.format == "markdown":
        return _markdown([["degree", "dimension"]] + [[str(k), str(d)] for k, d in enumerate(dims)])
    return " ".join(map(str, dims))


def cmd_integrals(args, points) -> str:
    monos = degree4_monomials()
    keys = [m.to_string() for m in monos]
    todo = [k for k, m in zip(keys, monos) if not forced_zero(m)]
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            values = dict(zip(todo, pool.map(_integral_worker, [(k, points) for k in todo])))
    else:
        values = {k: space(2, 2).integrate(k, points) for k in todo}
    pairs = [(k, format_rational(values.get(k, Fraction(0)))) for k in keys]
    return _render_pairs(pairs, ("monomial", "value"), args.format or "json")


def cmd_relations(args, points) -> str:
    m = pairing_matrix(args.degree, points=points)
    rs = relation_space(m)
    fmt = args.format or "json"
    rels = rs.to_strings()
    if fmt == "json":
        doc: Dict[str, object] = {
            "degree": args.degree,
            "candidates": [c.to_string() for c in candidate_monomials(args.degree)],
            "dimension": rs.dimension,
            "relations": rels,
            "vectors": [[format_rational(x) for x in v] for v in rs.basis],
        }
        if args.degree == 1:
            doc["coordinates"] = list(ROW_ORDER)
        if args.matrix:
            grid = m.to_rows()
            doc["matrix"] = {"rows": [r[0] for r in grid[1:]], "cols": grid[0][1:], "entries": [r[1:] for r in grid[1:]]}
        return json.dumps(doc, indent=2)
    out = _render_pairs([(str(i + 1), r) for i, r in enumerate(rels)], ("index", "relation"), fmt)
    if args.matrix:
        out += "\n\n" + _render_grid(m.to_rows(), fmt)
    return out


def cmd_correlators(args, points) -> str:
    pairs = [(k, format_rational(v)) for k, v in table3().items()]
    return _render_pairs(pairs, ("spec", "value"), args.format or "json")


def cmd_euler(args, points) -> str:
    fs = space(2, 2)
    pairs = [(c.name, str(fs.euler(c))) for c in fs.components]
    fmt = args.format or "json"
    if fmt == "json":
        return json.dumps(
            {c.name: {"graph": c.graph.describe(), "aut": c.aut_order, "dimension": c.moduli_dimension, "euler": e}
             for c, (_, e) in zip(fs.components, pairs)},
            indent=2,
        )
    return _render_pairs(pairs, ("component", "euler"), fmt)


def cmd_restrictions(args, points) -> str:
    fs = space(2, 2)
    symbols = ("H1", "H2", "D0", "D1", "D2")
    rows = [[""] + [c.name for c in fs.components]]
    for s in symbols:
        rows.append([s] + [str(fs.restrict(s, c)) for c in fs.components])
    return _render_grid(rows, args.format or "json")


def cmd_presentations(args, points) -> str:
    if args.action == "list":
        names = [p.name for p in registry()]
        if args.format in ("csv", "markdown"):
            rows = [["name", "description"]] + [[p.name, p.description] for p in registry()]
            return _render_grid(rows, args.format) if args.format == "csv" else _markdown(rows)
        return json.dumps(names) if args.format == "json" else "\n".join(names)
    if not args.name:
        raise UsageError("presentations show: a name is required")
    try:
        p = get_presentation(args.name)
    except KeyError as exc:
        raise UsageError(str(exc.args[0]))
    return json.dumps(presentation_to_json(p), indent=2)


def cmd_verify(args, points):
    from .verification import run_checks

    results = run_checks(points=points, seed=args.seed)
    lines = [r.line() for r in results]
    ok = all(r.ok for r in results)
    lines.append(f"{sum(r.ok for r in results)}/{len(results)} checks passed")
    return "\n".join(lines), (0 if ok else 1)


COMMANDS = {
    "betti": cmd_betti,
    "integrals": cmd_integrals,
    "relations": cmd_relations,
    "correlators": cmd_correlators,
    "euler-classes": cmd_euler,
    "restrictions": cmd_restrictions,
    "presentations": cmd_presentations,
    "verify": cmd_verify,
}


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(list(sys.argv[1:] if argv is None else argv))
        if args.jobs < 1:
            raise UsageError("--jobs must be at least 1")
        try:
            points = parse_points(args.points) if args.points else points_from_env()
        except ValueError as exc:
            raise UsageError(f"bad evaluation points: {exc}")
        result = COMMANDS[args.command](args, points)
    except UsageError as exc:
        print(str(exc), file=err)
        return 2
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    code = 0
    if isinstance(result, tuple):
        result, code = result
    print(result, file=out)
    return code


def main() -> None:
    sys.exit(run())
