"""End-to-end consistency checks shared by the CLI ``verify`` command and the tests.

Each check recomputes something from scratch and compares it with the
reference data in :mod:`stablemaps.tables` or with a second, independent
computation. A boundary table can be injected to confirm that corrupting
any served entry is detected.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Callable, List, Mapping, Optional, Sequence

from . import tables
from .algebra import parse_polynomial
from .correlators import CORRELATOR_SPECS, CorrelatorSpec, correlator, cross_check_via_localization
from .localization import (
    DEFAULT_POINTS,
    DIVISOR_SYMBOLS,
    FixedPointSpace,
    LocalizationError,
    degree4_monomials,
    forced_zero,
    parse_class,
    random_point,
    validate_boundary_table,
    validate_hyperplanes,
)
from .ratfunc import RationalFunction
from .relations import (
    assemble_presentation,
    pairing_matrix,
    relation_space,
    verify_named_relations,
)
from .rings import MAIN_RING, QuotientRing, builtin_homomorphisms, get_presentation, get_ring

__all__ = ["CheckResult", "run_checks", "CHECK_NAMES"]


@dataclass(frozen=True)
class CheckResult:
    """``name`` is the short id from :data:`CHECK_NAMES`; ``label`` describes it."""

    name: str
    ok: bool
    detail: str = ""
    label: str = ""

    def line(self) -> str:
        return f"{'PASS' if self.ok else 'FAIL'} {self.label or self.name}" + (f": {self.detail}" if self.detail else "")


class _Context:
    def __init__(self, points, boundary_table, seed):
        self.points = list(points) if points is not None else list(DEFAULT_POINTS)
        self.fs = FixedPointSpace(2, 2, boundary_table)
        self.ring = get_ring(MAIN_RING)
        self.rng = random.Random(seed)


def _mismatches(pairs) -> str:
    bad = [f"{k}: got {got}, want {want}" for k, got, want in pairs if got != want]
    return "; ".join(bad[:5]) + (f" (+{len(bad) - 5} more)" if len(bad) > 5 else "")


def check_integrals(ctx: _Context) -> CheckResult:
    rows = []
    zeros = 0
    for m in degree4_monomials():
        key = m.to_string()
        if forced_zero(m):
            zeros += 1
            rows.append((key, ctx.ring.integrate(key), Fraction(0)))
    for text, want in tables.DEGREE4_INTEGRALS.items():
        key = parse_polynomial(text, DIVISOR_SYMBOLS).to_string()
        rows.append((key, ctx.fs.integrate(key, ctx.points), want))
    detail = _mismatches(rows)
    ok = not detail and zeros == 32 and len(tables.DEGREE4_INTEGRALS) == 38
    return CheckResult("degree-four integrals: 38 listed values and 32 forced zeros", ok, detail)


def check_dual_oracle(ctx: _Context) -> CheckResult:
    rows = []
    for m in degree4_monomials():
        key = m.to_string()
        rows.append((key, ctx.fs.integrate(key, ctx.points), ctx.ring.integrate(key)))
    return CheckResult("localization equals ring integral on all 70 monomials", not _mismatches(rows), _mismatches(rows))


def check_euler(ctx: _Context) -> CheckResult:
    rows = []
    for idx, text in tables.EULER_CLASSES_22.items():
        c = ctx.fs.component(idx)
        rows.append((c.name, str(ctx.fs.euler(c)), str(parse_class(text))))
    return CheckResult("Euler classes of components 3..14", not _mismatches(rows), _mismatches(rows))


def check_worked_example(ctx: _Context) -> CheckResult:
    p = parse_polynomial(tables.WORKED_EXAMPLE, ctx.fs.symbols())
    rows = []
    total = RationalFunction(0)
    for c in ctx.fs.components:
        got = ctx.fs.summand(p, c)
        total = total + got
        num_den = tables.WORKED_EXAMPLE_SUMMANDS.get(c.index)
        want = RationalFunction(*num_den) if num_den else RationalFunction(0)
        rows.append((c.name, got, want))
    rows.append(("total", total, RationalFunction(tables.WORKED_EXAMPLE_VALUE)))
    return CheckResult(f"residues of {tables.WORKED_EXAMPLE} sum to 2", not _mismatches(rows), _mismatches(rows))


def check_relations(ctx: _Context) -> CheckResult:
    problems = []
    s1 = relation_space(pairing_matrix(1, points=ctx.points))
    if [tuple(map(int, v)) for v in s1.basis] != [(2, 2, -4, -1, 1)]:
        problems.append(f"degree 1: {s1.to_strings()}")
    s2 = relation_space(pairing_matrix(2, points=ctx.points))
    if [tuple(map(int, v)) for v in s2.basis] != [(0, 1, 0, 0, 4, -4, 0)]:
        problems.append(f"degree 2: {s2.to_strings()}")
    s3 = relation_space(pairing_matrix(3, points=ctx.points))
    named = verify_named_relations(s3)
    if s3.dimension != 2 or not named["ok"]:
        problems.append(f"degree 3: dimension {s3.dimension}, named relations {named}")
    return CheckResult("relation discovery in degrees 1, 2, 3", not problems, "; ".join(problems))


def check_presentation(ctx: _Context) -> CheckResult:
    problems = []
    ring = ctx.ring
    dims = ring.graded_dimensions(5)
    if dims != [1, 4, 6, 4, 1, 0]:
        problems.append(f"graded dimensions {dims}")
    for text in ("D0*D2", "D0*H1 - D0*H2", "H1 - (H2 + 2*psi2 - D2)", "H2 - (H1 + 2*psi1 - D2)"):
        if not ring.contains(text):
            problems.append(f"{text} is not zero")
    try:
        assembled = QuotientRing(assemble_presentation())
        if assembled.gb.basis != ring.gb.basis:
            problems.append("assembled presentation differs from the registry ring")
    except AssertionError as exc:
        problems.append(str(exc))
    return CheckResult("presentation of two-pointed conics", not problems, "; ".join(problems))


def check_simpler_spaces(ctx: _Context) -> CheckResult:
    problems = []
    if not get_ring("M03P11").contains("(H2 + H3 - D)*(H1 + H3 - D)"):
        problems.append("(H2+H3-D)(H1+H3-D) is not zero on three-pointed lines")
    try:
        homs = builtin_homomorphisms()
    except ValueError as exc:
        homs = {}
        problems.append(str(exc))
    for name in ("pi1", "pi2"):
        h = homs.get(name)
        if h is None:
            continue
        for rel in ("D^3", "psi1 - 1/4*D + H1"):
            if not h(rel).is_zero():
                problems.append(f"{name}({rel}) is not zero")
    # both inclusions between the substituted one-pointed conic ideal and (H^2, S^3)
    mm = get_presentation("MM01P12")
    vars_ = ("H", "S")
    subs = {"psi": "-1/4*S - H", "P": "1/8*S^2 - 1/2*H*S"}
    target = QuotientRing(_simple("target", vars_, ["H^2", "S^3"]))
    images = [r.subs(subs).with_variables(vars_) for r in mm.relations]
    for img in images:
        if not target.contains(img):
            problems.append(f"{img} is not in (H^2, S^3)")
    source = QuotientRing(_simple("source", vars_, [i for i in images if not i.is_zero()]))
    for g in ("H^2", "S^3"):
        if not source.contains(g):
            problems.append(f"{g} is not in the substituted ideal")
    return CheckResult("simpler spaces, pullbacks, and the (H^2, S^3) ideal", not problems, "; ".join(problems))


def _simple(name, vars_, rels):
    from .rings import RingPresentation

    return RingPresentation.build(name, list(vars_), rels, 3, ("S^2*H", 1))


def check_correlators(ctx: _Context) -> CheckResult:
    rows = []
    for s in CORRELATOR_SPECS:
        (d1, g1), (d2, g2) = s.insertions
        want = tables.CORRELATORS[(d1, g1, d2, g2)]
        got = correlator(s, ctx.ring)
        rows.append((s.key(), got, want))
        rows.append((s.key() + " swapped", correlator(s.swapped(), ctx.ring), got))
        try:
            rows.append((s.key() + " by localization", cross_check_via_localization(s, ctx.fs, ctx.points), want))
        except AssertionError as exc:
            rows.append((s.key() + " by localization", str(exc), want))
    rows.append(("tau-1 convention", correlator(CorrelatorSpec.of(-1, "1", 3, "H")), Fraction(0)))
    ok = not _mismatches(rows) and len(CORRELATOR_SPECS) == 16
    return CheckResult("sixteen two-point correlators", ok, _mismatches(rows))


def check_weight_independence(ctx: _Context) -> CheckResult:
    pts = list(ctx.points) + [random_point(ctx.rng)]
    try:
        for m in degree4_monomials():
            ctx.fs.integrate(m, pts)
    except LocalizationError as exc:
        return CheckResult("weight independence", False, str(exc))
    shown = "; ".join(f"({a},{b})" for a, b in pts)
    return CheckResult("weight independence", True, f"points {shown}")


def check_boundary_rule(ctx: _Context) -> CheckResult:
    problems = validate_boundary_table(ctx.fs) + validate_hyperplanes(ctx.fs)
    return CheckResult("boundary restrictions agree with node smoothing", not problems, "; ".join(problems))


def check_boundary_rule_psi(ctx: _Context) -> CheckResult:
    problems = validate_boundary_table(ctx.fs, include_psi=True)
    return CheckResult("psi-bearing restrictions agree with node smoothing", not problems, "; ".join(problems))


CHECKS: Sequence[Callable[[_Context], CheckResult]] = (
    check_integrals,
    check_dual_oracle,
    check_euler,
    check_worked_example,
    check_relations,
    check_presentation,
    check_simpler_spaces,
    check_correlators,
    check_weight_independence,
    check_boundary_rule,
    check_boundary_rule_psi,
)
CHECK_NAMES = tuple(c.__name__[len("check_"):] for c in CHECKS)


def run_checks(
    points: Optional[Sequence] = None,
    boundary_table: Optional[Mapping[str, Sequence[str]]] = None,
    seed: Optional[int] = None,
    only: Optional[Sequence[str]] = None,
) -> List[CheckResult]:
    """Run every check, or just those named in ``only`` (see :data:`CHECK_NAMES`)."""
    if only is not None:
        unknown = set(only) - set(CHECK_NAMES)
        if unknown:
            raise ValueError(f"unknown checks {sorted(unknown)}")
    ctx = _Context(points, boundary_table, seed)
    out = []
    for check, name in zip(CHECKS, CHECK_NAMES):
        if only is not None and name not in only:
            continue
        try:
            r = check(ctx)
            out.append(replace(r, name=name, label=r.name))
        except Exception as exc:  # a crash is a failed check, not a crashed run
            out.append(CheckResult(name, False, f"{type(exc).__name__}: {exc}"))
    return out
