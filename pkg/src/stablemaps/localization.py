"""Torus localization on genus-zero stable maps to P^1.

Fixed loci of ``M_{0,n}(P^1, d)`` are indexed by decorated trees: each vertex
sits over one of the two fixed points, carries a set of marks, and each edge
is a degree ``d_e`` cover of the line. This module enumerates those trees,
computes their automorphism factors and equivariant Euler classes, restricts
the generating classes to each fixed component, and sums the residues.

Only target dimension one is handled, and only the small cases ``n <= 3``,
``d <= 2`` where every fixed component has dimension at most one. On a
one-dimensional component (a copy of the 4-pointed genus-zero space) the
point class is the nilpotent ``psi`` with ``psi^2 = 0`` and ``int psi = 1``.
"""

from __future__ import annotations

import itertools
import os
import random
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from .algebra import Polynomial, format_rational, monomials_of_degree, parse_polynomial
from .ratfunc import EquivariantClass, RationalFunction, weight
from . import tables

__all__ = [
    "Vertex",
    "FixedGraph",
    "FixedComponent",
    "FixedPointSpace",
    "LocalizationError",
    "parse_graph",
    "parse_class",
    "enumerate_graphs",
    "aut_order",
    "euler_class",
    "restrict",
    "node_smoothing_restrictions",
    "validate_boundary_table",
    "integrate_component",
    "localize_integral",
    "table2",
    "space",
    "DEFAULT_POINTS",
    "random_point",
    "points_from_env",
    "parse_points",
]

SUPPORTED_N = 3
SUPPORTED_D = 2
DEFAULT_POINTS: Tuple[Tuple[Fraction, Fraction], ...] = ((Fraction(3), Fraction(1)), (Fraction(5), Fraction(2)))
POINTS_ENV = "STABLEMAPS_EVAL_POINTS"

Point = Tuple[Fraction, Fraction]
Value = Union[RationalFunction, Fraction]


class LocalizationError(RuntimeError):
    """The residue sum is not independent of the weights."""


# -- graphs ---------------------------------------------------------------

@dataclass(frozen=True)
class Vertex:
    id: int
    colour: int
    marks: FrozenSet[int] = frozenset()

    def label(self) -> str:
        if not self.marks:
            return str(self.colour)
        return f"{self.colour}{{{','.join(map(str, sorted(self.marks)))}}}"


@dataclass(frozen=True)
class FixedGraph:
    """A decorated tree; ``edges`` are ``(u, v, degree)`` with vertex ids."""

    vertices: Tuple[Vertex, ...]
    edges: Tuple[Tuple[int, int, int], ...]

    def __post_init__(self):
        ids = [v.id for v in self.vertices]
        if ids != list(range(len(ids))):
            raise ValueError("vertex ids must be 0..V-1 in order")
        if len(self.edges) != len(self.vertices) - 1:
            raise ValueError("a fixed graph is a tree")
        seen = {0}
        frontier = [0]
        while frontier:
            u = frontier.pop()
            for w in self.neighbours(u):
                if w not in seen:
                    seen.add(w)
                    frontier.append(w)
        if len(seen) != len(ids):
            raise ValueError("a fixed graph is connected")
        for u, v, d in self.edges:
            if d < 1:
                raise ValueError("edge degrees are positive")
            if self.vertices[u].colour == self.vertices[v].colour:
                raise ValueError("adjacent vertices lie over different fixed points")
        marks = [m for v in self.vertices for m in v.marks]
        if sorted(marks) != list(range(1, len(marks) + 1)):
            raise ValueError("mark sets must partition 1..n")

    @property
    def n(self) -> int:
        return sum(len(v.marks) for v in self.vertices)

    @property
    def d(self) -> int:
        return sum(e[2] for e in self.edges)

    def neighbours(self, u: int) -> List[int]:
        out = []
        for a, b, _ in self.edges:
            if a == u:
                out.append(b)
            elif b == u:
                out.append(a)
        return out

    def incident(self, u: int) -> List[int]:
        """Indices of edges at ``u``."""
        return [k for k, (a, b, _) in enumerate(self.edges) if u in (a, b)]

    def valence(self, u: int) -> int:
        return len(self.incident(u))

    def special_points(self, u: int) -> int:
        """``n(v)``: flags plus marks."""
        return self.valence(u) + len(self.vertices[u].marks)

    def flags(self) -> List[Tuple[int, int]]:
        """All ``(vertex, edge index)`` pairs."""
        return [(u, k) for k, (a, b, _) in enumerate(self.edges) for u in (a, b)]

    def other_end(self, flag: Tuple[int, int]) -> int:
        u, k = flag
        a, b, _ = self.edges[k]
        return b if u == a else a

    def omega(self, flag: Tuple[int, int]) -> RationalFunction:
        """Tangent weight of the edge curve at the point over ``i_v``."""
        u, k = flag
        d = self.edges[k][2]
        return (weight(self.vertices[u].colour) - weight(self.vertices[self.other_end(flag)].colour)) / d

    def mark_vertex(self, i: int) -> Vertex:
        for v in self.vertices:
            if i in v.marks:
                return v
        raise KeyError(f"no mark {i}")

    def moduli_dimension(self) -> int:
        return sum(max(self.special_points(v.id) - 3, 0) for v in self.vertices)

    def mirror(self) -> "FixedGraph":
        """Swap the two fixed points."""
        return FixedGraph(tuple(Vertex(v.id, 1 - v.colour, v.marks) for v in self.vertices), self.edges)

    def branch(self, start: int, blocked: int) -> List[int]:
        """Vertices reachable from ``start`` without passing ``blocked``."""
        seen = {start}
        frontier = [start]
        while frontier:
            u = frontier.pop()
            for w in self.neighbours(u):
                if w != blocked and w not in seen:
                    seen.add(w)
                    frontier.append(w)
        return sorted(seen)

    def signature(self) -> str:
        return _canonical(self)[0]

    def describe(self) -> str:
        """Text form accepted by :func:`parse_graph` (paths only render inline)."""
        degs = [self.valence(v.id) for v in self.vertices]
        if max(degs, default=0) <= 2:
            ends = [v.id for v in self.vertices if degs[v.id] <= 1]
            order = [ends[0]]
            while len(order) < len(self.vertices):
                nxt = [w for w in self.neighbours(order[-1]) if w not in order]
                order.append(nxt[0])
            parts = [self.vertices[order[0]].label()]
            for a, b in zip(order, order[1:]):
                d = next(e[2] for e in self.edges if {e[0], e[1]} == {a, b})
                parts.append(f"-{d}-")
                parts.append(self.vertices[b].label())
            return " ".join(parts)
        return self.signature()

    def __str__(self):
        return self.describe()


_VERTEX_RE = re.compile(r"^([01])(?:\{([\d,\s]*)\})?$")


def parse_graph(text: str) -> FixedGraph:
    """Parse a path written as ``"1{1} -1- 0{2} -1- 1"``."""
    tokens = text.split()
    if len(tokens) % 2 == 0:
        raise ValueError(f"malformed graph {text!r}")
    vertices = []
    edges = []
    for pos, tok in enumerate(tokens):
        if pos % 2 == 0:
            m = _VERTEX_RE.match(tok)
            if not m:
                raise ValueError(f"bad vertex {tok!r}")
            marks = frozenset(int(x) for x in (m.group(2) or "").replace(" ", "").split(",") if x)
            vertices.append(Vertex(len(vertices), int(m.group(1)), marks))
        else:
            m = re.fullmatch(r"-(\d+)-", tok)
            if not m:
                raise ValueError(f"bad edge {tok!r}")
            edges.append((len(vertices) - 1, len(vertices), int(m.group(1))))
    return FixedGraph(tuple(vertices), tuple(edges))


def _encode(g: FixedGraph, u: int, parent: Optional[int]) -> str:
    kids = []
    for k in g.incident(u):
        w = g.other_end((u, k))
        if w != parent:
            kids.append(f"-{g.edges[k][2]}-{_encode(g, w, u)}")
    return "(" + g.vertices[u].label() + "".join(sorted(kids)) + ")"


def _canonical(g: FixedGraph) -> Tuple[str, int]:
    """Minimal rooted encoding over all roots, and the root achieving it."""
    return min((_encode(g, r, None), r) for r in range(len(g.vertices)))


def _relabel(g: FixedGraph) -> FixedGraph:
    """Renumber vertices in preorder of the canonical encoding."""
    _, root = _canonical(g)
    order: List[int] = []

    def visit(u, parent):
        order.append(u)
        kids = []
        for k in g.incident(u):
            w = g.other_end((u, k))
            if w != parent:
                kids.append((f"-{g.edges[k][2]}-{_encode(g, w, u)}", w))
        for _, w in sorted(kids):
            visit(w, u)

    visit(root, None)
    new = {old: i for i, old in enumerate(order)}
    vertices = tuple(Vertex(new[v.id], v.colour, v.marks) for v in sorted(g.vertices, key=lambda v: new[v.id]))
    edges = tuple(sorted((min(new[a], new[b]), max(new[a], new[b]), d) for a, b, d in g.edges))
    return FixedGraph(vertices, edges)


def _graph_automorphisms(g: FixedGraph) -> int:
    """Label-preserving vertex permutations, counted by brute force."""
    edge_set = {(frozenset((a, b)), d) for a, b, d in g.edges}
    labels = [(v.colour, v.marks) for v in g.vertices]
    count = 0
    for perm in itertools.permutations(range(len(g.vertices))):
        if any(labels[i] != labels[perm[i]] for i in range(len(perm))):
            continue
        if {(frozenset((perm[a], perm[b])), d) for a, b, d in g.edges} == edge_set:
            count += 1
    return count


def aut_order(g: FixedGraph) -> int:
    """``|Aut(g)|`` times the product of edge degrees."""
    prod = 1
    for _, _, d in g.edges:
        prod *= d
    return _graph_automorphisms(g) * prod


def _labelled_trees(v: int) -> Iterable[List[Tuple[int, int]]]:
    """All labelled trees on ``v`` vertices, via Pruefer sequences."""
    if v == 1:
        yield []
        return
    if v == 2:
        yield [(0, 1)]
        return
    for seq in itertools.product(range(v), repeat=v - 2):
        degree = [1] * v
        for x in seq:
            degree[x] += 1
        edges = []
        for x in seq:
            leaf = min(i for i in range(v) if degree[i] == 1)
            edges.append((leaf, x))
            degree[leaf] -= 1
            degree[x] -= 1
        a, b = [i for i in range(v) if degree[i] == 1]
        edges.append((a, b))
        yield edges


def _compositions(total: int, parts: int) -> Iterable[Tuple[int, ...]]:
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _check_supported(n: int, d: int) -> None:
    if not (0 <= n <= SUPPORTED_N and 1 <= d <= SUPPORTED_D):
        raise ValueError(
            f"unsupported (n, d) = ({n}, {d}): target P^1 only, with 0 <= n <= {SUPPORTED_N} and 1 <= d <= {SUPPORTED_D}"
        )


def _raw_graphs(n: int, d: int) -> Dict[str, FixedGraph]:
    found: Dict[str, FixedGraph] = {}
    for nv in range(2, d + 2):
        for tree in _labelled_trees(nv):
            adj = {i: [] for i in range(nv)}
            for a, b in tree:
                adj[a].append(b)
                adj[b].append(a)
            colour = {0: 0}
            stack = [0]
            while stack:
                u = stack.pop()
                for w in adj[u]:
                    if w not in colour:
                        colour[w] = 1 - colour[u]
                        stack.append(w)
            for degs in _compositions(d, nv - 1):
                for flip in (0, 1):
                    for placement in itertools.product(range(nv), repeat=n):
                        marks = [set() for _ in range(nv)]
                        for i, vtx in enumerate(placement, start=1):
                            marks[vtx].add(i)
                        g = FixedGraph(
                            tuple(Vertex(i, colour[i] ^ flip, frozenset(marks[i])) for i in range(nv)),
                            tuple((a, b, dd) for (a, b), dd in zip(tree, degs)),
                        )
                        found.setdefault(g.signature(), _relabel(g))
    return found


@dataclass(frozen=True)
class FixedComponent:
    """A fixed locus: its graph, index in the standard order, and ``a_Gamma``."""

    index: int
    graph: FixedGraph
    aut_order: int
    moduli_dimension: int
    psi_vertex: Optional[int] = None

    @property
    def name(self) -> str:
        return f"Z{self.index}"

    def __str__(self):
        return f"{self.name}: {self.graph}"


def enumerate_graphs(n: int, d: int) -> List[FixedComponent]:
    """All fixed components of ``M_{0,n}(P^1, d)``, deterministically ordered.

    For ``(2, 2)`` the order is the standard one listed in
    :data:`tables.FIXED_GRAPHS_22`; otherwise components are sorted by
    number of edges and then by canonical signature.
    """
    _check_supported(n, d)
    found = _raw_graphs(n, d)
    if (n, d) == (2, 2):
        reference = [parse_graph(s).signature() for s in tables.FIXED_GRAPHS_22]
        if sorted(reference) != sorted(found):
            raise AssertionError("enumerated fixed graphs differ from the reference list")
        keys = reference
    else:
        keys = sorted(found, key=lambda s: (len(found[s].edges), s))
    out = []
    for i, key in enumerate(keys, start=1):
        g = found[key]
        dim = g.moduli_dimension()
        psi_vertex = None
        if dim == 1:
            psi_vertex = next(v.id for v in g.vertices if g.special_points(v.id) == 4)
        out.append(FixedComponent(i, g, aut_order(g), dim, psi_vertex))
    return out


# -- Euler classes ----------------------------------------------------------

def _diff(i: int) -> RationalFunction:
    """``lambda_i - lambda_j`` for the other fixed point ``j``."""
    return weight(i) - weight(1 - i)


PSI = EquivariantClass(0, 1)


def euler_class(c: FixedComponent) -> EquivariantClass:
    """Equivariant Euler class of the normal bundle to a fixed component.

    The product of flag, vertex and edge contributions, specialised to a
    one-dimensional target (no extra fixed points besides the edge ends).
    """
    g = c.graph
    if c.moduli_dimension > 1:
        raise ValueError(f"{c.name}: fixed components of dimension {c.moduli_dimension} are not supported")
    result = EquivariantClass(1, 0)
    # flags
    for flag in g.flags():
        u, _ = flag
        result = result / _diff(g.vertices[u].colour)
        if g.special_points(u) >= 3:
            e_f = PSI if u == c.psi_vertex else 0
            result = result * (EquivariantClass(g.omega(flag)) - e_f)
    # vertices
    for v in g.vertices:
        result = result * _diff(v.colour)
        inc = g.incident(v.id)
        if not v.marks and len(inc) == 2:
            result = result * (g.omega((v.id, inc[0])) + g.omega((v.id, inc[1])))
        elif not v.marks and len(inc) == 1:
            result = result / g.omega((v.id, inc[0]))
    # edges
    for a, b, d in g.edges:
        lam = weight(g.vertices[a].colour) - weight(g.vertices[b].colour)
        result = result * (Fraction((-1) ** d * factorial(d) ** 2, d ** (2 * d)) * lam ** (2 * d))
    return result


# -- restrictions ---------------------------------------------------------

def parse_class(text: str) -> EquivariantClass:
    """Read ``"2*l0 - 2*l1 - 2*psi"`` as an equivariant class (linear in psi)."""
    p = parse_polynomial(text, ("l0", "l1", "psi"))
    const: Dict = {}
    lin: Dict = {}
    for (a, b, k), c in p.terms.items():
        if k == 0:
            const[(a, b)] = c
        elif k == 1:
            lin[(a, b)] = c
        else:
            raise ValueError(f"{text!r}: psi^2 = 0 here")
    return EquivariantClass(
        RationalFunction(Polynomial(("l0", "l1"), const)),
        RationalFunction(Polynomial(("l0", "l1"), lin)),
    )


Split = FrozenSet[Tuple[FrozenSet[int], int]]


def _label(g: FixedGraph, marks: FrozenSet[int], deg: int) -> Split:
    """Divisor label ``{(A, d_A), (B, d_B)}`` of a two-component degeneration."""
    rest = frozenset(range(1, g.n + 1)) - marks
    return frozenset({(marks, deg), (rest, g.d - deg)})


def _split(g: FixedGraph, side: Sequence[int], extra_degree: int = 0) -> Split:
    """Label of a node separating the vertices ``side`` from the rest.

    ``extra_degree`` counts a severed edge that belongs to ``side``.
    """
    side = set(side)
    marks = frozenset(m for u in side for m in g.vertices[u].marks)
    deg = sum(d for a, b, d in g.edges if a in side and b in side) + extra_degree
    return _label(g, marks, deg)


def node_smoothing_restrictions(c: FixedComponent, include_internal: bool = False) -> Dict[Split, EquivariantClass]:
    """Restrictions of every boundary divisor, from the nodes of the fixed curve.

    Each node contributes the weight of its smoothing direction to the divisor
    obtained by keeping only that node. A node where an edge meets a contracted
    component smooths with ``omega_F`` (minus ``psi`` when the component is the
    one-dimensional one); a node joining two edges smooths with the sum of the
    two tangent weights. With ``include_internal`` the three boundary points
    of a 4-pointed contracted component each contribute ``psi``.
    """
    g = c.graph
    out: Dict[Split, EquivariantClass] = {}

    def add(key, val):
        out[key] = out.get(key, EquivariantClass(0, 0)) + val

    for v in g.vertices:
        inc = g.incident(v.id)
        if g.special_points(v.id) >= 3:
            for k in inc:
                w = g.other_end((v.id, k))
                far = g.branch(w, v.id)
                val = EquivariantClass(g.omega((v.id, k)))
                if v.id == c.psi_vertex:
                    val = val - PSI
                add(_split(g, far, g.edges[k][2]), val)
        elif not v.marks and len(inc) == 2:
            k1, k2 = inc
            w = g.other_end((v.id, k1))
            side = g.branch(w, v.id)
            add(_split(g, side, g.edges[k1][2]), EquivariantClass(g.omega((v.id, k1)) + g.omega((v.id, k2))))
    if include_internal and c.psi_vertex is not None:
        v = c.psi_vertex
        points = [("mark", m) for m in sorted(g.vertices[v].marks)] + [("edge", k) for k in g.incident(v)]
        first = points[0]
        for partner in points[1:]:
            marks, deg = set(), 0
            for kind, x in (first, partner):
                if kind == "mark":
                    marks.add(x)
                else:
                    far = g.branch(g.other_end((v, x)), v)
                    marks.update(m for u in far for m in g.vertices[u].marks)
                    deg += g.edges[x][2] + sum(d for a, b, d in g.edges if a in far and b in far)
            add(_label(g, frozenset(marks), deg), PSI)
    return {k: v for k, v in out.items() if not v.is_zero()}


def classify_divisor_22(key: Split) -> str:
    """Name of a boundary divisor of two-pointed conics."""
    (ma, da), (mb, db) = sorted(key, key=lambda t: t[1])
    if (da, db) == (0, 2):
        return "D0"
    if (da, db) == (1, 1):
        return "D1" if len(ma) != 1 else "D2"
    raise ValueError(f"not a boundary divisor: {key}")


def classify_divisor_12(key: Split) -> str:
    degs = sorted(d for _, d in key)
    if degs == [1, 1]:
        return "D"
    raise ValueError(f"not a boundary divisor: {key}")


# -- the fixed-point data of one moduli space --------------------------------

class FixedPointSpace:
    """Fixed components of ``M_{0,n}(P^1, d)`` with cached Euler classes."""

    def __init__(self, n: int, d: int, boundary_table: Optional[Mapping[str, Sequence[str]]] = None):
        _check_supported(n, d)
        self.n, self.d = n, d
        self.components = enumerate_graphs(n, d)
        self._euler: Dict[int, EquivariantClass] = {}
        self._restrictions: Dict[Tuple[str, int], EquivariantClass] = {}
        self._boundary: Dict[str, Tuple[EquivariantClass, ...]] = {}
        if (n, d) == (2, 2):
            table = tables.BOUNDARY_RESTRICTIONS_22 if boundary_table is None else boundary_table
            self._boundary = {k: tuple(parse_class(s) for s in v) for k, v in table.items()}
        elif boundary_table is not None:
            raise ValueError("a boundary table is only used for two-pointed conics")

    def __repr__(self):
        return f"FixedPointSpace(n={self.n}, d={self.d})"

    @property
    def dimension(self) -> int:
        return 2 * self.d - 2 + self.n

    def component(self, index: int) -> FixedComponent:
        if not 1 <= index <= len(self.components):
            raise KeyError(f"no component Z{index}")
        return self.components[index - 1]

    def euler(self, c: FixedComponent) -> EquivariantClass:
        if c.index not in self._euler:
            self._euler[c.index] = euler_class(c)
        return self._euler[c.index]

    def symbols(self) -> Tuple[str, ...]:
        hs = tuple(f"H{i}" for i in range(1, self.n + 1))
        psis = tuple(f"psi{i}" for i in range(1, self.n + 1))
        if (self.n, self.d) == (2, 2):
            return ("D0", "D1", "D2") + hs + psis
        if (self.n, self.d) == (1, 2):
            return ("D",) + hs + psis
        return hs + psis

    def _node_classes(self, c: FixedComponent) -> Dict[str, EquivariantClass]:
        raw = node_smoothing_restrictions(c, include_internal=True)
        classify = classify_divisor_22 if (self.n, self.d) == (2, 2) else classify_divisor_12
        out: Dict[str, EquivariantClass] = {}
        for key, val in raw.items():
            name = classify(key)
            out[name] = out.get(name, EquivariantClass(0, 0)) + val
        return out

    def restrict(self, symbol: str, c: FixedComponent) -> EquivariantClass:
        key = (symbol, c.index)
        if key in self._restrictions:
            return self._restrictions[key]
        g = c.graph
        if re.fullmatch(r"H\d+", symbol) and 1 <= int(symbol[1:]) <= self.n:
            val = EquivariantClass(weight(g.mark_vertex(int(symbol[1:])).colour))
        elif re.fullmatch(r"psi\d+", symbol) and 1 <= int(symbol[3:]) <= self.n:
            val = self._psi(int(symbol[3:]), c)
        elif symbol in self._boundary:
            val = self._boundary[symbol][c.index - 1]
        elif (self.n, self.d) == (1, 2) and symbol == "D":
            val = self._node_classes(c).get("D", EquivariantClass(0, 0))
        else:
            raise KeyError(f"unknown symbol {symbol!r} for ({self.n}, {self.d})")
        self._restrictions[key] = val
        return val

    def _psi(self, i: int, c: FixedComponent) -> EquivariantClass:
        g = c.graph
        v = g.mark_vertex(i)
        if v.id == c.psi_vertex:
            return PSI
        if g.special_points(v.id) >= 3:
            return EquivariantClass(0, 0)
        (k,) = g.incident(v.id)
        return EquivariantClass(-g.omega((v.id, k)))

    def restrict_polynomial(self, p: Polynomial, c: FixedComponent, point: Optional[Point] = None) -> EquivariantClass:
        """Restriction of a polynomial in the generator symbols."""
        vals = {}
        for s in p.used_variables():
            r = self.restrict(s, c)
            vals[s] = r.at(point) if point is not None else r
        total = EquivariantClass(0, 0)
        for exps, coeff in p.terms.items():
            term = EquivariantClass(coeff if point is not None else RationalFunction(coeff))
            for var, e in zip(p.variables, exps):
                if e:
                    term = term * vals[var] ** e
            total = total + term
        return total

    def summand(self, p: Polynomial, c: FixedComponent, point: Optional[Point] = None) -> Value:
        """One term of the residue sum: ``int_Z p|_Z / (a_Z e(N_Z))``."""
        num = self.restrict_polynomial(p, c, point)
        euler = self.euler(c)
        if point is not None:
            euler = euler.at(point)
        return integrate_component(c, num, euler)

    def integrate(
        self,
        p: Union[Polynomial, str],
        points: Optional[Sequence[Point]] = None,
        symbolic: bool = False,
    ) -> Fraction:
        """Residue sum over all fixed components.

        In point mode the sum is evaluated exactly at every point in
        ``points`` (default :data:`DEFAULT_POINTS`) and the values must agree.
        In symbolic mode the sum is a rational function that must be constant.
        """
        if isinstance(p, str):
            p = parse_polynomial(p, self.symbols())
        if not p.is_homogeneous() or (not p.is_zero() and p.degree() != self.dimension):
            if p.is_zero() or p.is_homogeneous():
                return Fraction(0)
            raise ValueError(f"{p} is not homogeneous")
        if symbolic:
            total = RationalFunction(0)
            for c in self.components:
                total = total + self.summand(p, c)
            if not total.is_constant():
                raise LocalizationError(f"residue sum for {p} depends on the weights: {total}")
            return total.constant_value()
        pts = list(DEFAULT_POINTS if points is None else points)
        values = []
        for pt in pts:
            values.append(sum((self.summand(p, c, pt) for c in self.components), Fraction(0)))
        if any(v != values[0] for v in values):
            detail = ", ".join(
                f"({format_rational(pt[0])},{format_rational(pt[1])}): {format_rational(v)}" for pt, v in zip(pts, values)
            )
            raise LocalizationError(f"residue sum for {p} is not weight independent ({detail})")
        return values[0]


def integrate_component(c: FixedComponent, numerator: EquivariantClass, euler: Optional[EquivariantClass] = None) -> Value:
    """``numerator / (a_Gamma * Euler)`` integrated over the component."""
    if euler is None:
        euler = euler_class(c)
    quotient = numerator / (euler * c.aut_order)
    if c.moduli_dimension == 0:
        if quotient.psi:
            raise ValueError(f"{c.name} is a point but the integrand carries psi")
        return quotient.const
    return quotient.psi


# -- module-level conveniences ------------------------------------------------

@lru_cache(maxsize=None)
def space(n: int = 2, d: int = 2) -> FixedPointSpace:
    return FixedPointSpace(n, d)


def restrict(symbol: str, c: FixedComponent, n: int = 2, d: int = 2) -> EquivariantClass:
    return space(n, d).restrict(symbol, c)


def localize_integral(m: Union[Polynomial, str], points: Optional[Sequence[Point]] = None, symbolic: bool = False) -> Fraction:
    """Integral over two-pointed conics by localization."""
    return space(2, 2).integrate(m, points, symbolic)


DIVISOR_SYMBOLS = ("D0", "D1", "D2", "H1", "H2")


def degree4_monomials() -> List[Polynomial]:
    """The 70 degree-four monomials in the five divisor classes."""
    return [Polynomial.monomial(DIVISOR_SYMBOLS, e) for e in monomials_of_degree(5, 4)]


def forced_zero(m: Polynomial) -> bool:
    """A factor ``H_i^2`` or ``H1*H2*D0`` (both vanish in the ring)."""
    (exps,) = m.with_variables(DIVISOR_SYMBOLS).terms
    d0, _, _, h1, h2 = exps
    return h1 >= 2 or h2 >= 2 or bool(h1 and h2 and d0)


def table2(points: Optional[Sequence[Point]] = None, fs: Optional[FixedPointSpace] = None) -> Dict[str, Fraction]:
    """Every degree-four monomial integral; forced zeros are not localized."""
    fs = fs or space(2, 2)
    out = {}
    for m in degree4_monomials():
        key = m.to_string()
        out[key] = Fraction(0) if forced_zero(m) else fs.integrate(m, points)
    return out


def validate_boundary_table(fs: Optional[FixedPointSpace] = None, include_psi: bool = False) -> List[str]:
    """Compare served boundary restrictions with the node-smoothing rule.

    Returns a list of mismatch descriptions (empty when everything agrees).
    Entries carrying ``psi`` are only compared with ``include_psi``.
    """
    fs = fs or space(2, 2)
    problems = []
    for c in fs.components:
        rule = fs._node_classes(c)
        for name in ("D0", "D1", "D2"):
            served = fs.restrict(name, c)
            if served.has_psi() and not include_psi:
                continue
            derived = rule.get(name, EquivariantClass(0, 0))
            if not include_psi:
                derived = EquivariantClass(derived.const, 0)
            if derived != served:
                problems.append(f"{name}|{c.name}: table {served}, node rule {derived}")
    return problems


def validate_hyperplanes(fs: Optional[FixedPointSpace] = None) -> List[str]:
    fs = fs or space(2, 2)
    problems = []
    for name, column in tables.HYPERPLANE_RESTRICTIONS_22.items():
        for c, text in zip(fs.components, column):
            if fs.restrict(name, c) != parse_class(text):
                problems.append(f"{name}|{c.name}: graph gives {fs.restrict(name, c)}, table {text}")
    return problems


# -- evaluation points ----------------------------------------------------------

def parse_points(text: str) -> List[Point]:
    """``"3,1;5,2"`` to a list of weight points, rejecting poles and repeats."""
    pts = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        parts = [x.strip() for x in chunk.split(",")]
        if len(parts) != 2:
            raise ValueError(f"bad point {chunk!r}")
        p = (Fraction(parts[0]), Fraction(parts[1]))
        if p[0] == p[1] or 0 in p:
            raise ValueError(f"point {chunk!r} lies on a pole (need l0 != l1 and both nonzero)")
        pts.append(p)
    if len(pts) < 2:
        raise ValueError("two evaluation points are required")
    if len(set(pts)) != len(pts):
        raise ValueError("evaluation points must be distinct")
    return pts


def points_from_env(default: Sequence[Point] = DEFAULT_POINTS) -> List[Point]:
    text = os.environ.get(POINTS_ENV)
    return parse_points(text) if text else list(default)


def random_point(rng: Optional[random.Random] = None) -> Point:
    """A pole-free rational weight point."""
    rng = rng or random.Random()
    while True:
        p = (
            Fraction(rng.randint(-50, 50), rng.randint(1, 12)),
            Fraction(rng.randint(-50, 50), rng.randint(1, 12)),
        )
        if p[0] and p[1] and p[0] != p[1]:
            return p
