"""Residues of small configurations and their bridge joins.

Removing four incidences from the Fano plane (the four quadrilateral sides
through their forward vertices) and four from the Moebius-Kantor
configuration (every second point from its own line) leaves two *residues*,
each with four valency-2 points and four valency-2 lines. Re-joining the
open points of each residue to the open lines of the other through a pair
of permutations produces a 15_3 configuration whose Levi graph is a cubic
bipartite graph on 30 vertices; scanning all 576 joins locates the unique
one (up to isomorphism) with automorphism group of order 144.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

from .canon import automorphism_group, canonical_form
from .graphs import Graph, bipartition, build, girth, is_cubic
from .incidence import (
    Configuration,
    ConfigurationError,
    configuration,
    fano,
    moebius_kantor,
)


class StructureError(ValueError):
    """A structural assertion about a constructed object failed."""


class BridgeError(StructureError):
    """A bridge join produced an invalid configuration."""

    def __init__(self, message: str, violating_pair=None):
        super().__init__(message)
        self.violating_pair = violating_pair


# Permutations of {0,1,2,3} in lexicographic order of their one-line images.
PERMS4: tuple[tuple[int, int, int, int], ...] = tuple(
    itertools.permutations(range(4))
)
_PERM4_RANK = {p: i for i, p in enumerate(PERMS4)}


@dataclass(frozen=True)
class BridgeSpec:
    """A pair of permutations wiring open points to open lines.

    `alpha[i]` is the open-line slot of the first residue receiving open
    point i of the second residue; `beta[i]` is the open-point slot of the
    first residue attached to open line i of the second residue.
    """

    alpha: tuple[int, int, int, int]
    beta: tuple[int, int, int, int]

    def __post_init__(self):
        for name, p in (("alpha", self.alpha), ("beta", self.beta)):
            if tuple(sorted(p)) != (0, 1, 2, 3):
                raise ValueError(f"{name} must be a permutation of 0..3, got {p}")

    @property
    def rank(self) -> int:
        """Position in the lexicographic double ordering, 0..575."""
        return 24 * _PERM4_RANK[self.alpha] + _PERM4_RANK[self.beta]

    @classmethod
    def from_strings(cls, alpha: str, beta: str) -> "BridgeSpec":
        def parse(s: str) -> tuple[int, int, int, int]:
            if len(s) != 4 or not s.isdigit():
                raise ValueError(f"expected a 4-digit one-line image, got {s!r}")
            return tuple(int(c) for c in s)  # type: ignore[return-value]

        return cls(parse(alpha), parse(beta))

    def __str__(self) -> str:
        return "".join(map(str, self.alpha)) + " " + "".join(map(str, self.beta))


def all_bridge_specs() -> tuple[BridgeSpec, ...]:
    """All 576 joins, in rank order."""
    return tuple(BridgeSpec(a, b) for a in PERMS4 for b in PERMS4)


@dataclass(frozen=True)
class Residue:
    """A configuration with four point-line incidences removed.

    The removed incidences leave four points and four lines of valency 2;
    their slot orders (`open_points`, `open_lines`) are part of the residue.
    `companion_points`, when set, lists for each open line the valency-3
    point that stayed on it next to the removal.
    """

    base: Configuration
    removed: tuple[tuple[int, int], ...]  # (point, line index) pairs
    open_points: tuple[int, int, int, int]
    open_lines: tuple[int, int, int, int]
    companion_points: tuple[int, int, int, int] | None = None

    def __post_init__(self):
        incidences = {
            (p, j) for j, line in enumerate(self.base.lines) for p in line
        }
        for pair in self.removed:
            if pair not in incidences:
                raise ValueError(f"removed pair {pair} is not an incidence")
        removed_points = sorted(p for p, _ in self.removed)
        removed_lines = sorted(j for _, j in self.removed)
        if removed_points != sorted(self.open_points):
            raise ValueError("open points must be the points losing an incidence")
        if removed_lines != sorted(self.open_lines):
            raise ValueError("open lines must be the lines losing an incidence")
        if len(set(removed_points)) != 4 or len(set(removed_lines)) != 4:
            raise ValueError("removals must hit four distinct points and lines")

    def line_points(self, j: int) -> frozenset[int]:
        """Points remaining on line j after the removals."""
        gone = {p for p, line in self.removed if line == j}
        return self.base.lines[j] - gone


def quadrilaterals_mutually_inscribed(
    c: Configuration,
) -> list[tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]]:
    """All ordered pairs of mutually inscribed quadrilaterals.

    A quadrilateral is a cyclic 4-tuple of points with no three collinear
    in which consecutive points are collinear (the sides) and opposite
    points are not (diagonal-free). Two quadrilaterals are mutually
    inscribed when each side of one passes through a vertex of the other,
    and vice versa. Every row is (points, companion vertices in side order,
    side line indices); the cycle starts at its smallest point and runs
    toward the smaller neighbor, and each ordered pair contributes one row
    for each quadrilateral.
    """
    line_through: dict[frozenset[int], int] = {}
    for j, line in enumerate(c.lines):
        for pair in itertools.combinations(sorted(line), 2):
            line_through[frozenset(pair)] = j

    quads = []
    for four in itertools.combinations(range(c.n_points), 4):
        if any(len(line & set(four)) >= 3 for line in c.lines):
            continue
        a, *rest = four
        for perm in itertools.permutations(rest):
            if perm[0] > perm[2]:
                continue  # keep one direction of each cycle
            cycle = (a,) + perm
            side_pairs = [
                frozenset((cycle[i], cycle[(i + 1) % 4])) for i in range(4)
            ]
            if any(pair not in line_through for pair in side_pairs):
                continue
            diagonals = (frozenset((cycle[0], cycle[2])),
                         frozenset((cycle[1], cycle[3])))
            if any(d in line_through for d in diagonals):
                continue
            sides = tuple(line_through[pair] for pair in side_pairs)
            thirds = tuple(
                next(iter(c.lines[s] - pair))
                for s, pair in zip(sides, side_pairs)
            )
            quads.append((cycle, thirds, sides))

    out = []
    for q1, q2 in itertools.permutations(quads, 2):
        if (set(q1[1]) == set(q2[0]) and set(q2[1]) == set(q1[0])
                and q1 not in out):
            out.append(q1)
    return out


@functools.cache
def mk_residue() -> Residue:
    """Moebius-Kantor residue: drop point 2i from line 2i, i = 0..3.

    Line i of the base is {i, i+1, i+3} mod 8, so each even line keeps its
    two odd points. Open point slot i is point 2i; open line slot i is the
    line antipodal to it, line 2i+4 (mod 8). The antipodal pairing is what
    lines up the identity join with the order-144 graph and makes the
    diagonal joins (alpha == beta) split 8/16 across the order-144 and
    order-24 classes; pairing point 2i with its own removed line 2i shifts
    both facts onto other classes.
    """
    base = moebius_kantor()
    removed = tuple((2 * i, 2 * i) for i in range(4))
    return Residue(
        base=base,
        removed=removed,
        open_points=(0, 2, 4, 6),
        open_lines=(4, 6, 0, 2),
        companion_points=(1, 3, 5, 7),
    )


@functools.cache
def f_residue() -> Residue:
    """Fano residue: drop each quadrilateral side's forward vertex.

    The quadrilateral has vertices (3, 4, 5, 6); side i is the line through
    vertices i and i+1 (mod 4), and the incidence (vertex i+1, side i) is
    removed.
    """
    base = fano()
    quad = (3, 4, 5, 6)
    line_index = {line: j for j, line in enumerate(base.lines)}
    sides = []
    for i in range(4):
        a, b = quad[i], quad[(i + 1) % 4]
        containing = [
            line_index[line] for line in base.lines if a in line and b in line
        ]
        assert len(containing) == 1
        sides.append(containing[0])
    removed = tuple((quad[(i + 1) % 4], sides[i]) for i in range(4))
    return Residue(
        base=base,
        removed=removed,
        open_points=quad,
        open_lines=tuple(sides),
    )


# Vertex layout of a joined Levi graph.
F_POINTS = tuple(range(0, 7))
MK_POINTS = tuple(range(7, 15))
F_LINES = tuple(range(15, 22))
MK_LINES = tuple(range(22, 30))
_MK_POINT_OFFSET = 7
_F_LINE_OFFSET = 15
_MK_LINE_OFFSET = 22


def bridge_join(
    f: Residue, mk: Residue, spec: BridgeSpec
) -> tuple[Configuration, Graph]:
    """Join two residues through eight new incidences.

    Open point i of the second residue lands on open line alpha[i] of the
    first, and open line i of the second receives open point beta[i] of the
    first. The result must again be linear (no two lines sharing two
    points); a violation raises BridgeError carrying one offending line
    pair. The returned Levi graph places the first residue's points at
    0..6, the second's at 7..14, the first's lines at 15..21 and the
    second's at 22..29, with labels recording the origin of every vertex.
    """
    nf = f.base.n_points
    lines: list[set[int]] = []
    for j in range(len(f.base.lines)):
        lines.append(set(f.line_points(j)))
    for j in range(len(mk.base.lines)):
        lines.append({nf + p for p in mk.line_points(j)})
    for i in range(4):
        lines[f.open_lines[spec.alpha[i]]].add(nf + mk.open_points[i])
        lines[len(f.base.lines) + mk.open_lines[i]].add(f.open_points[spec.beta[i]])

    point_labels = tuple(f"fp{p}" for p in range(nf)) + tuple(
        f"mp{p}" for p in range(mk.base.n_points)
    )
    line_labels = tuple(f"fl{j}" for j in range(len(f.base.lines))) + tuple(
        f"ml{j}" for j in range(len(mk.base.lines))
    )
    try:
        config = configuration(
            nf + mk.base.n_points,
            tuple(frozenset(line) for line in lines),
            point_labels=point_labels,
            line_labels=line_labels,
        )
    except ConfigurationError as exc:
        pair = None
        for (j1, l1), (j2, l2) in itertools.combinations(enumerate(lines), 2):
            if len(set(l1) & set(l2)) > 1:
                pair = (j1, j2)
                break
        raise BridgeError(f"invalid bridge {spec}: {exc}", violating_pair=pair) from exc

    from .incidence import levi_graph

    g, _ = levi_graph(config)
    if not (g.n == 30 and len(g.edges) == 45 and is_cubic(g)):
        raise StructureError(f"join {spec} is not a cubic graph on 30 vertices")
    if bipartition(g) is None:
        raise StructureError(f"join {spec} is not bipartite")
    if girth(g) != 6:
        raise StructureError(f"join {spec} has girth {girth(g)}, expected 6")
    return config, g


def bridge_graph(spec: BridgeSpec) -> Graph:
    """Levi graph of the joined configuration for one spec."""
    return bridge_join(f_residue(), mk_residue(), spec)[1]


@dataclass(frozen=True)
class CensusClass:
    """An isomorphism class among the 576 joins."""

    certificate: bytes
    aut_order: int
    specs: tuple[BridgeSpec, ...]  # in rank order

    @property
    def representative(self) -> BridgeSpec:
        return self.specs[0]


@functools.cache
def bridge_census() -> tuple[CensusClass, ...]:
    """All 576 joins grouped by isomorphism class.

    Classes are ordered by descending automorphism-group order, then
    ascending class size, then certificate bytes; specs inside a class stay
    in rank order.
    """
    groups: dict[bytes, list[BridgeSpec]] = {}
    for spec in all_bridge_specs():
        cert = canonical_form(bridge_graph(spec)).certificate
        groups.setdefault(cert, []).append(spec)
    classes = []
    for cert, specs in groups.items():
        aut = automorphism_group(bridge_graph(specs[0])).order
        classes.append(CensusClass(cert, aut, tuple(specs)))
    return tuple(
        sorted(classes, key=lambda c: (-c.aut_order, len(c.specs), c.certificate))
    )


@functools.cache
def identify_goedgebeur() -> tuple[BridgeSpec, Graph]:
    """Locate the unique join class with automorphism group of order 144.

    Returns the lexicographically least spec of that class together with
    its Levi graph, after checking that the class is unique, is pseudo
    2-factor isomorphic, and contains exactly eight diagonal (alpha == beta)
    specs.
    """
    from .twofactors import MIXED, NO_TWO_FACTOR, pseudo_2fi

    hits = [c for c in bridge_census() if c.aut_order == 144]
    if len(hits) != 1:
        raise StructureError(
            f"expected exactly one class with 144 automorphisms, found {len(hits)}"
        )
    cls = hits[0]
    spec = cls.representative
    g = bridge_graph(spec)
    report = pseudo_2fi(g)
    if report.status in (MIXED, NO_TWO_FACTOR):
        raise StructureError(
            f"the 144-automorphism join is not pseudo 2-factor isomorphic "
            f"({report.status})"
        )
    diagonal = [s for s in cls.specs if s.alpha == s.beta]
    if len(diagonal) != 8:
        raise StructureError(
            f"expected 8 diagonal specs in the 144-automorphism class, "
            f"found {len(diagonal)}"
        )
    return spec, g


def goedgebeur_graph() -> Graph:
    """The 30-vertex graph with the order-144 automorphism group."""
    return identify_goedgebeur()[1]


def goedgebeur_configuration() -> Configuration:
    """The 15-point, 15-line configuration underlying the identified graph."""
    return bridge_join(f_residue(), mk_residue(), identify_goedgebeur()[0])[0]


@dataclass(frozen=True)
class MarkedEdges:
    """The nine distinguished edges of the identified graph.

    `e` is the unique edge at distance two from all eight quadrilateral
    vertices (the four open points and four open lines of the first
    residue); `f` are the four surviving quadrilateral side incidences,
    ordered by open point; `m` are the four pairwise independent second-
    residue edges at edge-distance two from the eight bridge edges, ordered
    by vertex index. `all` lists e first, then f, then m.
    """

    e: tuple[int, int]
    f: tuple[tuple[int, int], ...]
    m: tuple[tuple[int, int], ...]

    @property
    def all(self) -> tuple[tuple[int, int], ...]:
        return (self.e,) + self.f + self.m


def _distance_matrix(g: Graph) -> list[list[int]]:
    masks = {v: set() for v in range(g.n)}
    for u, v in g.edges:
        masks[u].add(v)
        masks[v].add(u)
    dist = []
    for start in range(g.n):
        row = [-1] * g.n
        row[start] = 0
        queue = [start]
        while queue:
            nxt = []
            for v in queue:
                for u in masks[v]:
                    if row[u] < 0:
                        row[u] = row[v] + 1
                        nxt.append(u)
            queue = nxt
        dist.append(row)
    return dist


def _edge_vertex_distance(dist, edge, v) -> int:
    return min(dist[edge[0]][v], dist[edge[1]][v])


def _edge_edge_distance(dist, e1, e2) -> int:
    return min(dist[a][b] for a in e1 for b in e2)


def marked_edges(g: Graph) -> MarkedEdges:
    """Recover the distinguished edge set of a joined Levi graph.

    The graph must carry the origin labels produced by bridge_join. Raises
    StructureError when any uniqueness or count assertion fails.
    """
    if g.labels is None or len(g.labels) != g.n:
        raise StructureError("marked_edges needs the origin labels of a join")
    first_points = {v for v in range(g.n) if g.labels[v].startswith("fp")}
    first_lines = {v for v in range(g.n) if g.labels[v].startswith("fl")}
    second_points = {v for v in range(g.n) if g.labels[v].startswith("mp")}
    second_lines = {v for v in range(g.n) if g.labels[v].startswith("ml")}
    if not (first_points and first_lines and second_points and second_lines):
        raise StructureError("marked_edges needs the origin labels of a join")
    first = first_points | first_lines
    second = second_points | second_lines

    bridge_edges = [
        (u, v) for u, v in g.edges if (u in first) != (v in first)
    ]
    if len(bridge_edges) != 8:
        raise StructureError(f"expected 8 bridge edges, found {len(bridge_edges)}")

    open_first_points = sorted(
        u for u in first_points
        if any(v in second_lines for v in g.neighbors(u))
    )
    open_first_lines = sorted(
        u for u in first_lines
        if any(v in second_points for v in g.neighbors(u))
    )
    if len(open_first_points) != 4 or len(open_first_lines) != 4:
        raise StructureError("expected four open points and four open lines")
    special = open_first_points + open_first_lines

    dist = _distance_matrix(g)

    e_candidates = [
        edge for edge in g.edges
        if all(_edge_vertex_distance(dist, edge, v) == 2 for v in special)
    ]
    if len(e_candidates) != 1:
        raise StructureError(
            f"expected a unique edge at distance 2 from the quadrilateral, "
            f"found {len(e_candidates)}"
        )
    e = e_candidates[0]

    f_edges = []
    for p in open_first_points:
        partners = [v for v in g.neighbors(p) if v in set(open_first_lines)]
        if len(partners) != 1:
            raise StructureError(
                f"open point {p} should keep exactly one open line, "
                f"found {len(partners)}"
            )
        f_edges.append((p, partners[0]) if p < partners[0] else (partners[0], p))

    # Edge-to-edge distance counts the edges of a connecting path (adjacent
    # edges are at distance 1), so distance 2 from the bridge set means:
    # no shared vertex with any bridge edge, but some endpoint adjacent to
    # a bridge endpoint.
    m_edges = [
        edge for edge in g.edges
        if edge[0] in second and edge[1] in second
        and min(_edge_edge_distance(dist, edge, b) for b in bridge_edges) == 1
    ]
    if len(m_edges) != 4:
        raise StructureError(
            f"expected 4 edges at distance 2 from the eight-bridge, "
            f"found {len(m_edges)}"
        )
    touched = [v for edge in m_edges for v in edge]
    if len(set(touched)) != 8:
        raise StructureError("the four distinguished second-residue edges intersect")
    return MarkedEdges(e=e, f=tuple(f_edges), m=tuple(sorted(m_edges)))
