"""Immutable simple graphs on dense integer vertices, plus the standard codecs.

Vertices are 0..n-1. Edges are stored as a sorted tuple of (u, v) pairs with
u < v, so two graphs compare equal iff they have the same order and edge set.
An optional label table maps vertices to display strings; it never takes part
in equality, hashing or encoding.
"""

from __future__ import annotations

import functools
import re
from dataclasses import dataclass, field


class GraphError(ValueError):
    """Raised for invalid graph construction or codec input."""


class Graph6Error(GraphError):
    """Malformed graph6 data. Carries the byte offset of the problem."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[Edge, ...]
    labels: dict[int, str] | None = field(default=None, compare=False)

    def __hash__(self):
        return hash((self.n, self.edges))

    def degree(self, v: int) -> int:
        return adjacency_masks(self)[v].bit_count()

    def neighbors(self, v: int) -> tuple[int, ...]:
        m = adjacency_masks(self)[v]
        return tuple(u for u in range(self.n) if m >> u & 1)

    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    def relabel(self, perm: tuple[int, ...]) -> "Graph":
        """Apply vertex map v -> perm[v]; labels follow their vertices."""
        edges = [(perm[u], perm[v]) for u, v in self.edges]
        labels = None
        if self.labels is not None:
            labels = {perm[v]: s for v, s in self.labels.items()}
        return build(self.n, edges, labels)


def build(n: int, edges, labels: dict[int, str] | None = None) -> Graph:
    """Normalize and validate an edge list into a Graph.

    Endpoints must lie in 0..n-1, loops are rejected, duplicates collapse.
    """
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    seen = set()
    for e in edges:
        u, v = e
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge {e} out of range for n={n}")
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        seen.add((u, v) if u < v else (v, u))
    if labels is not None:
        labels = dict(labels)
    return Graph(n, tuple(sorted(seen)), labels)


@functools.lru_cache(maxsize=4096)
def adjacency_masks(g: Graph) -> tuple[int, ...]:
    """Per-vertex neighbor bitmasks; cached since Graph is immutable."""
    adj = [0] * g.n
    for u, v in g.edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return tuple(adj)


def is_cubic(g: Graph) -> bool:
    return all(m.bit_count() == 3 for m in adjacency_masks(g))


@dataclass(frozen=True)
class Bipartition:
    side_a: frozenset[int]
    side_b: frozenset[int]


def bipartition(g: Graph) -> Bipartition | None:
    """2-color by BFS, component roots going to side A. None if odd cycle."""
    adj = adjacency_masks(g)
    color = [-1] * g.n
    for root in range(g.n):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = [root]
        while queue:
            v = queue.pop()
            m = adj[v]
            while m:
                u = (m & -m).bit_length() - 1
                m &= m - 1
                if color[u] == -1:
                    color[u] = 1 - color[v]
                    queue.append(u)
                elif color[u] == color[v]:
                    return None
    side_a = frozenset(v for v in range(g.n) if color[v] == 0)
    return Bipartition(side_a, frozenset(range(g.n)) - side_a)


def girth(g: Graph) -> int | None:
    """Length of a shortest cycle via BFS from every vertex; None if acyclic.

    A BFS from r sees a cycle when an edge joins two visited vertices; the
    cycle through r has length d[u] + d[v] + 1 for a non-tree edge (u, v).
    Taking the minimum over all roots is exact.
    """
    adj = adjacency_masks(g)
    best = None
    for root in range(g.n):
        dist = {root: 0}
        frontier = [root]
        while frontier:
            nxt = []
            for v in frontier:
                m = adj[v]
                while m:
                    u = (m & -m).bit_length() - 1
                    m &= m - 1
                    if u not in dist:
                        dist[u] = dist[v] + 1
                        nxt.append(u)
                    elif dist[u] >= dist[v]:
                        # Non-tree edge; bounds the shortest cycle through root.
                        cand = dist[u] + dist[v] + 1
                        if best is None or cand < best:
                            best = cand
            if best is not None and frontier and 2 * dist[frontier[0]] >= best:
                break
            frontier = nxt
    return best


# -- constructors ------------------------------------------------------------


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs >= 3 vertices, got {n}")
    return build(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return build(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def k33() -> Graph:
    return build(6, [(i, 3 + j) for i in range(3) for j in range(3)])


def lcf(jumps, repeats: int) -> Graph:
    """Cubic graph from LCF notation: a Hamiltonian cycle plus chords.

    The jump list is repeated `repeats` times around an n-cycle; vertex i
    gets a chord to (i + jumps[i mod len]) mod n. Every vertex must end up
    with degree exactly 3.
    """
    jumps = list(jumps)
    n = len(jumps) * repeats
    if n == 0 or n % 2 != 0:
        raise GraphError(f"LCF needs a positive even vertex count, got {n}")
    for j in jumps:
        if not (2 <= j % n <= n - 2):
            raise GraphError(f"LCF jump {j} out of range [2, n-2] for n={n}")
    edges = [(i, (i + 1) % n) for i in range(n)]
    for i in range(n):
        edges.append(tuple(sorted((i, (i + jumps[i % len(jumps)]) % n))))
    g = build(n, edges)
    if not is_cubic(g):
        raise GraphError("LCF chords collide: result is not cubic")
    return g


_LCF_RE = re.compile(r"^\[([0-9,\s+-]+)\]\^(\d+)$")


def parse_lcf(text: str) -> Graph:
    """Parse strings like "[5,-5]^7" into the corresponding LCF graph."""
    m = _LCF_RE.match(text.strip())
    if not m:
        raise GraphError(f"cannot parse LCF spec {text!r}")
    jumps = [int(t) for t in m.group(1).split(",")]
    return lcf(jumps, int(m.group(2)))


def gp(n: int, k: int) -> Graph:
    """Generalized Petersen graph: outer n-cycle 0..n-1, inner star polygon.

    Vertices n..2n-1 form the inner set; u_i ~ u_{i+1}, u_i ~ v_i,
    v_i ~ v_{i+k}. Requires 1 <= k < n/2.
    """
    if not (1 <= k and 2 * k < n):
        raise GraphError(f"gp({n}, {k}) needs 1 <= k < n/2")
    edges = []
    for i in range(n):
        edges.append((i, (i + 1) % n))
        edges.append((i, n + i))
        edges.append((n + i, n + (i + k) % n))
    return build(2 * n, edges)


def petersen() -> Graph:
    return gp(5, 2)


def prism() -> Graph:
    return gp(3, 1)


def heawood() -> Graph:
    return lcf([5, -5], 7)


def pappus() -> Graph:
    return lcf([5, 7, -7, 7, -7, -5], 3)


def moebius_kantor_graph() -> Graph:
    return gp(8, 3)


# -- graph6 codec ------------------------------------------------------------


def _g6_bytes_for_n(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, (n >> 12) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])
    raise GraphError(f"graph6 supports n <= 258047, got {n}")


def graph6_encode(g: Graph) -> bytes:
    """Encode as graph6: header bytes for n, then the upper triangle.

    Bits run column by column: (0,1), (0,2), (1,2), (0,3), ... with 1 for an
    edge, padded with zeros to a multiple of 6, each group emitted as
    value + 63.
    """
    n = g.n
    out = bytearray(_g6_bytes_for_n(n))
    present = set(g.edges)
    acc = 0
    nbits = 0
    for j in range(1, n):
        for i in range(j):
            acc = acc << 1 | ((i, j) in present)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = 0
                nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out)


def graph6_decode(data: bytes | str) -> Graph:
    """Decode one graph6 line. Labels are not part of the format."""
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.rstrip(b"\r\n")
    if data.startswith(b">>graph6<<"):
        data = data[10:]
    if not data:
        raise Graph6Error("empty graph6 input", 0)
    pos = 0
    if data[0] == 126:
        if len(data) >= 2 and data[1] == 126:
            raise Graph6Error("graph6 8-byte vertex counts not supported", 1)
        if len(data) < 4:
            raise Graph6Error("truncated graph6 vertex count", len(data))
        vals = []
        for pos in range(1, 4):
            b = data[pos]
            if not (63 <= b <= 126):
                raise Graph6Error(f"byte {b} outside graph6 range", pos)
            vals.append(b - 63)
        n = vals[0] << 12 | vals[1] << 6 | vals[2]
        if n <= 62:
            raise Graph6Error(f"non-minimal multibyte count {n}", 1)
        pos = 4
    else:
        b = data[0]
        if not (63 <= b <= 126):
            raise Graph6Error(f"byte {b} outside graph6 range", 0)
        n = b - 63
        pos = 1
    need = n * (n - 1) // 2
    body = data[pos:]
    if len(body) != (need + 5) // 6:
        raise Graph6Error(
            f"graph6 body for n={n} needs {(need + 5) // 6} bytes, got {len(body)}",
            pos,
        )
    bits = 0
    for off, b in enumerate(body):
        if not (63 <= b <= 126):
            raise Graph6Error(f"byte {b} outside graph6 range", pos + off)
        bits = bits << 6 | (b - 63)
    total = 6 * len(body)
    pad = total - need
    if pad and bits & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits", pos + len(body) - 1)
    edges = []
    idx = total - 1
    for j in range(1, n):
        for i in range(j):
            if bits >> idx & 1:
                edges.append((i, j))
            idx -= 1
    return build(n, edges)
