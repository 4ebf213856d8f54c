"""Perfect matchings, 2-factors and the cycle-count parity of cubic graphs.

In a cubic graph the 2-factors are exactly the complements of the perfect
matchings, so enumerating matchings enumerates 2-factors. A graph is pseudo
2-factor isomorphic when every 2-factor has the same parity of cycle count.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, GraphError, adjacency_masks, is_cubic

ALL_ODD = "AllOdd"
ALL_EVEN = "AllEven"
MIXED = "Mixed"
NO_TWO_FACTOR = "NoTwoFactor"


@dataclass(frozen=True)
class TwoFactorReport:
    matching_count: int
    cycle_counts: tuple[int, ...]  # sorted, one entry per 2-factor
    status: str


def enumerate_perfect_matchings(g: Graph) -> list[tuple[tuple[int, int], ...]]:
    """All perfect matchings, branching on the lowest unmatched vertex.

    The branch order (ascending neighbor index at the lowest open vertex)
    makes the output order deterministic and lexicographic.
    """
    adj = adjacency_masks(g)
    full = (1 << g.n) - 1
    out: list[tuple[tuple[int, int], ...]] = []
    acc: list[tuple[int, int]] = []

    def branch(covered: int):
        if covered == full:
            out.append(tuple(acc))
            return
        v = ((~covered) & -(~covered)).bit_length() - 1
        free = adj[v] & ~covered
        while free:
            u = (free & -free).bit_length() - 1
            free &= free - 1
            acc.append((v, u))
            branch(covered | 1 << v | 1 << u)
            acc.pop()

    if g.n % 2 == 0:
        branch(0)
    return out


def two_factors(g: Graph) -> list[tuple[tuple[int, int], ...]]:
    """Complements of the perfect matchings; requires a cubic graph."""
    if not is_cubic(g):
        raise GraphError("two_factors needs a cubic graph")
    out = []
    for matching in enumerate_perfect_matchings(g):
        gone = set(matching)
        out.append(tuple(e for e in g.edges if e not in gone))
    return out


def cycle_count(edges, g: Graph) -> int:
    """Number of cycles in a spanning 2-regular subgraph of g."""
    deg = [0] * g.n
    nbr = [[] for _ in range(g.n)]
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
        nbr[u].append(v)
        nbr[v].append(u)
    if any(d != 2 for d in deg):
        raise GraphError("edge set is not a spanning 2-regular subgraph")
    seen = [False] * g.n
    count = 0
    for start in range(g.n):
        if seen[start]:
            continue
        count += 1
        v = start
        while not seen[v]:
            seen[v] = True
            a, b = nbr[v]
            v = a if not seen[a] else b
    return count


def pseudo_2fi(g: Graph) -> TwoFactorReport:
    """Cycle-count parity report over every 2-factor of a cubic graph."""
    factors = two_factors(g)
    counts = tuple(sorted(cycle_count(f, g) for f in factors))
    if not counts:
        status = NO_TWO_FACTOR
    elif all(c % 2 == 1 for c in counts):
        status = ALL_ODD
    elif all(c % 2 == 0 for c in counts):
        status = ALL_EVEN
    else:
        status = MIXED
    return TwoFactorReport(len(counts), counts, status)
