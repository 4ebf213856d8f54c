"""Small permutation groups as tuples, with closure, structure and isomorphism tests.

A permutation of degree n is a tuple p of length n with p[i] = image of i.
Groups are kept as explicit element sets; everything here targets orders in
the hundreds, not the millions.
"""

from __future__ import annotations

import functools
import itertools
import math
from collections import Counter

Perm = tuple[int, ...]

CLOSURE_LIMIT = 10**6


class GroupError(ValueError):
    """Raised for invalid group-theoretic input or blown guards."""


def identity(n: int) -> Perm:
    return tuple(range(n))


def compose(a: Perm, b: Perm) -> Perm:
    """Permutation a after b: (a*b)[i] = a[b[i]]."""
    return tuple(a[x] for x in b)


def inverse(a: Perm) -> Perm:
    inv = [0] * len(a)
    for i, x in enumerate(a):
        inv[x] = i
    return tuple(inv)


def cycles(a: Perm) -> list[tuple[int, ...]]:
    """Cycle decomposition, fixed points included, each cycle led by its minimum."""
    seen = [False] * len(a)
    out = []
    for start in range(len(a)):
        if seen[start]:
            continue
        cyc = [start]
        seen[start] = True
        x = a[start]
        while x != start:
            seen[x] = True
            cyc.append(x)
            x = a[x]
        out.append(tuple(cyc))
    return out


def cycle_type(a: Perm) -> tuple[int, ...]:
    return tuple(sorted(len(c) for c in cycles(a)))


def perm_order(a: Perm) -> int:
    return math.lcm(*(len(c) for c in cycles(a))) if a else 1


def closure(generators, degree: int, limit: int = CLOSURE_LIMIT) -> frozenset[Perm]:
    """Breadth-first product closure of the generators."""
    gens = [tuple(g) for g in generators]
    for g in gens:
        if sorted(g) != list(range(degree)):
            raise GroupError(f"not a permutation of degree {degree}: {g}")
    elems = {identity(degree)}
    frontier = list(elems)
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = compose(x, g)
                if y not in elems:
                    elems.add(y)
                    nxt.append(y)
                    if len(elems) > limit:
                        raise GroupError(f"closure exceeded {limit} elements")
        frontier = nxt
    return frozenset(elems)


class PermGroup:
    """A finite permutation group, materialized lazily from its generators."""

    def __init__(self, degree: int, generators=()):
        self.degree = degree
        self.generators = tuple(dict.fromkeys(tuple(g) for g in generators))
        self._elements: frozenset[Perm] | None = None

    @classmethod
    def from_elements(cls, degree: int, elements) -> "PermGroup":
        g = cls(degree, tuple(elements))
        g._elements = frozenset(tuple(e) for e in elements) | {identity(degree)}
        return g

    @property
    def elements(self) -> frozenset[Perm]:
        if self._elements is None:
            self._elements = closure(self.generators, self.degree)
        return self._elements

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, p) -> bool:
        return tuple(p) in self.elements

    def __iter__(self):
        return iter(sorted(self.elements))

    def __repr__(self):
        return f"PermGroup(degree={self.degree}, order={self.order})"


def is_subgroup(sub: PermGroup, group: PermGroup) -> bool:
    return sub.degree == group.degree and sub.elements <= group.elements


def is_normal(sub: PermGroup, group: PermGroup) -> bool:
    """Check closure of sub under conjugation by the group's generators.

    Conjugation by generators extends multiplicatively, so this decides
    normality under the whole group.
    """
    if not is_subgroup(sub, group):
        raise GroupError("is_normal needs sub <= group")
    k = sub.elements
    for g in group.generators:
        gi = inverse(g)
        if any(compose(g, compose(x, gi)) not in k for x in k):
            return False
    return True


def _image(p: Perm, obj):
    if isinstance(obj, int):
        return p[obj]
    return frozenset(p[x] for x in obj)


def orbit(group: PermGroup, obj) -> frozenset:
    """Orbit of a point (int) or a setwise-moved frozenset of points."""
    seen = {obj if isinstance(obj, int) else frozenset(obj)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for x in frontier:
            for g in group.generators:
                y = _image(g, x)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(seen)


def stabilizer(group: PermGroup, obj) -> PermGroup:
    """Elements fixing a point, or fixing a vertex set setwise."""
    key = obj if isinstance(obj, int) else frozenset(obj)
    elems = [p for p in group.elements if _image(p, key) == key]
    return PermGroup.from_elements(group.degree, elems)


def order_profile(group: PermGroup) -> dict[int, int]:
    return dict(Counter(perm_order(p) for p in group.elements))


def is_abelian(group: PermGroup) -> bool:
    gens = group.generators
    return all(
        compose(a, b) == compose(b, a) for a, b in itertools.combinations(gens, 2)
    )


def edge_action(p: Perm, edges) -> Perm:
    """Project a vertex permutation to its action on an indexed edge list.

    Raises GroupError if the permutation does not map the edge set to itself.
    """
    index = {}
    for i, (u, v) in enumerate(edges):
        index[(u, v) if u < v else (v, u)] = i
    out = []
    for u, v in edges:
        a, b = p[u], p[v]
        key = (a, b) if a < b else (b, a)
        if key not in index:
            raise GroupError(f"edge set not invariant: {(u, v)} -> {key}")
        out.append(index[key])
    return tuple(out)


def _generating_sequence(group: PermGroup) -> list[Perm]:
    """Greedy short generating sequence, deterministic for a given group."""
    elems = sorted(group.elements, key=lambda p: (-perm_order(p), p))
    gens: list[Perm] = []
    have = frozenset({identity(group.degree)})
    for x in elems:
        if x not in have:
            gens.append(x)
            have = closure(gens, group.degree)
            if len(have) == group.order:
                break
    return gens


def _extends_to_isomorphism(a: PermGroup, gens: list[Perm], imgs: list[Perm],
                            b: PermGroup) -> bool:
    """Check that gens -> imgs extends to a bijective homomorphism a -> b."""
    phi = {identity(a.degree): identity(b.degree)}
    frontier = list(phi)
    while frontier:
        nxt = []
        for x in frontier:
            fx = phi[x]
            for g, h in zip(gens, imgs):
                y = compose(x, g)
                fy = compose(fx, h)
                if y in phi:
                    if phi[y] != fy:
                        return False
                else:
                    phi[y] = fy
                    nxt.append(y)
        frontier = nxt
    return len(phi) == a.order and len(set(phi.values())) == b.order


def groups_isomorphic(a: PermGroup, b: PermGroup) -> bool:
    """Abstract isomorphism test by backtracking over generator images."""
    if a.order > 200 or b.order > 200:
        raise GroupError("groups_isomorphic guards at order 200")
    if a.order != b.order:
        return False
    if order_profile(a) != order_profile(b):
        return False
    gens = _generating_sequence(a)
    if not gens:
        return True
    by_order: dict[int, list[Perm]] = {}
    for p in sorted(b.elements):
        by_order.setdefault(perm_order(p), []).append(p)
    sub_sizes = []
    for i in range(len(gens)):
        sub_sizes.append(len(closure(gens[: i + 1], a.degree)))

    def assign(i: int, imgs: list[Perm]) -> bool:
        if i == len(gens):
            return _extends_to_isomorphism(a, gens, imgs, b)
        for cand in by_order.get(perm_order(gens[i]), []):
            trial = imgs + [cand]
            if len(closure(trial, b.degree, limit=b.order + 1)) != sub_sizes[i]:
                continue
            if assign(i + 1, trial):
                return True
        return False

    return assign(0, [])


def semidirect_certificate(group: PermGroup, k: PermGroup,
                           h: PermGroup) -> tuple[bool, dict]:
    """Internal semidirect product test: K normal, K meet H trivial, |K||H|=|G|."""
    report = {
        "k_is_subgroup": is_subgroup(k, group),
        "h_is_subgroup": is_subgroup(h, group),
        "orders": {"group": group.order, "k": k.order, "h": h.order},
    }
    report["k_normal"] = (
        report["k_is_subgroup"] and is_normal(k, group)
    )
    report["intersection_trivial"] = (
        k.elements & h.elements == {identity(group.degree)}
    )
    report["order_product_matches"] = k.order * h.order == group.order
    ok = all(
        report[key]
        for key in ("k_is_subgroup", "h_is_subgroup", "k_normal",
                    "intersection_trivial", "order_product_matches")
    )
    return ok, report


# -- model groups ------------------------------------------------------------


def cyclic(n: int) -> PermGroup:
    return PermGroup(n, [tuple((i + 1) % n for i in range(n))])


def dihedral(n: int) -> PermGroup:
    """Symmetries of an n-gon on vertices 0..n-1, order 2n."""
    if n < 3:
        raise GroupError("dihedral(n) needs n >= 3")
    rot = tuple((i + 1) % n for i in range(n))
    ref = tuple((n - i) % n for i in range(n))
    return PermGroup(n, [rot, ref])


def direct_product(a: PermGroup, b: PermGroup) -> PermGroup:
    """Product acting on the disjoint union of the two domains."""
    da, db = a.degree, b.degree
    gens = [g + tuple(range(da, da + db)) for g in a.generators]
    gens += [identity(da) + tuple(x + da for x in g) for g in b.generators]
    return PermGroup(da + db, gens)


@functools.cache
def z3z3() -> PermGroup:
    return direct_product(cyclic(3), cyclic(3))


@functools.cache
def d4xz2() -> PermGroup:
    return direct_product(dihedral(4), cyclic(2))


@functools.cache
def z9() -> PermGroup:
    return cyclic(9)
