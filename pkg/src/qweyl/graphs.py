"""Quasi-threshold graphs of Dyck words and their decreasing-forest structures.

Vertices are the D-labels ``1..n``. A decreasing forest is stored as a parent
map ``child -> parent`` with ``parent > child``; roots are the vertices
without a parent and each root is the maximum of its tree.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator

from .partitions import set_partitions
from .qpoly import ZERO, LaurentPoly
from .report import CheckReport
from .words import Word, _as_word, _require_dyck, height_profile, standard_factorize
from . import zpoly

__all__ = [
    "QuasiThresholdGraph",
    "ForestPartition",
    "ForestFamily",
    "build_graph",
    "complete_graph",
    "decreasing_forests",
    "enumerate_forest_partitions",
    "enumerate_forest_families",
    "forest_partition_weight",
    "forest_partition_poly",
    "qlah_family_weight",
    "forest_family_poly",
    "chromatic_polynomial",
    "chromatic_by_deletion_contraction",
    "broken_circuit_free",
    "enumerate_bcf_subgraphs",
    "bijection_check",
]

Edge = tuple[int, int]


@dataclass(frozen=True)
class QuasiThresholdGraph:
    n: int
    edges: frozenset[Edge]

    def __post_init__(self):
        for u, v in self.edges:
            if not (1 <= u < v <= self.n):
                raise ValueError(f"edge {(u, v)} must satisfy 1 <= u < v <= n")

    def adjacent(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def neighbours(self, v: int) -> set[int]:
        return {b if a == v else a for a, b in self.edges if v in (a, b)}

    def sorted_edges(self) -> list[Edge]:
        """Edges as ``(j, i)`` with ``j > i``, in lexicographic order."""
        return sorted((v, u) for u, v in self.edges)

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in sorted(self.edges)]}


def build_graph(w: Word | str) -> QuasiThresholdGraph:
    """``G_w``: ``(G_inner + dominating vertex) + G_rest``, labelled by D-index."""
    w = _as_word(w)
    _require_dyck(w)
    edges: set[Edge] = set()

    def rec(word: Word, offset: int) -> int:
        # returns the number of vertices, labels offset+1..offset+size
        if not word.letters:
            return 0
        f = standard_factorize(word)
        m_inner = rec(f.inner, offset)
        top = offset + m_inner + 1
        for v in range(offset + 1, top):
            edges.add((v, top))
        return m_inner + 1 + rec(f.rest, top)

    n = rec(w, 0)
    return QuasiThresholdGraph(n, frozenset(edges))


def complete_graph(n: int) -> QuasiThresholdGraph:
    return QuasiThresholdGraph(n, frozenset(combinations(range(1, n + 1), 2)))


@dataclass(frozen=True)
class ForestPartition:
    """A spanning decreasing forest, as a parent map over ``1..n``."""

    n: int
    parent: tuple[tuple[int, int], ...]  # sorted (child, parent) pairs

    @property
    def parent_map(self) -> dict[int, int]:
        return dict(self.parent)

    @property
    def roots(self) -> list[int]:
        kids = {c for c, _ in self.parent}
        return [v for v in range(1, self.n + 1) if v not in kids]

    @property
    def k(self) -> int:
        return self.n - len(self.parent)

    def edge_set(self) -> frozenset[Edge]:
        return frozenset((c, p) for c, p in self.parent)

    def components(self) -> list[tuple[int, list[tuple[int, int]]]]:
        comps: dict[int, list[tuple[int, int]]] = {r: [] for r in self.roots}
        pm = self.parent_map
        for c, p in self.parent:
            r = p
            while r in pm:
                r = pm[r]
            comps[r].append((c, p))
        return sorted(comps.items())

    def to_json(self) -> dict:
        return {
            "components": [
                {"root": r, "parent_pairs": [list(pp) for pp in pairs]}
                for r, pairs in self.components()
            ]
        }


def decreasing_forests(g: QuasiThresholdGraph, vertices: Iterable[int] | None = None) -> Iterator[dict[int, int]]:
    """All decreasing forests of ``g`` spanning ``vertices`` (default: all).

    Vertices are inserted in increasing order; each new vertex adopts as
    children any subset of the current roots it is adjacent to.
    """
    verts = sorted(range(1, g.n + 1) if vertices is None else vertices)

    def rec(idx: int, roots: list[int], parent: dict[int, int]):
        if idx == len(verts):
            yield dict(parent)
            return
        v = verts[idx]
        cand = [r for r in roots if g.adjacent(r, v)]
        for size in range(len(cand) + 1):
            for kids in combinations(cand, size):
                for c in kids:
                    parent[c] = v
                new_roots = [r for r in roots if r not in kids] + [v]
                yield from rec(idx + 1, new_roots, parent)
                for c in kids:
                    del parent[c]

    return rec(0, [], {})


def enumerate_forest_partitions(g: QuasiThresholdGraph, k: int) -> list[ForestPartition]:
    """``F(w, k)``: spanning decreasing forests of ``g`` with ``k`` components."""
    out = []
    for parent in decreasing_forests(g):
        if g.n - len(parent) == k:
            out.append(ForestPartition(g.n, tuple(sorted(parent.items()))))
    return out


def _component_vertex_sets(vertices: Iterable[int], edges: Iterable[Edge]) -> list[set[int]]:
    comp = {v: {v} for v in vertices}
    for u, v in edges:
        if u in comp and v in comp and comp[u] is not comp[v]:
            merged = comp[u] | comp[v]
            for w in merged:
                comp[w] = merged
    seen, out = set(), []
    for v, s in comp.items():
        if id(s) not in seen:
            seen.add(id(s))
            out.append(s)
    return out


@lru_cache(maxsize=256)
def _q_star_sets(g: QuasiThresholdGraph) -> tuple[frozenset[int], ...]:
    out = []
    for i in range(1, g.n + 1):
        prefix_edges = [(u, v) for u, v in g.edges if v <= i]
        q_i = next(s for s in _component_vertex_sets(range(1, i + 1), prefix_edges) if i in s)
        out.append(frozenset(q_i - {i}))
    return tuple(out)


def forest_partition_weight(g: QuasiThresholdGraph, alpha: ForestPartition) -> int:
    """``sum_i t_i``: components of ``alpha`` restricted to ``Q_i`` minus ``i``.

    ``Q_i`` is the component containing ``i`` of the subgraph of ``g``
    induced on ``{1..i}``.
    """
    total = 0
    fedges = alpha.edge_set()
    for star in _q_star_sets(g):
        inside = sum(1 for c, p in fedges if c in star and p in star)
        total += len(star) - inside
    return total


def forest_partition_poly(w: Word | str, k: int) -> LaurentPoly:
    """``sum q^(-wt)`` over ``F(w, k)``."""
    g = build_graph(w)
    total = ZERO
    for alpha in enumerate_forest_partitions(g, k):
        total = total + LaurentPoly.monomial(-forest_partition_weight(g, alpha))
    return total


@dataclass(frozen=True)
class ForestFamily:
    """``k`` vertex-disjoint decreasing forests covering ``1..n``.

    ``groups`` holds one sorted ``(child, parent)`` tuple and one vertex tuple
    per forest; forests are ordered by their least root.
    """

    n: int
    groups: tuple[tuple[tuple[int, ...], tuple[tuple[int, int], ...]], ...]

    @property
    def k(self) -> int:
        return len(self.groups)

    def forests(self) -> list[tuple[frozenset[int], dict[int, int]]]:
        return [(frozenset(vs), dict(pp)) for vs, pp in self.groups]

    def to_json(self) -> dict:
        return {
            "forests": [
                {"vertices": list(vs), "parent_pairs": [list(p) for p in pp]}
                for vs, pp in self.groups
            ]
        }


def _least_root(vertices: Iterable[int], parent: dict[int, int]) -> int:
    return min(v for v in vertices if v not in parent)


def _make_family(n: int, forests: list[tuple[Iterable[int], dict[int, int]]]) -> ForestFamily:
    groups = sorted(
        ((tuple(sorted(vs)), tuple(sorted(pm.items()))) for vs, pm in forests),
        key=lambda grp: _least_root(grp[0], dict(grp[1])),
    )
    return ForestFamily(n, tuple(groups))


def enumerate_forest_families(g: QuasiThresholdGraph, k: int) -> list[ForestFamily]:
    """``H(w, k)``: unordered partitions of the vertices into ``k`` decreasing forests."""
    from itertools import product

    out = []
    for blocks in set_partitions(g.n, k):
        per_block = [list(decreasing_forests(g, b)) for b in blocks]
        for choice in product(*per_block):
            out.append(_make_family(g.n, list(zip(blocks, choice))))
    out.sort(key=lambda fam: fam.groups)
    return out


def _ordered(forests: list[tuple[frozenset[int], dict[int, int]]]):
    return sorted(forests, key=lambda f: _least_root(*f))


def qlah_family_weight(n: int, alpha: ForestFamily) -> int:
    """Weight ``sum_m r_m + s_m`` of a forest family of ``K_n``.

    The family is dismantled from vertex ``n`` down to ``1``. Removing the
    largest vertex ``m`` detaches its subtrees ``T*(m)``; they become a
    forest of their own unless ``m`` was alone in its forest, in which case
    they replace it. This is the inverse of the insertion steps that build
    the family, so the state after removing ``m`` is the family on
    ``K_(m-1)`` referred to by the ``r_m``/``s_m`` rules.
    """
    if alpha.n != n:
        raise ValueError("family size does not match n")
    for vs, pp in alpha.groups:
        for c, p in pp:
            if not c < p:
                raise ValueError("not a decreasing forest")
    state = [(set(vs), dict(pm)) for vs, pm in alpha.forests()]
    total = 0
    for m in range(n, 0, -1):
        state = _ordered(state)
        d = len(state)
        j = next(idx for idx, (vs, _) in enumerate(state, start=1) if m in vs)
        vs, pm = state[j - 1]
        children = {c for c, p in pm.items() if p == m}
        # vertices of T(m): everything whose root chain reaches m
        tree = {m}
        for v in vs:
            u = v
            while u in pm:
                u = pm[u]
                if u == m:
                    tree.add(v)
                    break
        alone = tree == vs
        single = not children
        sub_vs = tree - {m}
        sub_pm = {c: p for c, p in pm.items() if c in sub_vs and p != m}
        rest_vs = vs - tree
        rest_pm = {c: p for c, p in pm.items() if c in rest_vs}
        others = [f for idx, f in enumerate(state, start=1) if idx != j]
        if alone:
            r = d - 1
            if single:
                nxt = others
                s = d - 1
            else:
                nxt = others + [(sub_vs, sub_pm)]
                s = _index_of(nxt, sub_vs)
        else:
            r = j
            if single:
                nxt = others + [(rest_vs, rest_pm)]
                s = d
            else:
                nxt = others + [(rest_vs, rest_pm), (sub_vs, sub_pm)]
                s = _index_of(nxt, sub_vs)
        total += r + s
        state = nxt
    return total


def _index_of(forests, vertex_set) -> int:
    for idx, (vs, _) in enumerate(_ordered(forests), start=1):
        if vs == vertex_set:
            return idx
    raise AssertionError("forest not found")


def forest_family_poly(n: int, k: int) -> LaurentPoly:
    """``sum q^(-wt)`` over ``H(n, k)`` of the complete graph."""
    total = ZERO
    for fam in enumerate_forest_families(complete_graph(n), k):
        total = total + LaurentPoly.monomial(-qlah_family_weight(n, fam))
    return total


def chromatic_polynomial(w: Word | str) -> tuple[int, ...]:
    """``prod_j (z - h_j)`` over east-step heights, as coefficients in ``z``."""
    w = _as_word(w)
    _require_dyck(w)
    return zpoly.from_roots(height_profile(w).east_heights)


def chromatic_by_deletion_contraction(g: QuasiThresholdGraph) -> tuple[int, ...]:
    """Chromatic polynomial of an arbitrary small graph; independent oracle."""

    def rec(vertices: frozenset[int], edges: frozenset[Edge]) -> tuple[int, ...]:
        if not edges:
            return zpoly.monomial(len(vertices))
        e = min(edges)
        u, v = e
        deleted = edges - {e}
        contracted = set()
        for a, b in deleted:
            a = u if a == v else a
            b = u if b == v else b
            if a != b:
                contracted.add((min(a, b), max(a, b)))
        return zpoly.sub(rec(vertices, deleted), rec(vertices - {v}, frozenset(contracted)))

    return rec(frozenset(range(1, g.n + 1)), g.edges)


def broken_circuit_free(g: QuasiThresholdGraph, subset: Iterable[Edge]) -> bool:
    """True if ``subset`` (edges as ``(i, j)``, ``i < j``) contains no broken circuit.

    Edges are ordered lexicographically as ``(j, i)`` with ``j > i``. The set
    contains a broken circuit exactly when some edge ``e`` of ``g`` has its
    endpoints joined by a path of subset edges all smaller than ``e``.
    """
    key = lambda e: (e[1], e[0])  # noqa: E731
    chosen = sorted(subset, key=key)
    for e in g.edges:
        smaller = [f for f in chosen if key(f) < key(e)]
        comps = _component_vertex_sets(range(1, g.n + 1), smaller)
        if any(e[0] in s and e[1] in s for s in comps):
            return False
    return True


def enumerate_bcf_subgraphs(g: QuasiThresholdGraph, num_edges: int) -> list[frozenset[Edge]]:
    out = []
    for subset in combinations(sorted(g.edges, key=lambda e: (e[1], e[0])), num_edges):
        if broken_circuit_free(g, subset):
            out.append(frozenset(subset))
    return out


def bijection_check(w: Word | str, ks: Iterable[int] | None = None) -> CheckReport:
    """Edge sets of ``F(w, k)`` equal the broken-circuit-free sets with ``n - k`` edges."""
    g = build_graph(w)
    rep = CheckReport("bcf-bijection")
    for k in ks if ks is not None else range(1, g.n + 1):
        forests = {a.edge_set() for a in enumerate_forest_partitions(g, k)}
        bcf = set(enumerate_bcf_subgraphs(g, g.n - k))
        rep.record(f"{_as_word(w)} k={k}", forests == bcf, f"{len(forests)} forests, {len(bcf)} bcf")
    return rep
