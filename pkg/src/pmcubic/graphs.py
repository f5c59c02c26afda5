"""Brute-force census of labeled cubic planar graphs and their perfect matchings.

Graphs are generated directly as edge sets: vertices are completed in
increasing order, and when vertex ``v`` is reached every smaller vertex is
already saturated, so its missing neighbours are chosen at once among larger
vertices.  Every labeled simple cubic graph comes out exactly once, including
disconnected ones.

Planarity is decided by networkx; :func:`is_planar_bruteforce` searches all
rotation systems and is used to cross-check it on small graphs.
"""

from __future__ import annotations

import csv
import io
import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Iterator

import networkx as nx

MAX_N = 8
ALL = "all"
CONNECTED = "connected"
BRIDGELESS = "bridgeless"
FILTERS = (ALL, CONNECTED, BRIDGELESS)


class GraphUsageError(ValueError):
    pass


@dataclass(frozen=True)
class LabeledGraph:
    """Simple graph on ``{1..n}``; edges are sorted pairs ``(u, v)`` with ``u < v``."""

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        for u, v in self.edges:
            if not (1 <= u < v <= self.n):
                raise GraphUsageError(f"bad edge {(u, v)} for n={self.n}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "LabeledGraph":
        es = [tuple(sorted(e)) for e in edges]
        if len(set(es)) != len(es):
            raise GraphUsageError("repeated edge")
        if any(u == v for u, v in es):
            raise GraphUsageError("loop")
        return cls(n, frozenset(es))

    def degrees(self) -> list[int]:
        deg = [0] * (self.n + 1)
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg[1:]

    def adjacency(self) -> dict[int, list[int]]:
        adj = {v: [] for v in range(1, self.n + 1)}
        for u, v in sorted(self.edges):
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(1, self.n + 1))
        g.add_edges_from(self.edges)
        return g

    def to_edge_list(self) -> str:
        lines = [f"{self.n} {len(self.edges)}"]
        lines += [f"{u} {v}" for u, v in sorted(self.edges)]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_edge_list(cls, text: str) -> "LabeledGraph":
        rows = [line.split() for line in text.strip().splitlines()]
        n, m = map(int, rows[0])
        edges = [tuple(map(int, r)) for r in rows[1:]]
        if len(edges) != m:
            raise GraphUsageError(f"header says {m} edges, found {len(edges)}")
        return cls.from_edges(n, edges)


def complete_graph(n: int) -> LabeledGraph:
    return LabeledGraph.from_edges(n, itertools.combinations(range(1, n + 1), 2))


def complete_bipartite_33() -> LabeledGraph:
    return LabeledGraph.from_edges(6, [(u, v) for u in (1, 2, 3) for v in (4, 5, 6)])


def prism() -> LabeledGraph:
    return LabeledGraph.from_edges(
        6, [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6), (1, 4), (2, 5), (3, 6)]
    )


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------


def _extend(n, deg, edges, v) -> Iterator[list[tuple[int, int]]]:
    while v < n and deg[v] == 3:
        v += 1
    if v == n:
        yield list(edges)
        return
    need = 3 - deg[v]
    nbrs = {b for a, b in edges if a == v} | {a for a, b in edges if b == v}
    cands = [w for w in range(v + 1, n) if deg[w] < 3 and w not in nbrs]
    for chosen in itertools.combinations(cands, need):
        deg[v] = 3
        for w in chosen:
            deg[w] += 1
            edges.append((v, w))
        yield from _extend(n, deg, edges, v + 1)
        for w in chosen:
            deg[w] -= 1
            edges.pop()
        deg[v] = 3 - need


def _check_n(n: int, allow_large: bool) -> None:
    cap = 10 if allow_large else MAX_N
    if n % 2 or not 4 <= n <= cap:
        raise GraphUsageError(f"n must be even with 4 <= n <= {cap}")


def enumerate_labeled_cubic(n: int, allow_large: bool = False, first: tuple | None = None) -> Iterator[LabeledGraph]:
    """Every labeled simple cubic graph on ``{1..n}``, planar or not.

    ``first`` restricts to graphs in which vertex 1 has exactly the given
    neighbours (0-based), which is how the work is split between processes.
    """
    _check_n(n, allow_large)
    deg = [0] * n
    heads = [first] if first is not None else itertools.combinations(range(1, n), 3)
    for head in heads:
        deg[0] = 3
        edges = []
        for w in head:
            deg[w] += 1
            edges.append((0, w))
        for es in _extend(n, deg, edges, 1):
            yield LabeledGraph(n, frozenset((a + 1, b + 1) for a, b in es))
        for w in head:
            deg[w] -= 1
        deg[0] = 0


def enumerate_labeled_cubic_planar(n: int, allow_large: bool = False) -> Iterator[LabeledGraph]:
    return (g for g in enumerate_labeled_cubic(n, allow_large) if is_planar(g))


# ---------------------------------------------------------------------------
# Planarity
# ---------------------------------------------------------------------------


def is_planar(g: LabeledGraph) -> bool:
    m = len(g.edges)
    if g.n >= 3 and m > 3 * g.n - 6:
        return False
    planar, _ = nx.check_planarity(g.to_networkx())
    return planar


def _components(g: LabeledGraph) -> int:
    return nx.number_connected_components(g.to_networkx())


def is_planar_bruteforce(g: LabeledGraph) -> bool:
    """Search every rotation system for one of genus zero.

    Darts are (u, v) for each edge direction; a rotation system fixes a cyclic
    order of neighbours at each vertex, faces are orbits of
    ``(u, v) -> (v, next neighbour of v after u)``, and the embedding is planar
    when ``V - E + F = 2`` per component.  Isolated vertices count as
    components with one face each, which keeps the formula uniform.
    """
    adj = g.adjacency()
    verts = list(adj)
    target = 2 * _components(g)
    m = len(g.edges)
    darts = [(u, v) for u in verts for v in adj[u]]
    isolated = sum(1 for v in verts if not adj[v])

    def orders(v):
        nb = adj[v]
        if len(nb) <= 2:
            return [nb]
        return [[nb[0], *p] for p in itertools.permutations(nb[1:])]

    for rot in itertools.product(*(orders(v) for v in verts)):
        nxt = {}
        for v, cyc in zip(verts, rot):
            for i, w in enumerate(cyc):
                nxt[(v, w)] = cyc[(i + 1) % len(cyc)]
        seen = set()
        faces = isolated
        for d in darts:
            if d in seen:
                continue
            faces += 1
            while d not in seen:
                seen.add(d)
                u, v = d
                d = (v, nxt[(v, u)])
        if g.n - m + faces == target:
            return True
    return False


# ---------------------------------------------------------------------------
# Matchings and census
# ---------------------------------------------------------------------------


def count_perfect_matchings_graph(g: LabeledGraph) -> int:
    if g.n % 2:
        raise GraphUsageError("odd number of vertices")
    adj = g.adjacency()
    used = [False] * (g.n + 1)

    def go(v):
        while v <= g.n and used[v]:
            v += 1
        if v > g.n:
            return 1
        used[v] = True
        total = 0
        for w in adj[v]:
            if not used[w]:
                used[w] = True
                total += go(v + 1)
                used[w] = False
        used[v] = False
        return total

    return go(1)


def passes(g: LabeledGraph, filter: str) -> bool:
    if filter == ALL:
        return True
    h = g.to_networkx()
    if not nx.is_connected(h):
        return False
    if filter == CONNECTED:
        return True
    if filter == BRIDGELESS:
        return not nx.has_bridges(h)
    raise GraphUsageError(f"unknown filter {filter!r}")


def _census_part(args) -> dict[str, int]:
    n, first, allow_large = args
    out = dict.fromkeys(FILTERS, 0)
    for g in enumerate_labeled_cubic(n, allow_large, first):
        if not is_planar(g):
            continue
        k = count_perfect_matchings_graph(g)
        for f in FILTERS:
            if passes(g, f):
                out[f] += k
    return out


def labeled_census_all(n: int, workers: int = 1, allow_large: bool = False) -> dict[str, int]:
    """Matched-graph totals for every filter at once."""
    _check_n(n, allow_large)
    jobs = [(n, head, allow_large) for head in itertools.combinations(range(1, n), 3)]
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            parts = list(pool.map(_census_part, jobs))
    else:
        parts = [_census_part(j) for j in jobs]
    return {f: sum(p[f] for p in parts) for f in FILTERS}


def labeled_census(n: int, filter: str = ALL, workers: int = 1) -> int:
    if filter not in FILTERS:
        raise GraphUsageError(f"unknown filter {filter!r}")
    return labeled_census_all(n, workers)[filter]


def disconnected_gap(n4_connected: int = 3) -> int:
    """Matched graphs on 8 vertices made of two K4's: split count times 3 * 3."""
    return math.comb(8, 4) // 2 * n4_connected * n4_connected


def census_csv(rows: Iterable[tuple[int, int, int, int]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "all", "connected", "bridgeless"])
    w.writerows(rows)
    return buf.getvalue()
