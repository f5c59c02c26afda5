"""Rooted planar maps as rotation systems, and their exhaustive enumeration.

Darts are ``0 .. 2E-1`` and the edge involution is implicit:
``alpha(d) = d ^ 1``, so edge ``i`` owns darts ``2i`` and ``2i + 1``.
``sigma[d]`` is the next dart counterclockwise around the vertex of ``d``.
Faces are the cycles of ``phi = sigma o alpha``; the face containing a dart
lies on its right.

Enumeration labels darts canonically (breadth first from the root, see
:func:`canonical`) while building them, so every rooted map is produced
exactly once without any isomorphism test.  Planarity is enforced on the
fly: closing every open vertex of a partial map at its gap corner gives a
map whose Euler characteristic can only drop as the construction proceeds.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_CUBIC_SIZE = 4

ALL = "all"
HAS_BRIDGE = "has_bridge"
BRIDGELESS = "bridgeless"
THREE_CONNECTED = "three_connected"


class UsageError(ValueError):
    pass


def alpha(d: int) -> int:
    return d ^ 1


def _cycles(perm: Sequence[int]) -> list[list[int]]:
    seen = [False] * len(perm)
    out = []
    for s in range(len(perm)):
        if seen[s]:
            continue
        cyc = []
        d = s
        while not seen[d]:
            seen[d] = True
            cyc.append(d)
            d = perm[d]
        out.append(cyc)
    return out


@dataclass(frozen=True)
class RootedMap:
    sigma: tuple[int, ...]
    root: int = 0

    def __post_init__(self):
        n = len(self.sigma)
        if n == 0 or n % 2:
            raise ValueError("a map needs an even, positive number of darts")
        if sorted(self.sigma) != list(range(n)):
            raise ValueError("sigma is not a permutation")
        if not 0 <= self.root < n:
            raise ValueError("root dart out of range")

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], root: int = 0) -> "RootedMap":
        cycles = [list(c) for c in cycles]
        n = sum(len(c) for c in cycles)
        sigma = [-1] * n
        for c in cycles:
            for i, d in enumerate(c):
                sigma[d] = c[(i + 1) % len(c)]
        return cls(tuple(sigma), root)

    @property
    def num_darts(self) -> int:
        return len(self.sigma)

    @property
    def num_edges(self) -> int:
        return len(self.sigma) // 2

    def phi(self, d: int) -> int:
        return self.sigma[d ^ 1]

    def vertices(self) -> list[list[int]]:
        return _cycles(self.sigma)

    def faces(self) -> list[list[int]]:
        return _cycles([self.sigma[d ^ 1] for d in range(len(self.sigma))])

    def vertex_of(self) -> list[int]:
        """Vertex index of every dart (indices follow :meth:`vertices`)."""
        owner = [0] * len(self.sigma)
        for i, cyc in enumerate(self.vertices()):
            for d in cyc:
                owner[d] = i
        return owner

    def face_of(self) -> list[int]:
        owner = [0] * len(self.sigma)
        for i, cyc in enumerate(self.faces()):
            for d in cyc:
                owner[d] = i
        return owner

    def degrees(self) -> list[int]:
        return [len(c) for c in self.vertices()]

    def is_connected(self) -> bool:
        n = len(self.sigma)
        seen = {self.root}
        stack = [self.root]
        while stack:
            d = stack.pop()
            for e in (d ^ 1, self.sigma[d]):
                if e not in seen:
                    seen.add(e)
                    stack.append(e)
        return len(seen) == n

    def euler_characteristic(self) -> int:
        return len(self.vertices()) - self.num_edges + len(self.faces())

    def is_planar(self) -> bool:
        return self.is_connected() and self.euler_characteristic() == 2

    def relabel(self, new_of_old: Sequence[int]) -> "RootedMap":
        """Rename darts; the relabeling must respect the edge pairing."""
        n = len(self.sigma)
        sigma = [0] * n
        for d in range(n):
            sigma[new_of_old[d]] = new_of_old[self.sigma[d]]
        return RootedMap(tuple(sigma), new_of_old[self.root])

    def canonical_labels(self) -> list[int]:
        """Breadth-first relabeling from the root: root -> 0, alpha(root) -> 1,
        then darts in label order hand out fresh edge labels to unseen
        sigma-successors."""
        n = len(self.sigma)
        label = [-1] * n
        order = [self.root, self.root ^ 1]
        label[self.root], label[self.root ^ 1] = 0, 1
        i = 0
        while i < len(order):
            s = self.sigma[order[i]]
            if label[s] < 0:
                k = len(order)
                label[s], label[s ^ 1] = k, k + 1
                order.extend((s, s ^ 1))
            i += 1
        if len(order) != n:
            raise ValueError("map is not connected")
        return label

    def canonical(self) -> "RootedMap":
        return self.relabel(self.canonical_labels())

    def rerooted(self, root: int) -> "RootedMap":
        return RootedMap(self.sigma, root)

    def to_json(self, matching: Iterable[int] | None = None, red: Iterable[int] | None = None) -> dict:
        out = {"darts": self.num_darts, "sigma": self.vertices(), "root": self.root}
        if matching is not None:
            out["matching"] = sorted(matching)
        if red is not None:
            out["red"] = sorted(red)
        return out

    @classmethod
    def from_json(cls, data) -> "RootedMap":
        if isinstance(data, str):
            data = json.loads(data)
        m = cls.from_cycles(data["sigma"], data.get("root", 0))
        if m.num_darts != data["darts"]:
            raise ValueError("dart count does not match sigma")
        return m


# ---------------------------------------------------------------------------
# Exhaustive generation
# ---------------------------------------------------------------------------


class _Builder:
    """Partial canonical map under construction.

    ``sig[d] == -1`` means sigma(d) is still open.  Every labeled dart lies
    on a vertex that is either complete (a sigma-cycle) or open (a sigma-path
    from a head with no predecessor to a tail with no successor).
    """

    __slots__ = ("total", "degrees", "maxdeg", "sig", "inv", "nlab")

    def __init__(self, total: int, degrees: frozenset[int]):
        self.total = total
        self.degrees = degrees
        self.maxdeg = max(degrees)
        self.sig = [-1] * total
        self.inv = [-1] * total
        self.nlab = 2

    def copy(self) -> "_Builder":
        b = _Builder.__new__(_Builder)
        b.total, b.degrees, b.maxdeg = self.total, self.degrees, self.maxdeg
        b.sig, b.inv, b.nlab = self.sig[:], self.inv[:], self.nlab
        return b

    def _head(self, d: int) -> tuple[int, int]:
        """Head of the open path ending at tail ``d``, and the path length."""
        h, k = d, 1
        while self.inv[h] >= 0:
            h = self.inv[h]
            k += 1
        return h, k

    def _planar(self) -> bool:
        nl = self.nlab
        sig = self.sig
        closed = sig[:nl]
        for d in range(nl):
            if sig[d] < 0:
                closed[d] = self._head(d)[0]
        vertices = 0
        seen = [False] * nl
        for s in range(nl):
            if not seen[s]:
                vertices += 1
                d = s
                while not seen[d]:
                    seen[d] = True
                    d = closed[d]
        faces = 0
        seen = [False] * nl
        for s in range(nl):
            if not seen[s]:
                faces += 1
                d = s
                while not seen[d]:
                    seen[d] = True
                    d = closed[d ^ 1]
        return vertices - nl // 2 + faces == 2

    def choices(self, d: int) -> list[int]:
        """Admissible values for sigma(d); ``-2`` stands for a fresh edge."""
        sig, inv = self.sig, self.inv
        h, k = self._head(d)
        out = []
        if k in self.degrees:
            out.append(h)
        if k < self.maxdeg:
            for e in range(self.nlab):
                if inv[e] < 0 and e != h:
                    # e heads another open path; find its length
                    t, ke = e, 1
                    while sig[t] >= 0:
                        t = sig[t]
                        ke += 1
                    if k + ke <= self.maxdeg:
                        out.append(e)
            if self.nlab + 2 <= self.total:
                out.append(-2)
        return out

    def apply(self, d: int, e: int) -> None:
        if e == -2:
            e = self.nlab
            self.nlab += 2
        self.sig[d] = e
        self.inv[e] = d

    def undo(self, d: int, e: int) -> None:
        s = self.sig[d]
        self.sig[d] = -1
        self.inv[s] = -1
        if e == -2:
            self.nlab -= 2

    def extend(self, d: int) -> Iterator[tuple[int, ...]]:
        if d == self.total:
            yield tuple(self.sig)
            return
        if d >= self.nlab:
            return  # closed up early: fewer darts than requested
        for e in self.choices(d):
            self.apply(d, e)
            if self._planar():
                yield from self.extend(d + 1)
            self.undo(d, e)

    def frontier(self, depth: int) -> list[tuple["_Builder", int]]:
        """Independent subtrees obtained by fixing the first ``depth`` darts."""
        states = [(self, 0)]
        for _ in range(depth):
            nxt = []
            for b, d in states:
                if d == b.total or d >= b.nlab:
                    nxt.append((b, d))
                    continue
                for e in b.choices(d):
                    c = b.copy()
                    c.apply(d, e)
                    if c._planar():
                        nxt.append((c, d + 1))
            states = nxt
        return states


def _normalize_degrees(degrees) -> frozenset[int]:
    if degrees is None:
        return frozenset()
    if isinstance(degrees, int):
        return frozenset((degrees,))
    return frozenset(degrees)


def enumerate_rooted_maps(num_edges: int, degrees=None) -> Iterator[RootedMap]:
    """All rooted planar maps with ``num_edges`` edges and vertex degrees in ``degrees``.

    ``degrees=None`` allows every degree.  Maps come out canonically labeled
    with root dart 0.
    """
    if num_edges < 1:
        raise UsageError("need at least one edge")
    total = 2 * num_edges
    degs = _normalize_degrees(degrees) or frozenset(range(1, total + 1))
    for sig in _Builder(total, degs).extend(0):
        yield RootedMap(sig, 0)


def enumerate_rooted_cubic_maps(n: int, allow_large: bool = False) -> Iterator[RootedMap]:
    """Rooted cubic planar maps with ``2n`` vertices (size ``n``)."""
    limit = MAX_CUBIC_SIZE + (1 if allow_large else 0)
    if not 1 <= n <= limit:
        raise UsageError(f"size must be in 1..{limit}")
    return enumerate_rooted_maps(3 * n, 3)


def enumerate_four_regular_maps(n: int) -> Iterator[RootedMap]:
    """Rooted 4-regular planar maps with ``n`` vertices."""
    if n < 1:
        raise UsageError("need at least one vertex")
    return enumerate_rooted_maps(2 * n, 4)


# ---------------------------------------------------------------------------
# Matchings and connectivity
# ---------------------------------------------------------------------------


def is_perfect_matching(m: RootedMap, edges: Iterable[int]) -> bool:
    edges = set(edges)
    for cyc in m.vertices():
        if sum(1 for d in cyc if d // 2 in edges) != 1:
            return False
    return all(m.vertex_of()[2 * e] != m.vertex_of()[2 * e + 1] for e in edges)


def list_perfect_matchings(m: RootedMap) -> list[frozenset[int]]:
    """Every perfect matching of a cubic map, as a set of edge ids."""
    verts = m.vertices()
    if any(len(c) != 3 for c in verts):
        raise UsageError("map is not cubic")
    owner = m.vertex_of()
    nv = len(verts)
    used = [False] * nv
    chosen: list[int] = []
    out: list[frozenset[int]] = []

    def go():
        try:
            v = used.index(False)
        except ValueError:
            out.append(frozenset(chosen))
            return
        used[v] = True
        for d in verts[v]:
            w = owner[d ^ 1]
            if w != v and not used[w]:
                used[w] = True
                chosen.append(d // 2)
                go()
                chosen.pop()
                used[w] = False
        used[v] = False

    go()
    return out


def underlying_edges(m: RootedMap) -> list[tuple[int, int]]:
    owner = m.vertex_of()
    return [(owner[2 * i], owner[2 * i + 1]) for i in range(m.num_edges)]


def bridges(m: RootedMap) -> set[int]:
    """Edge ids whose removal disconnects the underlying multigraph."""
    edges = underlying_edges(m)
    nv = len(m.vertices())
    adj: list[list[tuple[int, int]]] = [[] for _ in range(nv)]
    for i, (u, v) in enumerate(edges):
        if u != v:
            adj[u].append((v, i))
            adj[v].append((u, i))
    disc = [-1] * nv
    low = [0] * nv
    out: set[int] = set()
    timer = 0

    def dfs(u, via):
        nonlocal timer
        disc[u] = low[u] = timer
        timer += 1
        for w, i in adj[u]:
            if i == via:
                continue
            if disc[w] < 0:
                dfs(w, i)
                low[u] = min(low[u], low[w])
                if low[w] > disc[u]:
                    out.add(i)
            else:
                low[u] = min(low[u], disc[w])

    for s in range(nv):
        if disc[s] < 0:
            dfs(s, -1)
    return out


def _connected_without(nv: int, edges, removed: set[int]) -> bool:
    alive = [v for v in range(nv) if v not in removed]
    if not alive:
        return True
    adj: dict[int, list[int]] = {v: [] for v in alive}
    for u, v in edges:
        if u in removed or v in removed:
            continue
        adj[u].append(v)
        adj[v].append(u)
    seen = {alive[0]}
    stack = [alive[0]]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(alive)


def is_three_connected(m: RootedMap) -> bool:
    """Simple, at least 4 vertices, and no separating set of at most 2 vertices."""
    edges = underlying_edges(m)
    nv = len(m.vertices())
    if nv < 4:
        return False
    pairs = set()
    for u, v in edges:
        if u == v:
            return False
        key = (min(u, v), max(u, v))
        if key in pairs:
            return False
        pairs.add(key)
    if not _connected_without(nv, edges, set()):
        return False
    for a in range(nv):
        if not _connected_without(nv, edges, {a}):
            return False
        for b in range(a + 1, nv):
            if not _connected_without(nv, edges, {a, b}):
                return False
    return True


def classify_connectivity(m: RootedMap) -> str:
    """Most specific of ``has_bridge``, ``bridgeless``, ``three_connected``."""
    if bridges(m):
        return HAS_BRIDGE
    if is_three_connected(m):
        return THREE_CONNECTED
    return BRIDGELESS


def passes(m: RootedMap, filter: str) -> bool:
    if filter == ALL:
        return True
    cls = classify_connectivity(m)
    if filter == BRIDGELESS:
        return cls != HAS_BRIDGE
    if filter == THREE_CONNECTED:
        return cls == THREE_CONNECTED
    if filter == HAS_BRIDGE:
        return cls == HAS_BRIDGE
    raise UsageError(f"unknown filter {filter!r}")


def dual_triangulation(m: RootedMap) -> RootedMap:
    """Dual map on the same darts: vertices become faces and vice versa.

    The dual rotation is the face permutation, so applying this twice gives
    back ``m`` dart for dart.  The root vertex of the dual is the face on the
    right of the root dart.
    """
    return RootedMap(tuple(m.sigma[d ^ 1] for d in range(m.num_darts)), m.root)


# ---------------------------------------------------------------------------
# Census
# ---------------------------------------------------------------------------


def _census_subtree(args) -> dict[str, int]:
    builder, d = args
    totals = {ALL: 0, BRIDGELESS: 0, THREE_CONNECTED: 0}
    for sig in builder.extend(d):
        m = RootedMap(sig, 0)
        k = len(list_perfect_matchings(m))
        if not k:
            continue
        totals[ALL] += k
        cls = classify_connectivity(m)
        if cls != HAS_BRIDGE:
            totals[BRIDGELESS] += k
        if cls == THREE_CONNECTED:
            totals[THREE_CONNECTED] += k
    return totals


def matched_census_all(n: int, workers: int = 1, allow_large: bool = False) -> dict[str, int]:
    """Matched totals for every filter at size ``n`` in a single pass."""
    limit = MAX_CUBIC_SIZE + (1 if allow_large else 0)
    if not 1 <= n <= limit:
        raise UsageError(f"size must be in 1..{limit}")
    root = _Builder(6 * n, frozenset((3,)))
    if workers <= 1:
        return _census_subtree((root, 0))
    parts = root.frontier(6)
    totals = {ALL: 0, BRIDGELESS: 0, THREE_CONNECTED: 0}
    with ProcessPoolExecutor(workers) as pool:
        for part in pool.map(_census_subtree, parts):
            for k, v in part.items():
                totals[k] += v
    return totals


def matched_census(n: int, filter: str = ALL, workers: int = 1) -> int:
    """Sum of perfect-matching counts over rooted cubic maps of size ``n`` passing ``filter``."""
    if filter not in (ALL, BRIDGELESS, THREE_CONNECTED):
        raise UsageError(f"unknown filter {filter!r}")
    return matched_census_all(n, workers)[filter]


def dump_maps(path, maps: Iterable[RootedMap], with_matchings: bool = False) -> int:
    """Write maps (optionally one record per matching) as JSON lines."""
    count = 0
    with open(path, "w") as fh:
        for m in maps:
            if with_matchings:
                for a in list_perfect_matchings(m):
                    fh.write(json.dumps(m.to_json(matching=a)) + "\n")
                    count += 1
            else:
                fh.write(json.dumps(m.to_json()) + "\n")
                count += 1
    return count
