"""Perfect matchings of a cubic map versus minimal 2-colorings of its dual.

A 2-coloring of a triangulation with ``2n`` faces has at least ``n``
monochromatic edges, one per face at the very least on average; colorings
reaching the bound (root vertex color fixed) are in bijection with perfect
matchings of the dual cubic map via "edge is monochromatic iff its dual edge
is matched".

Dual vertices are indexed by :meth:`RootedMap.vertices` order of the
triangulation, i.e. by smallest dart.  Everything works on darts, so loops
and degenerate faces need no special casing.
"""

from __future__ import annotations

import itertools
import json
from typing import Sequence

from .maps import RootedMap, dual_triangulation, enumerate_rooted_cubic_maps, is_perfect_matching

Coloring = tuple[int, ...]


class IsingError(ValueError):
    pass


class NotBipartiteError(AssertionError):
    """The component graph had an odd cycle; cannot happen for planar cubic maps."""


def root_vertex(T: RootedMap) -> int:
    return T.vertex_of()[T.root]


def monochromatic_edges(T: RootedMap, colors: Sequence[int]) -> frozenset[int]:
    owner = T.vertex_of()
    return frozenset(
        i for i in range(T.num_edges) if colors[owner[2 * i]] == colors[owner[2 * i + 1]]
    )


def matching_from_coloring(T: RootedMap, colors: Sequence[int]) -> frozenset[int]:
    """Edges of the dual cubic map whose triangulation edge is monochromatic."""
    nfaces = len(T.faces())
    if nfaces % 2:
        raise IsingError("triangulation must have an even number of faces")
    if len(colors) != len(T.vertices()):
        raise IsingError("one color per triangulation vertex expected")
    if colors[root_vertex(T)] != 1:
        raise IsingError("root vertex must have color 1")
    mono = monochromatic_edges(T, colors)
    if len(mono) != nfaces // 2:
        raise IsingError(f"{len(mono)} monochromatic edges, need exactly {nfaces // 2}")
    cubic = dual_triangulation(T)
    if not is_perfect_matching(cubic, mono):
        raise AssertionError("monochromatic edges do not form a perfect matching")
    return mono


def coloring_from_matching(M: RootedMap, matching) -> Coloring:
    """Color the dual of ``M`` so that the monochromatic edges are exactly ``matching``."""
    matching = frozenset(matching)
    if not is_perfect_matching(M, matching):
        raise IsingError("not a perfect matching")
    T = dual_triangulation(M)
    owner = T.vertex_of()
    nv = len(T.vertices())

    parent = list(range(nv))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for e in matching:
        a, b = find(owner[2 * e]), find(owner[2 * e + 1])
        if a != b:
            parent[a] = b

    adj: dict[int, set[int]] = {find(v): set() for v in range(nv)}
    for e in range(T.num_edges):
        if e in matching:
            continue
        a, b = find(owner[2 * e]), find(owner[2 * e + 1])
        if a == b:
            raise NotBipartiteError(f"edge {e} joins a component to itself")
        adj[a].add(b)
        adj[b].add(a)

    start = find(owner[T.root])
    comp_color = {start: 1}
    queue = [start]
    for c in queue:
        for w in adj[c]:
            if w not in comp_color:
                comp_color[w] = 3 - comp_color[c]
                queue.append(w)
            elif comp_color[w] == comp_color[c]:
                raise NotBipartiteError("odd cycle in the component graph")
    return tuple(comp_color[find(v)] for v in range(nv))


def minimal_colorings(T: RootedMap) -> list[Coloring]:
    """All root-fixed colorings with exactly half as many monochromatic edges as faces."""
    nv = len(T.vertices())
    r = root_vertex(T)
    target = len(T.faces()) // 2
    out = []
    for bits in itertools.product((1, 2), repeat=nv - 1):
        colors = list(bits)
        colors.insert(r, 1)
        if len(monochromatic_edges(T, colors)) == target:
            out.append(tuple(colors))
    return out


def min_monochromatic(T: RootedMap) -> int:
    """Fewest monochromatic edges over all 2-colorings (no root constraint)."""
    nv = len(T.vertices())
    return min(
        len(monochromatic_edges(T, c)) for c in itertools.product((1, 2), repeat=nv)
    )


def ising_census(n: int) -> int:
    """Minimal-coloring count summed over rooted triangulations with ``2n`` faces."""
    if not 1 <= n <= 3:
        raise IsingError("supported sizes are 1..3")
    return sum(len(minimal_colorings(dual_triangulation(m))) for m in enumerate_rooted_cubic_maps(n))


def coloring_to_json(colors: Sequence[int]) -> str:
    return json.dumps(list(colors))


def coloring_from_json(text: str) -> Coloring:
    colors = tuple(json.loads(text))
    if any(c not in (1, 2) for c in colors):
        raise IsingError("colors must be 1 or 2")
    return colors
