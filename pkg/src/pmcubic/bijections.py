"""Two many-to-one correspondences explaining the closed formulas.

Contraction: a cubic map whose matching contains the root edge collapses to
a 4-regular map; each non-root vertex can be split back in two ways.

Truncation and flips: a bridgeless map with ``n`` edges expands into a
cubic map whose original edges ("red") form a matching; flipping any subset
of the ``n - 1`` non-root red edges gives ``2^(n-1)`` distinct bridgeless
matched cubic maps, and every such map normalizes back to a unique base.

Matched maps are compared through :func:`canonical_matched`, which relabels
darts breadth first from the root and carries the edge set along.
"""

from __future__ import annotations

import random
from typing import Iterable, Sequence

from .maps import RootedMap, UsageError, bridges, is_perfect_matching

MatchedMap = tuple[RootedMap, frozenset]


class BijectionError(AssertionError):
    """An internal claim of the construction failed."""


def canonical_matched(m: RootedMap, edges: Iterable[int]) -> MatchedMap:
    labels = m.canonical_labels()
    return m.relabel(labels), frozenset(labels[2 * e] // 2 for e in edges)


# ---------------------------------------------------------------------------
# Contraction / splitting
# ---------------------------------------------------------------------------


def contract_matching(M: RootedMap, matching) -> RootedMap:
    """Contract every matched edge; the result is 4-regular and canonical.

    The contracted map is rooted at the dart that follows the old root dart
    counterclockwise at its tail.
    """
    matching = frozenset(matching)
    if M.root // 2 not in matching:
        raise UsageError("root edge must be in the matching")
    if not is_perfect_matching(M, matching):
        raise UsageError("not a perfect matching")
    sigma = M.sigma
    black = [d for d in range(M.num_darts) if d // 2 not in matching]
    new = {}
    for d in black:
        if d % 2 == 0:
            new[d] = len(new)
            new[d ^ 1] = len(new)
    out = [0] * len(black)
    for d in black:
        s = sigma[d]
        if s // 2 in matching:
            s = sigma[s ^ 1]
        out[new[d]] = new[s]
    return RootedMap(tuple(out), new[sigma[M.root]]).canonical()


def _split_parts(F: RootedMap, v_cycle: Sequence[int], bit: int):
    p = v_cycle
    if bit == 0:
        return (p[0], p[1]), (p[2], p[3])
    return (p[1], p[2]), (p[3], p[0])


def _rotation_from(F: RootedMap, d: int) -> list[int]:
    out = [d]
    s = F.sigma[d]
    while s != d:
        out.append(s)
        s = F.sigma[s]
    return out


def non_root_vertices(F: RootedMap) -> list[list[int]]:
    """Non-root vertices of ``F``, each as its rotation starting at its smallest dart."""
    owner = F.vertex_of()
    r = owner[F.root]
    return [
        _rotation_from(F, min(c)) for i, c in enumerate(F.vertices()) if i != r
    ]


def split_expand(F: RootedMap, choice: Sequence[int]) -> MatchedMap:
    """Split every vertex of a 4-regular map; the new edges form the matching.

    ``choice`` holds one bit per non-root vertex (order of
    :func:`non_root_vertices`): bit 0 keeps the smallest dart with its
    counterclockwise successor, bit 1 with its predecessor.  The root vertex is
    split so that the root dart and its successor share an endpoint, and the
    new edge pointing into that endpoint becomes the root.
    """
    if any(deg != 4 for deg in F.degrees()):
        raise UsageError("map is not 4-regular")
    others = non_root_vertices(F)
    if len(choice) != len(others):
        raise UsageError(f"need {len(others)} split bits, got {len(choice)}")
    sigma = list(F.sigma)
    ne = F.num_edges
    parts = [((F.root, F.sigma[F.root]), _rotation_from(F, F.root)[2:])]
    parts += [_split_parts(F, cyc, bit) for cyc, bit in zip(others, choice)]
    sigma.extend([0] * (2 * len(parts)))
    matching = []
    for j, ((pa, pb), (pc, pd)) in enumerate(parts):
        x, y = 2 * (ne + j), 2 * (ne + j) + 1
        sigma[x], sigma[pa], sigma[pb] = pa, pb, x
        sigma[y], sigma[pc], sigma[pd] = pc, pd, y
        matching.append(ne + j)
    M = RootedMap(tuple(sigma), 2 * ne)
    return canonical_matched(M, matching)


def split_choice(M: RootedMap, matching) -> tuple[RootedMap, tuple[int, ...]]:
    """Inverse of :func:`split_expand`: the contracted map and the split bits."""
    matching = frozenset(matching)
    F = contract_matching(M, matching)
    # brute force over the 2^(n-1) candidates is cheap at oracle sizes and keeps
    # this independent of the dart bookkeeping in contract_matching
    target = canonical_matched(M, matching)
    k = len(non_root_vertices(F))
    for code in range(2**k):
        cand = tuple((code >> i) & 1 for i in range(k))
        if split_expand(F, cand) == target:
            return F, cand
    raise BijectionError("no split choice reproduces the matched map")


# ---------------------------------------------------------------------------
# Truncation, flips and normalization
# ---------------------------------------------------------------------------


def truncate_map(B: RootedMap) -> MatchedMap:
    """Replace every degree-k vertex of a bridgeless map by a k-cycle.

    Red edge ``i`` of the result is edge ``i`` of ``B`` (same darts), and the
    root dart is unchanged.  The output is not relabeled, so red edge ids
    stay meaningful for :func:`flip_edge`.
    """
    if bridges(B):
        raise UsageError("map has a bridge")
    n = B.num_edges
    sigma = list(B.sigma)
    inv = [0] * len(sigma)
    for d, s in enumerate(sigma):
        inv[s] = d
    out = [0] * (6 * n)

    def nxt(d):  # black dart at w_d heading to w_sigma(d)
        return 2 * (n + d)

    def prv(d):  # black dart at w_d coming from w_sigma^-1(d)
        return 2 * (n + inv[d]) + 1

    for d in range(2 * n):
        out[d], out[nxt(d)], out[prv(d)] = nxt(d), prv(d), d
    return RootedMap(tuple(out), B.root), frozenset(range(n))


def _connected_without_edges(M: RootedMap, removed: set[int]) -> bool:
    owner = M.vertex_of()
    nv = max(owner) + 1
    parent = list(range(nv))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    comps = nv
    for e in range(M.num_edges):
        if e in removed:
            continue
        a, b = find(owner[2 * e]), find(owner[2 * e + 1])
        if a != b:
            parent[a] = b
            comps -= 1
    return comps == 1


def _pair_is_blocking(M: RootedMap, p: int, q: int) -> bool:
    """Do half-edges ``p`` and ``q`` form one edge, or do their edges form a cut?"""
    if p ^ 1 == q:
        return True
    return not _connected_without_edges(M, {p // 2, q // 2})


def flip_is_exceptional(M: RootedMap, red, e: int) -> bool:
    """Whether flipping red edge ``e`` must use the exceptional rule.

    Checks both pairs: the rule is stated for ``{b, c}`` and the matching
    claim for ``{a, d}`` is verified rather than assumed.
    """
    if e not in frozenset(red):
        raise UsageError(f"edge {e} is not red")
    if M.root // 2 == e:
        raise UsageError("the root edge cannot be flipped")
    sigma = M.sigma
    rx, ry = 2 * e, 2 * e + 1
    a, c = sigma[rx], sigma[ry]
    b, d = sigma[a], sigma[c]
    if sigma[b] != rx or sigma[d] != ry:
        raise UsageError("endpoints of a red edge must be cubic")
    bc = _pair_is_blocking(M, b, c)
    ad = _pair_is_blocking(M, a, d)
    if bc != ad:
        raise BijectionError(f"{{b,c}} blocking={bc} but {{a,d}} blocking={ad}")
    return bc


def flip_edge(M: RootedMap, red, e: int) -> RootedMap:
    """Flip the non-root red edge ``e``; darts keep their labels.

    With ``x = tail(2e)`` rotating ``(2e, a, b)`` and ``y = tail(2e+1)``
    rotating ``(2e+1, c, d)``, the usual move re-pairs the black half-edges as
    ``{b, c}`` and ``{d, a}``.  If ``{b, c}`` is a single edge or a 2-edge cut
    that would create a bridge, so instead the red edge is moved to the other
    corner at both ends.  Flipping twice gives the same rooted map (up to
    reversing ``e``).
    """
    sigma = list(M.sigma)
    rx, ry = 2 * e, 2 * e + 1
    a, c = sigma[rx], sigma[ry]
    b, d = sigma[a], sigma[c]
    if flip_is_exceptional(M, red, e):
        sigma[rx], sigma[b], sigma[a] = b, a, rx
        sigma[ry], sigma[d], sigma[c] = d, c, ry
    else:
        sigma[rx], sigma[b], sigma[c] = b, c, rx
        sigma[ry], sigma[d], sigma[a] = d, a, ry
    return RootedMap(tuple(sigma), M.root)


def flip_set(M: RootedMap, red, edges: Iterable[int]) -> RootedMap:
    for e in edges:
        M = flip_edge(M, red, e)
    return M


def black_cycles(M: RootedMap, red) -> list[list[int]]:
    """Black edge ids of each black cycle."""
    red = frozenset(red)
    owner = M.vertex_of()
    nv = max(owner) + 1
    parent = list(range(nv))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    black = [e for e in range(M.num_edges) if e not in red]
    for e in black:
        a, b = find(owner[2 * e]), find(owner[2 * e + 1])
        if a != b:
            parent[a] = b
    groups: dict[int, list[int]] = {}
    for e in black:
        groups.setdefault(find(owner[2 * e]), []).append(e)
    return list(groups.values())


def inside_sets(M: RootedMap, red) -> list[tuple[set[int], set[int], set[int]]]:
    """For each black cycle: (its vertices, its edges, red edges strictly inside it).

    The two sides of a cycle are the two classes of faces connected across
    edges not on the cycle; the outside is the side of the root edge.
    """
    red = frozenset(red)
    face = M.face_of()
    owner = M.vertex_of()
    nf = max(face) + 1
    out = []
    for cyc in black_cycles(M, red):
        on = set(cyc)
        parent = list(range(nf))

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for e in range(M.num_edges):
            if e in on:
                continue
            a, b = find(face[2 * e]), find(face[2 * e + 1])
            if a != b:
                parent[a] = b
        if len({find(f) for f in range(nf)}) != 2:
            raise BijectionError("a black cycle does not split the sphere in two")
        outside = find(face[M.root])
        inside = {e for e in red if find(face[2 * e]) != outside}
        verts = {owner[2 * e] for e in cyc} | {owner[2 * e + 1] for e in cyc}
        out.append((verts, on, inside))
    return out


def bad_edges(M: RootedMap, red) -> set[int]:
    bad = set()
    for _, _, inside in inside_sets(M, red):
        bad |= inside
    return bad


def worthy_edges(M: RootedMap, red) -> set[int]:
    owner = M.vertex_of()
    sets = inside_sets(M, red)
    worthy = set()
    for e in red:
        containing = [(v, c) for v, c, inside in sets if e in inside]
        if len(containing) == 1:
            verts = containing[0][0]
            if owner[2 * e] in verts or owner[2 * e + 1] in verts:
                worthy.add(e)
    return worthy


def is_good(M: RootedMap, red) -> bool:
    return not bad_edges(M, red)


def normalize(M: RootedMap, red, rng: random.Random | None = None) -> RootedMap:
    """Flip bad worthy edges until no red edge lies inside a black cycle."""
    red = frozenset(red)
    bad = bad_edges(M, red)
    limit = len(red) ** 2
    steps = 0
    while bad:
        worthy = sorted(worthy_edges(M, red) & bad)
        if not worthy:
            raise BijectionError("bad edges but none is worthy")
        e = rng.choice(worthy) if rng is not None else worthy[0]
        M = flip_edge(M, red, e)
        new_bad = bad_edges(M, red)
        if len(new_bad) >= len(bad):
            raise BijectionError(f"flipping {e} did not reduce the bad edges")
        bad = new_bad
        steps += 1
        if steps > limit:
            raise BijectionError("normalization did not terminate")
    return M


def contract_black_cycles(M: RootedMap, red) -> RootedMap:
    """Collapse every black cycle of a good map to a vertex; red edges survive."""
    red = sorted(red)
    if M.root // 2 not in red:
        raise UsageError("root edge must be red")
    new = {}
    for i, e in enumerate(red):
        new[2 * e], new[2 * e + 1] = 2 * i, 2 * i + 1
    sigma = M.sigma
    out = [0] * (2 * len(red))
    for e in red:
        for r in (2 * e, 2 * e + 1):
            s = sigma[sigma[r] ^ 1]
            if s not in new:
                raise BijectionError("red edges are not all on one side of their black cycle")
            out[new[r]] = new[s]
    return RootedMap(tuple(out), new[M.root]).canonical()


def normalize_and_recover(M: RootedMap, red, rng: random.Random | None = None) -> RootedMap:
    """The bridgeless base map of a matched bridgeless cubic map."""
    red = frozenset(red)
    if M.root // 2 not in red:
        raise UsageError("root edge must be in the matching")
    if not is_perfect_matching(M, red):
        raise UsageError("not a perfect matching")
    if bridges(M):
        raise UsageError("map has a bridge")
    return contract_black_cycles(normalize(M, red, rng), red)


def fiber(B: RootedMap) -> list[MatchedMap]:
    """All ``2^(n-1)`` flip images of the truncation of ``B``, canonically labeled."""
    M, red = truncate_map(B)
    others = sorted(e for e in red if e != M.root // 2)
    out = []
    for code in range(2 ** len(others)):
        flips = [e for i, e in enumerate(others) if (code >> i) & 1]
        out.append(canonical_matched(flip_set(M, red, flips), red))
    return out
