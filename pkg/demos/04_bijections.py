"""The correspondences behind the factors 2^(n-1).

Contraction: collapsing the matching of a cubic map (root edge matched)
gives a 4-regular map, and every non-root vertex can be split back in two
ways.

Truncation: replacing each vertex of a bridgeless map by a cycle gives a
cubic map whose original edges form a matching; flipping any set of
non-root original edges gives new maps, and normalization undoes the flips.
"""

import random
from collections import Counter

from pmcubic.bijections import contract_matching, fiber, normalize_and_recover, split_expand
from pmcubic.ising import coloring_from_matching
from pmcubic.maps import bridges, enumerate_four_regular_maps, enumerate_rooted_cubic_maps, enumerate_rooted_maps, list_perfect_matchings

n = 3
fibers = Counter(
    contract_matching(m, a)
    for m in enumerate_rooted_cubic_maps(n)
    for a in list_perfect_matchings(m)
    if m.root // 2 in a
)
print(f"n={n}: {len(fibers)} four-regular maps, fiber sizes {set(fibers.values())}")

F = next(enumerate_four_regular_maps(2))
for choice in ((0,), (1,)):
    M, a = split_expand(F, choice)
    print(f"  split {F.vertices()} with bit {choice[0]} -> {M.vertices()} matching {sorted(a)}")

bases = [B for B in enumerate_rooted_maps(n) if not bridges(B)]
total = 0
rng = random.Random(0)
for B in bases:
    images = fiber(B)
    total += len(images)
    assert all(normalize_and_recover(M, red, rng) == B.canonical() for M, red in images)
print(f"\n{len(bases)} bridgeless maps with {n} edges, {total} flip images, all recovered")

m = next(enumerate_rooted_cubic_maps(2))
a = list_perfect_matchings(m)[0]
print("\nmatching", sorted(a), "of", m.vertices(), "-> dual coloring", coloring_from_matching(m, a))
