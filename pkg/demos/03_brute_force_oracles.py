"""Counting by exhaustive generation, the ground truth behind the series.

Rooted maps are generated directly in canonical form as rotation systems;
labeled graphs are generated as edge sets and filtered by planarity.
"""

import time

from pmcubic.graphs import count_perfect_matchings_graph, enumerate_labeled_cubic_planar, labeled_census_all
from pmcubic.map_series import CountKind, closed_form_count
from pmcubic.maps import (
    classify_connectivity,
    enumerate_rooted_cubic_maps,
    list_perfect_matchings,
    matched_census_all,
)

print("rooted cubic maps on two vertices:")
for m in enumerate_rooted_cubic_maps(1):
    print(f"  rotation {m.vertices()}  root {m.root}  {classify_connectivity(m):15} "
          f"matchings {sorted(map(sorted, list_perfect_matchings(m)))}")

print("\nrooted cubic maps (enumerated vs formula) and matched censuses:")
for n in range(1, 5):
    t = time.perf_counter()
    count = sum(1 for _ in enumerate_rooted_cubic_maps(n))
    census = matched_census_all(n)
    print(f"  2n={2 * n}: {count:5} maps (formula {closed_form_count(CountKind.CUBIC, n)}), "
          f"matched {census}  [{time.perf_counter() - t:.2f}s]")

print("\nlabeled cubic planar graphs on 6 vertices:")
gs = list(enumerate_labeled_cubic_planar(6))
print(f"  {len(gs)} graphs, {sum(map(count_perfect_matchings_graph, gs))} (graph, matching) pairs")

t = time.perf_counter()
print("  n=8:", labeled_census_all(8), f"[{time.perf_counter() - t:.1f}s]")
