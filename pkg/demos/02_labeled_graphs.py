"""Labeled cubic planar graphs with a perfect matching, from the network systems.

Connected graphs are built from networks; the exponential formula then turns
connected graphs into arbitrary ones.  The substitution argument of the
3-connected series can be read two ways; only one of them reproduces the
brute-force counts.
"""

from pmcubic.graph_series import PRINTED, SQUARED, first_disagreement, labeled_counts_table

rows = labeled_counts_table(20, h_substitution=SQUARED)
print(f"{'n':>3} {'all':>28} {'connected':>28} {'bridgeless':>28}")
for n, g, c, a in rows[1:]:
    print(f"{n:>3} {g:>28} {c:>28} {a:>28}")

# graphs on 8 vertices: the only disconnected ones are two disjoint K4's
n, g, c, a = rows[3]
print(f"\nall - connected at n=8: {g - c} = C(8,4)/2 * 3 * 3 = {35 * 9}")

print("\nreading the substitution as x^2 (1+D1)(1+D0^2) instead:")
for n, g, c, a in labeled_counts_table(10, h_substitution=PRINTED)[1:]:
    print(f"{n:>3} {g:>12} {c:>12} {a:>12}")
print("first disagreement (n, column, squared reading, other reading):", first_disagreement(12))
