"""Walk through the linear-time forest evaluator and its peel certificates.

Run:  python3 demos/01_forest_costs.py
"""

from slowcolor import (
    parse_graph,
    path_graph,
    slow_cost,
    slow_cost_trace,
    star_graph,
    validate_forest,
)
from slowcolor.numbers import tri_index

print("=== paths and stars have closed forms ===")
for n in (1, 2, 5, 9, 100, 10_001):
    print(f"  s(P_{n}) = {slow_cost(path_graph(n))}  (floor(3n/2) = {3 * n // 2})")
for n in (2, 6, 50, 1_000):
    s = slow_cost(star_graph(n - 1))
    print(f"  s(K_1,{n - 1}) = {s}  (n + tri_index(n-1) = {n + tri_index(n - 1)})")

print()
print("=== the peel certificate explains the value ===")
text = """7 6
# a four-leaf stem next to a pendant edge
0 1
1 2
1 3
1 4
1 5
0 6
"""
f = validate_forest(parse_graph(text))
print(f"forest: {sorted(f.edges())}")
trace = slow_cost_trace(f)
print(trace.to_text())
print()
print("Each line deletes one stem's leaf set (plus the stem itself when")
print("r+1 is not triangular) and charges r + tri_index(r) (+1); isolated")
print("leftovers cost one each.  Replaying the steps reproduces the total.")
