"""Exact minimax values and optimal moves on small graphs.

Run:  python3 demos/02_exact_solver.py
"""

from slowcolor import SlowExactSolver, cycle_graph, slow_cost_exact, star_graph
from slowcolor.numbers import tri_index, triangular

print("=== cycles ===")
for n in range(3, 9):
    print(f"  s(C_{n}) = {slow_cost_exact(cycle_graph(n))}   [3*ceil(n/2) = {3 * ((n + 1) // 2)}]")
print("  (even cycles match ceil(3n/2); odd cycles cost one more)")

print()
print("=== optimal first marks on a six-leaf star ===")
solver = SlowExactSolver(star_graph(6))
report = solver.lister_moves(exhaustive=True)
print(f"  game value: {report.value}")
u = tri_index(6)
print(f"  tri_index(6) = {u}, slack 6 - triangular({u}) = {6 - triangular(u)}")
print("  connected optimal marks (center 0 + p leaves):")
for m in report.connected:
    print(f"    {sorted(m)}")
print("  disconnected optimal marks (leaves only):")
for m in report.disconnected:
    print(f"    {sorted(m)}")

print()
print("=== painter answers ===")
print("  mark = center + 3 leaves on K_1,6 (a tie):")
for resp in solver.painter_responses(None, [0, 1, 2, 3]):
    print(f"    color {sorted(resp)}")
solver5 = SlowExactSolver(star_graph(5))
print("  mark = center + 2 leaves on K_1,5 (triangular family):")
for resp in solver5.painter_responses(None, [0, 1, 2]):
    print(f"    color {sorted(resp)}  <- the center is forced")
