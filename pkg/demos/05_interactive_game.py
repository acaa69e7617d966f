"""The interactive sum choice game: solver, strategies, and transcripts.

Run:  python3 demos/05_interactive_game.py
"""

from slowcolor import cycle_graph, isc_cost, path_graph, slow_cost, star_graph
from slowcolor.exact import slow_cost_exact
from slowcolor.isc import (
    ConstructiveSupplier,
    ExactSupplier,
    FreshColorSupplier,
    isc_cost_exact,
    requester_play,
    supplier_play,
)
from slowcolor.isc import ExactRequester

print("=== the two games agree on forests but split on even cycles ===")
for name, f in [("P_6", path_graph(6)), ("K_1,5", star_graph(5))]:
    print(f"  {name}: slow {slow_cost(f)}, interactive {isc_cost(f)}")
c4 = cycle_graph(4)
print(f"  C_4: slow {slow_cost_exact(c4)}, interactive {isc_cost_exact(c4)}")

print()
print("=== constructive requester vs the optimal supplier on K_1,5 ===")
star = star_graph(5)
res = requester_play(star, ExactSupplier(star))
print(res.to_text())
print(f"value: {isc_cost(star)}; witness coloring: {res.witness}")

print()
print("=== a lazy supplier loses rounds ===")
res = requester_play(star, FreshColorSupplier())
print(f"  fresh-color supplier on K_1,5: {res.rounds} rounds (value {isc_cost(star)})")

print()
print("=== the constructive supplier forces the value ===")
p4 = path_graph(4)
res = supplier_play(p4, ExactRequester(p4))
print(f"  optimal requester on P_4: {res.rounds} rounds = {isc_cost(p4)}")
res = requester_play(p4, ConstructiveSupplier(p4))
print(f"  both constructive on P_4: {res.rounds} rounds = {isc_cost(p4)}")
