"""Constructive optimal strategies playing full matches without search.

Run:  python3 demos/03_strategies.py
"""

import random

from slowcolor import path_graph, play_match, slow_cost
from slowcolor.graphs import random_forest

print("=== optimal vs optimal on a path ===")
result = play_match(path_graph(9), "constructive", "constructive")
print(result.to_text())
print(f"matches floor(3*9/2) = {slow_cost(path_graph(9))}")

print()
print("=== the constructive painter holds the bound against a wild lister ===")
rng = random.Random(0)
f = random_forest(40, rng)
bound = slow_cost(f)
for seed in range(5):
    got = play_match(f, "random", "constructive", seed=seed).score
    print(f"  random lister, seed {seed}: score {got} <= {bound}")

print()
print("=== and the constructive lister never settles for less ===")
for seed in range(5):
    got = play_match(f, "constructive", "random", seed=seed).score
    print(f"  random painter, seed {seed}: score {got} >= {bound}")

print()
print("=== equilibrium at scale: 200-vertex random forests ===")
for seed in (1, 2, 3):
    g = random_forest(200, random.Random(seed))
    got = play_match(g, "constructive", "constructive").score
    print(f"  seed {seed}: score {got}, evaluator says {slow_cost(g)}")
