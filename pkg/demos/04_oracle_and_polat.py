"""
Cross-checking against brute force; robber-win graphs; Polat truncations
========================================================================

The relational engine and an explicit game-tree solver agree on every
ordered pair, including pairs the robber wins outright.
"""

import random

from copwin.capture import compute_capture_table, eta_of_graph, theta
from copwin.game import brute_force_table, render_trace, simulate
from copwin.graph import generate_graph, random_connected_graph

rng = random.Random(1)
agree = robber_wins = 0
for _ in range(200):
    g = random_connected_graph(rng.randint(2, 9), rng.choice([0.1, 0.3, 0.5]), rng)
    t = compute_capture_table(g)
    agree += brute_force_table(g) == t.as_dict()
    robber_wins += not t.copwin
print(f"engine == brute force on {agree}/200 random graphs ({robber_wins} not cop-win)")

# On the 4-cycle the relation never grows past the diagonal.
c4 = generate_graph("cycle:4")
t = compute_capture_table(c4)
print("\nC4: copwin =", t.copwin, " rho =", t.rho, " eta(c1, c3) =", t.eta("c1", "c3"))
print(render_trace(simulate(c4, t, "c1", "c3", max_rounds=4)))

# Finite truncations of the Polat graph stay cop-win; their CR-ordinal creeps up.
print("polat:n  |V|  rho  eta  theta")
for n in range(4, 13):
    g = generate_graph(f"polat:{n}")
    t = compute_capture_table(g)
    print(f"{n:>7} {len(g):>4} {t.rho:>4} {eta_of_graph(t):>4}  {theta(t)}")
