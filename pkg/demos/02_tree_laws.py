"""
Trees: capture time is the radius, CR-ordinal the diameter
==========================================================

Checks the radius/diameter/centre identities on paths, on the rooted-sum
family S_n, and on uniformly random labeled trees.
"""

import math
import random

from copwin.capture import compute_capture_table, eta_of_graph, eta_of_vertex, theta
from copwin.graph import center, diameter, distances_from, generate, generate_graph, radius, random_tree

print("paths: n, eta, ceil((n-1)/2), rho")
for n in (2, 3, 4, 9, 10, 25):
    t = compute_capture_table(generate_graph(f"path:{n}"))
    print(n, eta_of_graph(t), math.ceil((n - 1) / 2), t.rho)

# S_n joins S_1, ..., S_{n-1} under a fresh root, so it has 2^(n-1) vertices.
print("\nS family: n, |V|, eta, rho")
for n in range(1, 11):
    s = generate(f"s:{n}")
    t = compute_capture_table(s.graph)
    print(n, len(s.graph), eta_of_graph(t), t.rho)

# Random trees: the optimal cop starts are the centre, and every other start
# costs exactly its distance to the centre on top of the capture time.
rng = random.Random(0)
mismatches = 0
for _ in range(100):
    g = random_tree(rng.randint(1, 40), rng)
    t = compute_capture_table(g)
    th = theta(t)
    ok = eta_of_graph(t) == radius(g) and t.rho == diameter(g) and th == center(g)
    d = [distances_from(g, c) for c in th]
    ok &= all(eta_of_vertex(t, v) == eta_of_graph(t) + min(x[v] for x in d) for v in g)
    mismatches += not ok
print("\nrandom trees violating the identities:", mismatches)
