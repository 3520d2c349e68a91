"""
Capture values on a small tree
==============================

A spider with legs of length 1, 2 and 3: compute every capture value,
the CR-ordinal, the capture time and the optimal cop starts, then watch
an optimal game.
"""

from copwin.capture import compute_capture_table, eta_of_graph, eta_of_vertex, theta
from copwin.game import render_trace, simulate
from copwin.graph import format_graph, generate_graph

g = generate_graph("spider:1,2,3")
print(format_graph(g))

# Rows are robber positions, columns cop positions.
table = compute_capture_table(g)
labels = g.vertices
print("robber\\cop " + " ".join(f"{v:>5}" for v in labels))
for u in labels:
    print(f"{u:<10} " + " ".join(f"{table.eta(u, v):>5}" for v in labels))

# The table is not symmetric: a cop on x3.1 needs 2 rounds against a robber
# on x3.3, but a cop on x3.3 needs 4 rounds against a robber on x3.1.
print("eta(x3.3, x3.1) =", table.eta("x3.3", "x3.1"))
print("eta(x3.1, x3.3) =", table.eta("x3.1", "x3.3"))

# Worst case for each cop start, and the best of those.
for v in labels:
    print(f"eta({v}) = {eta_of_vertex(table, v)}")
print("rho =", table.rho, " eta(G) =", eta_of_graph(table), " theta =", theta(table))

# Optimal play from (robber x3.3, cop x3.1) lasts exactly eta(x3.3, x3.1) rounds.
print(render_trace(simulate(g, table, "x3.3", "x3.1")))

# A random robber never outlasts that bound.
for seed in range(3):
    trace = simulate(g, table, "x3.3", "x3.1", robber_policy=f"random:{seed}")
    print(f"random robber (seed {seed}):", trace.outcome)
