"""Cops and Robbers capture relations, CR-ordinals and their ordinal arithmetic."""

from .capture import (
    NEVER,
    CaptureTable,
    compute_capture_table,
    eta_of_graph,
    eta_of_vertex,
    is_copwin,
    rho_of_graph,
    theta,
)
from .game import brute_force_table, cop_strategy, robber_strategy, simulate
from .graph import Graph, RootedGraph, generate, generate_graph, rooted_sum
from .ordinal import OMEGA, ONE, ZERO, Ordinal, add, parse

__version__ = "0.1.0"

__all__ = [
    "NEVER",
    "CaptureTable",
    "compute_capture_table",
    "eta_of_graph",
    "eta_of_vertex",
    "is_copwin",
    "rho_of_graph",
    "theta",
    "brute_force_table",
    "cop_strategy",
    "robber_strategy",
    "simulate",
    "Graph",
    "RootedGraph",
    "generate",
    "generate_graph",
    "rooted_sum",
    "OMEGA",
    "ONE",
    "ZERO",
    "Ordinal",
    "add",
    "parse",
]
