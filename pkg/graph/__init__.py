"""Undirected communication graphs, Laplacians and spectral diagnostics."""

from graph.core import Graph, build_graph, fiedler_value, is_connected, laplacian
from graph.topology import build_from_spec, complete_graph, path_graph, ring_graph

__all__ = [
    "Graph",
    "build_graph",
    "laplacian",
    "is_connected",
    "fiedler_value",
    "ring_graph",
    "complete_graph",
    "path_graph",
    "build_from_spec",
]
