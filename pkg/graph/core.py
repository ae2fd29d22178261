"""Graph core: immutable undirected graph, Laplacian L = D - A, BFS connectivity, Fiedler value."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from functools import cached_property

import networkx as nx
import numpy as np

from errors import IndexOutOfRangeError, NotConnectedError, SelfLoopError


@dataclass(frozen=True)
class Graph:
    """
    Undirected simple graph on nodes 0..n-1.

    Edges are stored as sorted (i, j) pairs with i < j, so the adjacency matrix is symmetric
    by construction. Immutable; safe to share between concurrent runs.
    """

    n: int
    edges: tuple[tuple[int, int], ...]

    @cached_property
    def nx_graph(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges)
        return g

    def adjacency(self) -> np.ndarray:
        """Dense 0/1 adjacency matrix with rows/columns in node order."""
        return nx.to_numpy_array(self.nx_graph, nodelist=list(range(self.n)), dtype=float)

    def neighbors(self, i: int) -> list[int]:
        if not 0 <= i < self.n:
            raise IndexOutOfRangeError(f"node {i} not in [0, {self.n})")
        return sorted(self.nx_graph.neighbors(i))

    def degrees(self) -> list[int]:
        return [self.nx_graph.degree(i) for i in range(self.n)]


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from a node count and unordered pairs. Duplicates collapse; self-loops are rejected."""
    if n < 1:
        raise ValueError(f"graph needs at least one node, got n={n}")
    normalized: set[tuple[int, int]] = set()
    for pair in edges:
        i, j = (int(v) for v in pair)
        for v in (i, j):
            if not 0 <= v < n:
                raise IndexOutOfRangeError(f"edge ({i}, {j}) references node {v} outside [0, {n})")
        if i == j:
            raise SelfLoopError(f"self-loop at node {i}")
        normalized.add((min(i, j), max(i, j)))
    return Graph(n=n, edges=tuple(sorted(normalized)))


def laplacian(g: Graph) -> np.ndarray:
    """Return L = D_bar - A as a dense n x n float matrix."""
    a = g.adjacency()
    return np.diag(a.sum(axis=1)) - a


def is_connected(g: Graph) -> bool:
    """True iff every pair of distinct nodes is joined by a path (BFS from node 0)."""
    return nx.is_connected(g.nx_graph)


def fiedler_value(g: Graph) -> float:
    """Second-smallest Laplacian eigenvalue (algebraic connectivity). Single node reports 0."""
    if not is_connected(g):
        raise NotConnectedError("fiedler value requires a connected graph")
    if g.n == 1:
        return 0.0
    eigenvalues = np.linalg.eigvalsh(laplacian(g))
    return float(eigenvalues[1])
