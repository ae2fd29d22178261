"""Named topologies (ring, complete, path) and construction from a scenario GraphSpec."""

from __future__ import annotations

import networkx as nx

from graph.core import Graph, build_graph
from schemas.scenario import GraphSpec


def _from_nx(n: int, g: nx.Graph) -> Graph:
    return build_graph(n, g.edges())


def ring_graph(n: int) -> Graph:
    """Cycle 0-1-...-(n-1)-0. n=2 gives a single edge, n=1 no edges."""
    if n <= 2:
        return build_graph(n, [(0, 1)] if n == 2 else [])
    return _from_nx(n, nx.cycle_graph(n))


def complete_graph(n: int) -> Graph:
    return _from_nx(n, nx.complete_graph(n))


def path_graph(n: int) -> Graph:
    return _from_nx(n, nx.path_graph(n))


_TOPOLOGIES = {
    "ring": ring_graph,
    "complete": complete_graph,
    "path": path_graph,
}


def build_from_spec(spec: GraphSpec, n: int) -> Graph:
    """Build the communication graph for n players from a scenario graph block."""
    if spec.edges is not None:
        return build_graph(n, spec.edges)
    if spec.topology not in _TOPOLOGIES:
        raise KeyError(f"Unknown topology: {spec.topology}. Registered: {list(_TOPOLOGIES)}")
    return _TOPOLOGIES[spec.topology](n)
