from collections import defaultdict
from itertools import combinations, permutations
from typing import FrozenSet, Iterable, Optional, Tuple

import networkx as nx
import pytest

from girth_thickness.models import Graph
from girth_thickness.services.construction_service import ConstructionService
from girth_thickness.services.fixture_store import FixtureStore


def brute_force_girth(graph: Graph) -> Optional[int]:
    """Shortest cycle length by trying every vertex sequence; small graphs only."""
    vertices = range(graph.n)
    for length in range(3, graph.n + 1):
        for cycle in permutations(vertices, length):
            if cycle[0] != min(cycle):
                continue
            closed = cycle + (cycle[0],)
            if all((min(a, b), max(a, b)) in graph.edges for a, b in zip(closed, closed[1:])):
                return length
    return None


def smooth(G: nx.Graph) -> nx.Graph:
    """Suppress degree-2 vertices and drop isolated ones."""
    H = G.copy()
    H.remove_nodes_from([v for v in list(H) if H.degree(v) == 0])
    changed = True
    while changed:
        changed = False
        for v in list(H):
            if H.degree(v) != 2:
                continue
            a, b = list(H.neighbors(v))
            if H.has_edge(a, b):
                continue
            H.remove_node(v)
            H.add_edge(a, b)
            changed = True
            break
    return H


def is_kuratowski_subdivision(edges: Iterable) -> bool:
    H = smooth(nx.Graph(list(edges)))
    return nx.is_isomorphic(H, nx.complete_graph(5)) or nx.is_isomorphic(
        H, nx.complete_bipartite_graph(3, 3)
    )


KURATOWSKI_MIN_EDGES = 9


def _adjacency(edges: FrozenSet[Tuple[int, int]]):
    adjacency = defaultdict(set)
    for u, v in edges:
        adjacency[u].add(v)
        adjacency[v].add(u)
    return adjacency


def _reduce(edges: FrozenSet[Tuple[int, int]]) -> FrozenSet[Tuple[int, int]]:
    """Drop vertices of degree at most one and suppress degree-2 vertices; K5 and K3,3 minors survive."""
    adjacency = _adjacency(edges)
    changed = True
    while changed:
        changed = False
        for w in list(adjacency):
            if w not in adjacency or len(adjacency[w]) > 2:
                continue
            neighbours = adjacency.pop(w)
            for z in neighbours:
                adjacency[z].discard(w)
            if len(neighbours) == 2:
                a, b = neighbours
                adjacency[a].add(b)
                adjacency[b].add(a)
            changed = True
    return frozenset((u, v) for u in adjacency for v in adjacency[u] if u < v)


def _contract(edges: FrozenSet[Tuple[int, int]], edge: Tuple[int, int]) -> FrozenSet[Tuple[int, int]]:
    u, v = edge
    merged = set()
    for a, b in edges:
        a = u if a == v else a
        b = u if b == v else b
        if a != b:
            merged.add((min(a, b), max(a, b)))
    return frozenset(merged)


def _has_kuratowski_subgraph(edges: FrozenSet[Tuple[int, int]]) -> bool:
    adjacency = _adjacency(edges)
    rich = sorted(v for v in adjacency if len(adjacency[v]) >= 4)
    for five in combinations(rich, 5):
        if all(b in adjacency[a] for a, b in combinations(five, 2)):
            return True
    branching = sorted(v for v in adjacency if len(adjacency[v]) >= 3)
    for six in combinations(branching, 6):
        for rest in combinations(six[1:], 2):
            left = (six[0],) + rest
            right = [v for v in six if v not in left]
            if all(b in adjacency[a] for a in left for b in right):
                return True
    return False


def has_kuratowski_minor(edges: Iterable) -> bool:
    """Brute-force Wagner test: contract edges in every order and look for K5 or K3,3 as a subgraph.

    Independent of networkx; meant for graphs of at most eight vertices.
    """
    seen = {}

    def search(current: FrozenSet[Tuple[int, int]]) -> bool:
        current = _reduce(current)
        if len(current) < KURATOWSKI_MIN_EDGES:
            return False
        if current not in seen:
            seen[current] = _has_kuratowski_subgraph(current) or any(
                search(_contract(current, edge)) for edge in current
            )
        return seen[current]

    return search(frozenset((min(u, v), max(u, v)) for u, v in edges))


def graph_of(G: nx.Graph) -> Graph:
    return Graph.from_edges(G.number_of_nodes(), G.edges())


@pytest.fixture
def store():
    return FixtureStore()


@pytest.fixture
def construction(store):
    return ConstructionService(store)
