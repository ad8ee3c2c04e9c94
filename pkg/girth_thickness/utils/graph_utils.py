"""
Graph-core operations: complete graphs, girth, induced restriction.
"""

from collections import deque
from itertools import combinations
from typing import Dict, Iterable, List, Optional

from ..models import Girth, Graph, GraphError, normalize_edge


def complete_graph(n: int) -> Graph:
    """Return K_n with all n(n-1)/2 pairs."""
    if n < 0:
        raise GraphError(f"Vertex count must be non-negative, got {n}")
    return Graph(n, frozenset(combinations(range(n), 2)))


def _cycle_through_root(graph: Graph, root: int, best: Optional[int]) -> Optional[List[int]]:
    """BFS from root; return the shortest cycle closed by a non-tree edge, if shorter than best."""
    adjacency = graph.adjacency
    dist = {root: 0}
    parent = {root: -1}
    queue = deque([root])
    found = None
    found_length = best

    while queue:
        u = queue.popleft()
        # cycles closed past this depth cannot beat the current best
        if found_length is not None and 2 * dist[u] + 1 >= found_length:
            break
        for w in adjacency[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                parent[w] = u
                queue.append(w)
            elif w != parent[u]:
                length = dist[u] + dist[w] + 1
                if found_length is None or length < found_length:
                    found_length = length
                    found = (u, w)

    if found is None:
        return None
    u, w = found
    left = [u]
    while parent[left[-1]] != -1:
        left.append(parent[left[-1]])
    right = [w]
    while parent[right[-1]] != -1:
        right.append(parent[right[-1]])
    # left ends at root; right also ends at root, drop the duplicate
    return list(reversed(left)) + right[:-1]


def shortest_cycle(graph: Graph) -> Optional[List[int]]:
    """Vertices of a shortest cycle in traversal order, or None if acyclic."""
    best_cycle = None
    for root in range(graph.n):
        if not graph.adjacency[root]:
            continue
        best = len(best_cycle) if best_cycle else None
        cycle = _cycle_through_root(graph, root, best)
        if cycle is not None:
            best_cycle = cycle
            if len(best_cycle) == 3:
                break
    return best_cycle


def girth(graph: Graph) -> Girth:
    cycle = shortest_cycle(graph)
    if cycle is None:
        return Girth.infinite()
    return Girth.measured(len(cycle), graph.n)


def remove_vertices(graph: Graph, drop: Iterable[int]) -> Graph:
    """Induced subgraph on the remaining vertices, relabeled to 0..n-|drop|-1 in order."""
    drop = set(drop)
    for vertex in drop:
        if not 0 <= vertex < graph.n:
            raise GraphError(f"Vertex {vertex} out of range for n={graph.n}")
    kept = [vertex for vertex in range(graph.n) if vertex not in drop]
    new_id = {vertex: index for index, vertex in enumerate(kept)}
    edges = frozenset(
        (new_id[u], new_id[v]) for u, v in graph.edges if u in new_id and v in new_id
    )
    return Graph(len(kept), edges)


def relabel(graph: Graph, mapping: Dict[int, int]) -> Graph:
    """Apply a vertex bijection of 0..n-1 onto itself."""
    if sorted(mapping) != list(range(graph.n)) or sorted(mapping.values()) != list(range(graph.n)):
        raise GraphError("Relabeling must be a bijection of the vertex set")
    return Graph(graph.n, frozenset(normalize_edge(mapping[u], mapping[v]) for u, v in graph.edges))
