"""
Planarity decisions and the girth-dependent planar size bound.
"""

import networkx as nx

from ..config.settings import settings
from ..models import Girth, Graph, PlanarityVerdict, normalize_edge


def is_planar_nx(G: nx.Graph) -> bool:
    """Exact planarity test (left-right criterion) on a networkx graph."""
    planar, _ = nx.check_planarity(G, counterexample=False)
    return planar


def is_planar(graph: Graph, with_witness: bool | None = None) -> PlanarityVerdict:
    """Decide planarity; non-planar graphs up to witness_max_order vertices carry a Kuratowski subgraph."""
    if with_witness is None:
        with_witness = graph.n <= settings.witness_max_order
    G = graph.to_networkx()
    planar, certificate = nx.check_planarity(G, counterexample=with_witness)
    if planar:
        return PlanarityVerdict(planar=True)
    if not with_witness:
        return PlanarityVerdict(planar=False)
    witness = frozenset(normalize_edge(u, v) for u, v in certificate.edges())
    return PlanarityVerdict(planar=False, witness=witness)


def max_planar_size(n: int, girth_lb: Girth | int | str) -> int:
    """Largest size of a planar graph of order n with girth at least girth_lb."""
    if n < 1:
        raise ValueError(f"max_planar_size needs n >= 1, got {n}")
    girth_lb = Girth.parse(girth_lb)
    if girth_lb.is_infinite or n <= 2:
        return n - 1
    g = girth_lb.value
    return g * (n - 2) // (g - 2)


def part_capacity(n: int, girth_lb: Girth | int | str) -> int:
    """Most edges one planar part of girth at least girth_lb can hold; a spanning forest always fits."""
    return max(max_planar_size(n, girth_lb), n - 1)
