from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import FrozenSet, Iterable, Optional, Tuple

import networkx as nx

Edge = Tuple[int, int]


class GraphError(ValueError):
    """Raised when a graph would violate the simple-graph invariants."""


def normalize_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


# Undirected simple graph on vertices 0..n-1
@dataclass(frozen=True)
class Graph:
    n: int
    edges: FrozenSet[Edge] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 0:
            raise GraphError(f"Vertex count must be non-negative, got {self.n}")
        for u, v in self.edges:
            if u == v:
                raise GraphError(f"Self-loop at vertex {u}")
            if not (0 <= u < v < self.n):
                raise GraphError(f"Edge ({u}, {v}) is not a normalized pair below n={self.n}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> "Graph":
        """Build a graph from unordered pairs; duplicates collapse, self-loops are rejected."""
        normalized = set()
        for u, v in edges:
            if u == v:
                raise GraphError(f"Self-loop at vertex {u}")
            normalized.add(normalize_edge(u, v))
        return cls(n, frozenset(normalized))

    @property
    def size(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> Tuple[Tuple[int, ...], ...]:
        neighbors = [[] for _ in range(self.n)]
        for u, v in self.edges:
            neighbors[u].append(v)
            neighbors[v].append(u)
        return tuple(tuple(sorted(nbrs)) for nbrs in neighbors)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def to_networkx(self) -> nx.Graph:
        G = nx.Graph()
        G.add_nodes_from(range(self.n))
        G.add_edges_from(self.sorted_edges())
        return G


class GirthKind(str, Enum):
    FINITE = "finite"
    INFINITE = "inf"


@dataclass(frozen=True)
class Girth:
    """Shortest cycle length; acyclic graphs have infinite girth.

    A girth measured on a graph of order n comes from measured() and satisfies 3 <= value <= n.
    As a lower bound (a claim or search parameter) a finite value may exceed n.
    """

    kind: GirthKind
    value: Optional[int] = None

    def __post_init__(self):
        if self.kind is GirthKind.FINITE and (self.value is None or self.value < 3):
            raise ValueError(f"Finite girth must be at least 3, got {self.value}")
        if self.kind is GirthKind.INFINITE and self.value is not None:
            raise ValueError("Infinite girth carries no value")

    @classmethod
    def finite(cls, value: int) -> "Girth":
        return cls(GirthKind.FINITE, value)

    @classmethod
    def infinite(cls) -> "Girth":
        return cls(GirthKind.INFINITE)

    @classmethod
    def measured(cls, length: int, n: int) -> "Girth":
        """Girth of a cycle of the given length found in a graph of order n."""
        if not 3 <= length <= n:
            raise ValueError(f"No cycle of length {length} fits in a graph of order {n}")
        return cls.finite(length)

    @classmethod
    def parse(cls, raw) -> "Girth":
        """Accept an int, the string "inf", or an existing Girth."""
        if isinstance(raw, Girth):
            return raw
        if isinstance(raw, str):
            if raw.strip().lower() in ("inf", "infinite", "infinity"):
                return cls.infinite()
            raw = int(raw)
        return cls.finite(int(raw))

    @property
    def is_infinite(self) -> bool:
        return self.kind is GirthKind.INFINITE

    def at_least(self, bound: "Girth | int") -> bool:
        bound = Girth.parse(bound)
        if self.is_infinite:
            return True
        if bound.is_infinite:
            return False
        return self.value >= bound.value

    def to_json(self):
        return "inf" if self.is_infinite else self.value

    def __str__(self) -> str:
        return str(self.to_json())


@dataclass(frozen=True)
class PlanarityVerdict:
    planar: bool
    # Kuratowski subdivision edges, only for non-planar inputs
    witness: Optional[FrozenSet[Edge]] = None


def reduce_index(index: int, k: int) -> int:
    """Reduce a label index modulo 2k to its representative in 1..2k."""
    return (index - 1) % (2 * k) + 1


@dataclass(frozen=True)
class VertexMap:
    """Bijection between labels v_j, v'_j, x, y and integer ids.

    v_j -> j-1, v'_j -> 2k+j-1, x -> 4k, y -> 4k+1, for j in 1..2k.
    """

    k: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"VertexMap needs k >= 1, got {self.k}")

    def v(self, j: int) -> int:
        return reduce_index(j, self.k) - 1

    def vp(self, j: int) -> int:
        return 2 * self.k + reduce_index(j, self.k) - 1

    @property
    def x(self) -> int:
        return 4 * self.k

    @property
    def y(self) -> int:
        return 4 * self.k + 1

    @property
    def order(self) -> int:
        return 4 * self.k + 2

    def label(self, vertex: int) -> str:
        k2 = 2 * self.k
        if 0 <= vertex < k2:
            return f"v_{vertex + 1}"
        if k2 <= vertex < 2 * k2:
            return f"v'_{vertex - k2 + 1}"
        if vertex == self.x:
            return "x"
        if vertex == self.y:
            return "y"
        raise GraphError(f"Vertex {vertex} has no label for k={self.k}")

    def vertex(self, label: str) -> int:
        if label == "x":
            return self.x
        if label == "y":
            return self.y
        if label.startswith("v'_"):
            j = int(label[3:])
            primed = True
        elif label.startswith("v_"):
            j = int(label[2:])
            primed = False
        else:
            raise GraphError(f"Unknown vertex label {label!r}")
        if not 1 <= j <= 2 * self.k:
            raise GraphError(f"Label index {j} outside 1..{2 * self.k}")
        return self.vp(j) if primed else self.v(j)


@dataclass(frozen=True)
class ZigZag:
    """Index sequence i, i+1, i-1, i+2, i-2, ..., i+k+1, i+k reduced to 1..2k."""

    k: int
    i: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"ZigZag needs k >= 1, got {self.k}")

    @cached_property
    def sequence(self) -> Tuple[int, ...]:
        terms = [self.i]
        for t in range(1, self.k + 1):
            terms.append(self.i + t)
            if len(terms) < 2 * self.k:
                terms.append(self.i - t)
        return tuple(reduce_index(term, self.k) for term in terms)

    def consecutive_pairs(self) -> list[Tuple[int, int]]:
        seq = self.sequence
        return [(seq[t], seq[t + 1]) for t in range(len(seq) - 1)]

    def position(self, index: int) -> int:
        return self.sequence.index(reduce_index(index, self.k))
