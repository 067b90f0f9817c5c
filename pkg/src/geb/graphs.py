"""Immutable small-graph representation, fixture families, and predicates.

Graphs are simple and undirected on 1..64 vertices. The edge set is an
upper-triangle bitset packed into one Python int: the unordered pair (i, j)
with i < j occupies bit ``j*(j-1)//2 + i``. That is the column-by-column
order used by the graph6 format, so encoding and decoding are straight bit
copies. Isolated vertices are legal (n is stored separately from the bits).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator

from .errors import CycleTooShort, NTooLarge, SelfLoop, VertexOutOfRange

MAX_VERTICES = 64


def pair_index(i: int, j: int) -> int:
    """Bitset position of the unordered pair (i, j) with i != j."""
    if i > j:
        i, j = j, i
    return j * (j - 1) // 2 + i


def pair_count(n: int) -> int:
    return n * (n - 1) // 2


def pairs_in_order(n: int) -> list[tuple[int, int]]:
    """All unordered pairs in bitset order: (0,1), (0,2), (1,2), (0,3), ..."""
    return [(i, j) for j in range(n) for i in range(j)]


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: vertex count plus an edge bitset."""

    n: int
    adj: int = 0

    def __post_init__(self):
        if not 1 <= self.n <= MAX_VERTICES:
            raise NTooLarge(f"vertex count must be in 1..{MAX_VERTICES}, got {self.n}")
        if self.adj < 0 or self.adj >> pair_count(self.n):
            raise VertexOutOfRange("edge bitset has bits outside the upper triangle")

    @property
    def edge_count(self) -> int:
        return self.adj.bit_count()

    def has_edge(self, i: int, j: int) -> bool:
        if i == j:
            return False
        return bool(self.adj >> pair_index(i, j) & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [p for k, p in enumerate(pairs_in_order(self.n)) if self.adj >> k & 1]

    def neighbor_masks(self) -> list[int]:
        """Per-vertex neighbor sets as n-bit ints."""
        masks = [0] * self.n
        for k, (i, j) in enumerate(pairs_in_order(self.n)):
            if self.adj >> k & 1:
                masks[i] |= 1 << j
                masks[j] |= 1 << i
        return masks


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from unordered endpoint pairs; duplicates collapse."""
    if not 1 <= n <= MAX_VERTICES:
        raise NTooLarge(f"vertex count must be in 1..{MAX_VERTICES}, got {n}")
    adj = 0
    for i, j in edges:
        if i == j:
            raise SelfLoop(f"self-loop at vertex {i}")
        if not (0 <= i < n and 0 <= j < n):
            raise VertexOutOfRange(f"edge ({i},{j}) outside 0..{n - 1}")
        adj |= 1 << pair_index(i, j)
    return Graph(n, adj)


def complete(n: int) -> Graph:
    if not 1 <= n <= MAX_VERTICES:
        raise NTooLarge(f"vertex count must be in 1..{MAX_VERTICES}, got {n}")
    return Graph(n, (1 << pair_count(n)) - 1)


def complete_bipartite(p: int, q: int) -> Graph:
    """K_{p,q}: every edge between a p-part and a q-part, none inside."""
    if p < 1 or q < 1:
        raise ValueError("both parts need at least one vertex")
    if p + q > MAX_VERTICES:
        raise NTooLarge(f"p+q must be at most {MAX_VERTICES}, got {p + q}")
    return from_edge_list(p + q, [(i, p + j) for i in range(p) for j in range(q)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise CycleTooShort(f"cycles need n >= 3, got {n}")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise NTooLarge(f"paths need n >= 1, got {n}")
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def petersen() -> Graph:
    """Outer 5-cycle, inner pentagram, matching spokes: 3-regular on 10."""
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return from_edge_list(10, outer + inner + spokes)


def degree_sequence(g: Graph) -> list[int]:
    """Degree of each vertex, in vertex order."""
    return [m.bit_count() for m in g.neighbor_masks()]


def is_regular(g: Graph) -> bool:
    degs = degree_sequence(g)
    return min(degs) == max(degs)


def is_connected(g: Graph) -> bool:
    """Breadth-first reachability from vertex 0."""
    masks = g.neighbor_masks()
    seen = 1
    queue = deque([0])
    while queue:
        v = queue.popleft()
        fresh = masks[v] & ~seen
        seen |= fresh
        while fresh:
            u = (fresh & -fresh).bit_length() - 1
            fresh &= fresh - 1
            queue.append(u)
    return seen == (1 << g.n) - 1


def triangle_count(g: Graph) -> int:
    """Number of triangles, via neighbor-set intersections over edges."""
    masks = g.neighbor_masks()
    total = 0
    for i, j in g.edges():
        total += (masks[i] & masks[j]).bit_count()
    return total // 3


def is_triangle_free(g: Graph) -> bool:
    return triangle_count(g) == 0


def bipartition(g: Graph) -> tuple[int, int] | None:
    """Two-coloring as a pair of vertex bitmasks, or None if not bipartite.

    Disconnected graphs are colored per component (one of possibly many
    valid colorings).
    """
    masks = g.neighbor_masks()
    color = [-1] * g.n
    for start in range(g.n):
        if color[start] >= 0:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            v = queue.popleft()
            nb = masks[v]
            while nb:
                u = (nb & -nb).bit_length() - 1
                nb &= nb - 1
                if color[u] < 0:
                    color[u] = 1 - color[v]
                    queue.append(u)
                elif color[u] == color[v]:
                    return None
    side0 = sum(1 << v for v in range(g.n) if color[v] == 0)
    return side0, ((1 << g.n) - 1) ^ side0


def is_bipartite(g: Graph) -> bool:
    return bipartition(g) is not None


def is_complete_bipartite(g: Graph) -> bool:
    """True iff g is K_{p,q} for some p, q >= 1 (so g must be connected)."""
    if g.edge_count == 0 or not is_connected(g):
        return False
    parts = bipartition(g)
    if parts is None:
        return False
    p = parts[0].bit_count()
    return g.edge_count == p * (g.n - p)
