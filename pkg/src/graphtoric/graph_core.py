"""Connected trivalent graphs with loops and multi-edges allowed.

A loop counts twice toward the degree of its vertex, so a trivalent graph
of genus g = |E| - |V| + 1 always has 3g-3 edges and 2g-2 vertices.  Each
vertex stands for a pair of pants (trinion) and each edge for one of the
3g-3 curves along which the trinions of a genus-g surface are glued; the
per-vertex triples of incident edge indices drive everything downstream.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple


class GraphError(Exception):
    """Invalid trivalent graph data."""


class DegreeViolation(GraphError):
    def __init__(self, vertex: int, degree: int):
        super().__init__(f"vertex {vertex} has degree {degree}, expected 3")
        self.vertex = vertex
        self.degree = degree


class Disconnected(GraphError):
    def __init__(self):
        super().__init__("graph is not connected")


class GenusTooSmall(GraphError):
    def __init__(self, genus: int):
        super().__init__(f"genus {genus} is below the minimum of 2")
        self.genus = genus


class GraphSyntaxError(GraphError):
    def __init__(self, line_no: int, text: str):
        super().__init__(f"line {line_no}: expected two non-negative integers, got {text!r}")
        self.line_no = line_no


class TrinionTriple(NamedTuple):
    """Sorted edge indices of the three boundary circles at one vertex.

    A loop's index appears twice, so the multiset of all triples contains
    every edge index exactly twice.
    """

    vertex: int
    edges: tuple[int, int, int]


@dataclass(frozen=True)
class TrivalentGraph:
    """A validated trivalent graph; immutable after construction.

    Vertices are 0..n_vertices-1 and an edge is an unordered endpoint
    pair; the edge index is the position in ``edges``.
    """

    n_vertices: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(
            self, "edges", tuple((int(u), int(v)) for u, v in self.edges)
        )
        if self.n_vertices <= 0:
            raise GraphError("graph has no vertices")
        degree = [0] * self.n_vertices
        for u, v in self.edges:
            if not (0 <= u < self.n_vertices and 0 <= v < self.n_vertices):
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside the vertex range")
            degree[u] += 1
            degree[v] += 1
        for vertex, deg in enumerate(degree):
            if deg != 3:
                raise DegreeViolation(vertex, deg)
        if not _connected(self.n_vertices, self.edges):
            raise Disconnected()
        if self.genus < 2:
            raise GenusTooSmall(self.genus)

    @property
    def genus(self) -> int:
        return len(self.edges) - self.n_vertices + 1

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def is_loop_free(self) -> bool:
        return all(u != v for u, v in self.edges)

    def trinion_triples(self) -> list[TrinionTriple]:
        """One sorted triple of incident edge indices per vertex."""
        incident: list[list[int]] = [[] for _ in range(self.n_vertices)]
        for index, (u, v) in enumerate(self.edges):
            incident[u].append(index)
            incident[v].append(index)
        return [
            TrinionTriple(vertex, tuple(sorted(ids)))  # type: ignore[arg-type]
            for vertex, ids in enumerate(incident)
        ]


def validate(edges: Iterable[tuple[int, int]], n_vertices: int | None = None) -> TrivalentGraph:
    """Build a TrivalentGraph from raw endpoint pairs.

    The vertex set is {0, ..., n_vertices-1}; when n_vertices is omitted
    it is inferred as the largest endpoint plus one.  A vertex id missing
    from the edge list therefore surfaces as DegreeViolation(v, 0).
    """
    edge_list = tuple((int(u), int(v)) for u, v in edges)
    if not edge_list:
        raise GraphError("graph has no edges")
    if n_vertices is None:
        n_vertices = max(max(u, v) for u, v in edge_list) + 1
    return TrivalentGraph(n_vertices, edge_list)


def genus(graph: TrivalentGraph) -> int:
    return graph.genus


def multi_theta(g: int) -> TrivalentGraph:
    """The genus-g graph of a vertical oval crossed by g-1 horizontal edges.

    Vertices form two columns of g-1, numbered left column top-down then
    right column top-down.  The oval runs down the left column, across,
    up the right column and back, so the top and the bottom vertex pairs
    carry double edges; for g=2 the whole thing collapses to two vertices
    joined by a triple edge.  Edge order: oval edges along the traversal,
    then horizontal edges top-down.
    """
    if g < 2:
        raise GenusTooSmall(g)
    k = g - 1
    left = list(range(k))
    right = list(range(k, 2 * k))
    cycle = left + right[::-1]
    oval = [
        (min(a, b), max(a, b))
        for a, b in zip(cycle, cycle[1:] + cycle[:1])
    ]
    horizontal = [(left[i], right[i]) for i in range(k)]
    return TrivalentGraph(2 * k, tuple(oval + horizontal))


def parse_graph(text: str) -> TrivalentGraph:
    """Parse the plain text edge-list format.

    One edge per line as two whitespace-separated non-negative integers;
    blank lines and ``#`` comments are ignored; the edge index is the
    0-based position among the edge lines.
    """
    edges = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise GraphSyntaxError(line_no, raw.strip())
        edges.append((int(parts[0]), int(parts[1])))
    if not edges:
        raise GraphError("no edges found in graph text")
    return validate(edges)


def serialize_graph(graph: TrivalentGraph) -> str:
    """Inverse of parse_graph on validated graphs; edge order preserved."""
    return "".join(f"{u} {v}\n" for u, v in graph.edges)


def _connected(n: int, edges: tuple[tuple[int, int], ...]) -> bool:
    adjacency: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adjacency[u].append(v)
        adjacency[v].append(u)
    seen = [False] * n
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        x = stack.pop()
        for y in adjacency[x]:
            if not seen[y]:
                seen[y] = True
                count += 1
                stack.append(y)
    return count == n
