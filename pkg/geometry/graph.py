from dataclasses import dataclass

import numpy as np

from geometry.incidence import IncidenceStructure


@dataclass(frozen=True, eq=False)
class IncidenceGraph:
    """Bipartite point-line graph; vertices 0..P-1 are points, P..P+L-1 lines."""

    num_points: int
    num_lines: int
    adjacency: tuple

    @property
    def num_vertices(self) -> int:
        return self.num_points + self.num_lines

    @property
    def num_edges(self) -> int:
        return sum(len(n) for n in self.adjacency) // 2

    def neighbors(self, v: int) -> tuple:
        return self.adjacency[v]

    def is_point(self, v: int) -> bool:
        return v < self.num_points

    def line_vertex(self, line: int) -> int:
        return self.num_points + line


def incidence_graph(Q) -> IncidenceGraph:
    """Accepts a quadrangle or a bare IncidenceStructure."""
    inc = Q if isinstance(Q, IncidenceStructure) else Q.structure
    P = inc.num_points
    adjacency = [tuple(P + j for j in inc.lines_through(x)) for x in range(P)]
    adjacency += [tuple(line) for line in inc.lines]
    return IncidenceGraph(P, inc.num_lines, tuple(adjacency))


def distances_from(graph: IncidenceGraph, v: int) -> np.ndarray:
    """BFS distances, -1 for unreachable vertices."""
    dist = np.full(graph.num_vertices, -1, dtype=np.int64)
    dist[v] = 0
    frontier = [v]
    while frontier:
        following = []
        for x in frontier:
            for y in graph.adjacency[x]:
                if dist[y] < 0:
                    dist[y] = dist[x] + 1
                    following.append(y)
        frontier = following
    return dist


def is_connected(graph: IncidenceGraph) -> bool:
    return graph.num_vertices == 0 or bool(np.all(distances_from(graph, 0) >= 0))


def diameter(graph: IncidenceGraph) -> int:
    best = 0
    for v in range(graph.num_vertices):
        dist = distances_from(graph, v)
        if np.any(dist < 0):
            raise ValueError(f"Graph is disconnected (vertex {v} does not reach every vertex)")
        best = max(best, int(dist.max()))
    return best


def girth(graph: IncidenceGraph) -> int:
    """Length of a shortest cycle, from a BFS tree rooted at every vertex."""
    best = None
    for root in range(graph.num_vertices):
        dist = np.full(graph.num_vertices, -1, dtype=np.int64)
        parent = np.full(graph.num_vertices, -1, dtype=np.int64)
        dist[root] = 0
        queue = [root]
        for x in queue:
            if best is not None and 2 * dist[x] >= best:
                break
            for y in graph.adjacency[x]:
                if dist[y] < 0:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif y != parent[x]:
                    length = int(dist[x] + dist[y] + 1)
                    best = length if best is None else min(best, length)
    if best is None:
        raise ValueError("Graph is acyclic; girth is undefined")
    return best
