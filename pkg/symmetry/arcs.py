import logging

import numpy as np

from geometry.graph import IncidenceGraph, incidence_graph, is_connected
from geometry.quadrangle import GeneralizedQuadrangle
from permgroup.group import PermGroup
from symmetry.collineations import CollineationGroup
from symmetry.flags import Antiflag

logger = logging.getLogger(__name__)

MAX_ARC_LENGTH = 4

# An arc is a tuple of vertices (v0, ..., vs), consecutive ones adjacent, v_{i-1} != v_{i+1}
Arc = tuple


def s_arcs_from(graph: IncidenceGraph, v: int, s: int) -> list:
    if not 0 <= s <= MAX_ARC_LENGTH:
        raise ValueError(f"Arc length {s} outside 0..{MAX_ARC_LENGTH}")
    if not 0 <= v < graph.num_vertices:
        raise ValueError(f"Vertex {v} outside 0..{graph.num_vertices - 1}")
    arcs = [(v,)]
    for _ in range(s):
        arcs = [
            arc + (w,)
            for arc in arcs
            for w in graph.neighbors(arc[-1])
            if len(arc) < 2 or w != arc[-2]
        ]
    return arcs


def unique_3arc(Q: GeneralizedQuadrangle, af: Antiflag) -> Arc:
    """The only 3-arc from point P to line l of an antiflag (P, l)."""
    P, line = af
    if P in Q.lines[line]:
        raise ValueError(f"Point {P} lies on line {line}; not an antiflag")
    graph = incidence_graph(Q)
    target = graph.line_vertex(line)
    arcs = [arc for arc in s_arcs_from(graph, P, 3) if arc[-1] == target]
    if len(arcs) != 1:
        raise ValueError(f"Found {len(arcs)} 3-arcs from point {P} to line {line}; structure is not a GQ")
    return arcs[0]


def _arcOrbitIsEverything(stabilizer: PermGroup, arcs: list, num_vertices: int) -> bool:
    """Whether the stabilizer is transitive on the arcs, coded in base num_vertices."""
    A = np.array(arcs, dtype=np.int64)
    weights = num_vertices ** np.arange(A.shape[1], dtype=np.int64)
    codes = A @ weights
    order = np.argsort(codes)
    sorted_codes = codes[order]

    seen = np.zeros(len(arcs), dtype=bool)
    seen[0] = True
    frontier = np.array([0])
    while len(frontier):
        images = [g.images[A[frontier]] @ weights for g in stabilizer.generators]
        if not images:
            break
        images = np.concatenate(images)
        found = order[np.minimum(np.searchsorted(sorted_codes, images), len(arcs) - 1)]
        assert np.all(codes[found] == images), "Stabilizer maps an arc to a non-arc"
        found = np.unique(found[~seen[found]])
        seen[found] = True
        frontier = found
    return bool(seen.all())


def is_locally_s_arc_transitive(G: CollineationGroup, graph: IncidenceGraph, s: int) -> bool:
    """
    For one vertex per G-orbit (its smallest index), the vertex stabilizer
    must be transitive on the s-arcs starting there.
    """
    if G.degree != graph.num_vertices:
        raise ValueError(f"Group of degree {G.degree} does not act on {graph.num_vertices} vertices")
    if not is_connected(graph):
        raise ValueError("Local arc-transitivity needs a connected graph")
    for orbit in G.group.orbits():
        v = min(orbit)
        arcs = s_arcs_from(graph, v, s)
        stabilizer = G.group.stabilizer(v)
        if not _arcOrbitIsEverything(stabilizer, arcs, graph.num_vertices):
            logger.debug(f"Stabilizer of vertex {v} is not transitive on its {len(arcs)} {s}-arcs")
            return False
    return True


def local_action(G: CollineationGroup, graph: IncidenceGraph, v: int) -> PermGroup:
    """The group induced by the stabilizer of v on its sorted neighbours."""
    if not 0 <= v < graph.num_vertices:
        raise ValueError(f"Vertex {v} outside 0..{graph.num_vertices - 1}")
    neighbors = sorted(graph.neighbors(v))
    return G.group.stabilizer(v).action_on(neighbors)
