import logging

from algebra.counting import check_cap
from geometry.incidence import IncidenceStructure
from permgroup.group import PermGroup, StabilizerChain
from permgroup.permutation import Permutation

logger = logging.getLogger(__name__)

# Most cosets (points plus lines) a coset geometry may enumerate
COSET_CAP = 10**5


def canonical_coset_rep(chain: StabilizerChain, g: Permutation) -> Permutation:
    """
    The representative of the right coset A g whose base images are
    lexicographically smallest, read off the stabilizer chain of A.
    """
    for level in chain.levels:
        best = min(level.transversal, key=lambda y: g.images[y])
        g = level.transversal[best] * g
    return g


class _RightCosets:
    """Right cosets of a subgroup, indexed in discovery order."""

    def __init__(self, subgroup: PermGroup):
        self.chain = subgroup.chain
        self.index = {}
        self.reps = []

    def canonical(self, g: Permutation) -> Permutation:
        return canonical_coset_rep(self.chain, g)

    def add(self, g: Permutation) -> int:
        rep = self.canonical(g)
        key = rep.key()
        if key not in self.index:
            self.index[key] = len(self.reps)
            self.reps.append(rep)
        return self.index[key]

    def lookup(self, g: Permutation) -> int:
        return self.index[self.canonical(g).key()]

    def close(self, generators: list, start: Permutation):
        """All cosets reachable from `start` by right multiplication."""
        first = len(self.reps)
        self.add(start)
        for rep in self.reps[first:]:
            for s in generators:
                self.add(rep * s)
        return self


def _asGroup(group, G: PermGroup) -> PermGroup:
    if isinstance(group, PermGroup):
        return group
    return PermGroup(list(group), degree=G.degree, seed=G.seed)


def coset_geometry(G: PermGroup, A, B, cap: int = None) -> IncidenceStructure:
    """
    Points are the right cosets Ax, lines the right cosets By, and Ax lies
    on By when the two cosets meet. The points on By are the A-cosets
    meeting B, moved by y.
    """
    A, B = _asGroup(A, G), _asGroup(B, G)
    for name, H in (("A", A), ("B", B)):
        if not H.is_subgroup_of(G):
            raise ValueError(f"{name} is not a subgroup of G")
        if H.order() == G.order():
            raise ValueError(f"{name} is not a proper subgroup of G")
    num_points, num_lines = G.order() // A.order(), G.order() // B.order()
    check_cap(num_points + num_lines, COSET_CAP if cap is None else cap, what="coset enumeration")

    identity = Permutation.identity(G.degree)
    points = _RightCosets(A).close(G.generators, identity)
    lines = _RightCosets(B).close(G.generators, identity)
    assert len(points.reps) == num_points, f"Found {len(points.reps)} A-cosets, index is {num_points}"
    assert len(lines.reps) == num_lines, f"Found {len(lines.reps)} B-cosets, index is {num_lines}"

    meeting = _RightCosets(A).close(B.generators, identity).reps
    incidence = []
    for y in lines.reps:
        incidence.append(tuple(sorted({points.lookup(k * y) for k in meeting})))
    logger.debug(
        f"Coset geometry: {num_points} points, {num_lines} lines of size {len(meeting)}"
    )
    return IncidenceStructure(num_points, incidence, simple=False)
