"""
Collineation groups of constructed quadrangles.

A collineation group acts on the vertices of the incidence graph: points
0..P-1 first, then lines P..P+L-1. Classical groups are generated from
random transvections (Siegel transformations in the orthogonal case),
kept greedily until the projective group reaches the order given by the
classical order formula. T2*(O) gets its translations, a scalar, and the
lifted stabilizer of the hyperoval.
"""

import logging

import numpy as np

from algebra.counting import FormKind
from algebra.linalg import matmul
from constructions.classical import ClassicalFamily, Realization
from constructions.hyperoval import AffineRealization, SemilinearMap, hyperoval_stabilizer
from geometry.quadrangle import GeneralizedQuadrangle
from permgroup.group import DEFAULT_SEED, PermGroup, grow_generators
from permgroup.permutation import Permutation
from sieve.orders import GroupOrderSpec, simple_group_order

logger = logging.getLogger(__name__)

MAX_CANDIDATES = 2000

CLASSICAL_GROUPS = {
    ClassicalFamily.W3: lambda q: GroupOrderSpec("PSp", 4, q),
    ClassicalFamily.Q4: lambda q: GroupOrderSpec("POmega", 5, q),
    ClassicalFamily.QMINUS5: lambda q: GroupOrderSpec("POmega-", 6, q),
    ClassicalFamily.H3: lambda q: GroupOrderSpec("PSU", 4, q),
    ClassicalFamily.H4: lambda q: GroupOrderSpec("PSU", 5, q),
}


class NotACollineationError(ValueError):
    def __init__(self, generator: int, line: int):
        super().__init__(f"Generator {generator} does not map line {line} onto a line")
        self.generator = generator
        self.line = line


class CollineationGroup:
    """A permutation group on points then lines that preserves incidence."""

    def __init__(self, Q: GeneralizedQuadrangle, group: PermGroup):
        P, L = Q.num_points, Q.num_lines
        if group.degree != P + L:
            raise ValueError(f"Group of degree {group.degree} cannot act on {P} points and {L} lines")
        lines = np.array(Q.lines, dtype=np.int64)
        for i, g in enumerate(group.generators):
            if np.any(g.images[:P] >= P):
                raise NotACollineationError(i, int(np.argmax(g.images[P:] < P)))
            image_lines = g.images[P:] - P
            moved = np.sort(g.images[lines], axis=1)
            bad = np.nonzero(np.any(moved != lines[image_lines], axis=1))[0]
            if len(bad):
                raise NotACollineationError(i, int(bad[0]))
        self.Q = Q
        self.group = group

    @classmethod
    def from_point_maps(
        cls, Q: GeneralizedQuadrangle, point_maps, seed: int = DEFAULT_SEED, known_order: int = None
    ) -> "CollineationGroup":
        """Extend point permutations to lines; each must map lines onto lines."""
        P = Q.num_points
        index = Q.structure.line_index()
        lines = np.array(Q.lines, dtype=np.int64)
        generators = []
        for i, g in enumerate(point_maps):
            g = g if isinstance(g, Permutation) else Permutation(g)
            if g.degree != P:
                raise ValueError(f"Point map {i} has degree {g.degree}, expected {P}")
            moved = np.sort(g.images[lines], axis=1)
            images = np.empty(Q.num_lines, dtype=np.int64)
            for j, line in enumerate(map(tuple, moved.tolist())):
                if line not in index:
                    raise NotACollineationError(i, j)
                images[j] = P + index[line]
            generators.append(Permutation(np.concatenate([g.images, images])))
        group = PermGroup(generators, degree=P + Q.num_lines, seed=seed, known_order=known_order)
        return cls(Q, group)

    @property
    def degree(self) -> int:
        return self.group.degree

    def order(self) -> int:
        return self.group.order()

    def point_stabilizer(self, P: int) -> PermGroup:
        return self.group.stabilizer(P)

    def line_stabilizer(self, line: int) -> PermGroup:
        return self.group.stabilizer(self.Q.num_points + line)

    def on_points(self) -> PermGroup:
        return self.group.action_on(range(self.Q.num_points))

    def on_lines(self) -> PermGroup:
        P = self.Q.num_points
        return self.group.action_on(range(P, P + self.Q.num_lines))

    def subgroup(self, generators) -> "CollineationGroup":
        return CollineationGroup(self.Q, PermGroup(list(generators), degree=self.degree, seed=self.group.seed))


def dual_collineations(G: CollineationGroup, Qd: GeneralizedQuadrangle) -> CollineationGroup:
    """Transport G to the dual quadrangle, whose points are the lines of G.Q."""
    P, L = G.Q.num_points, G.Q.num_lines
    if (Qd.num_points, Qd.num_lines) != (L, P):
        raise ValueError("Quadrangle is not the dual of the group's quadrangle")
    generators = [
        Permutation(np.concatenate([g.images[P:] - P, L + g.images[:P]]), check=False)
        for g in G.group.generators
    ]
    group = PermGroup(generators, degree=P + L, seed=G.group.seed, known_order=G.order())
    return CollineationGroup(Qd, group)


########################################################################### CLASSICAL


def _isIsometry(realization: Realization, M: np.ndarray) -> bool:
    space = realization.space
    if np.any(space.bilinear(M[:, None, :], M[None, :, :]) != space.gram):
        return False
    if space.kind.is_quadratic:
        identity = np.eye(space.n, dtype=np.int64)
        return bool(np.all(space.quadratic_values(M) == space.quadratic_values(identity)))
    return True


def _rankOne(F, M_scale, column: np.ndarray, row: np.ndarray) -> np.ndarray:
    return F.mul(M_scale, F.mul(column[:, None], row[None, :]))


def _classicalCandidates(realization: Realization, rng: np.random.Generator):
    """Random transvections (Siegel maps for quadrics) as matrices acting on row vectors."""
    space = realization.space
    F, n = space.field, space.n
    identity = np.eye(n, dtype=np.int64)
    singular = realization.vectors
    if space.kind is FormKind.HERMITIAN:
        scalars = [a for a in range(1, F.order) if F.conjugate(a) == F.neg(a)]
    else:
        scalars = list(range(1, F.order))

    while True:
        if space.kind in (FormKind.SYMPLECTIC, FormKind.HERMITIAN):
            v = singular[rng.integers(len(singular))]
            a = scalars[rng.integers(len(scalars))]
            M = F.add(identity, _rankOne(F, a, space.bilinear(identity, v), v))
        else:
            u = singular[rng.integers(len(singular))]
            v = rng.integers(F.order, size=n)
            if space.bilinear(u, v) != 0:
                continue
            bu, bv = space.bilinear(identity, u), space.bilinear(identity, v)
            Qv = space.quadratic_values(v)
            M = F.add(identity, _rankOne(F, 1, bu, v))
            M = F.sub(M, _rankOne(F, 1, bv, u))
            M = F.sub(M, _rankOne(F, Qv, bu, u))
        if np.array_equal(M, identity) or not _isIsometry(realization, M):
            continue
        yield M


def _classicalGroup(Q: GeneralizedQuadrangle, seed: int) -> CollineationGroup:
    realization = Q.realization
    spec = CLASSICAL_GROUPS[realization.family](realization.q)
    target = simple_group_order(spec)
    rng = np.random.default_rng(seed)
    F = realization.field

    def point_maps():
        for _, M in zip(range(MAX_CANDIDATES), _classicalCandidates(realization, rng)):
            images = realization.point_indices(matmul(F, realization.vectors, M))
            yield Permutation(images)

    generators = grow_generators(point_maps(), Q.num_points, target, seed=seed)
    logger.info(f"{spec} generated by {len(generators)} transvections, order {target}")
    return CollineationGroup.from_point_maps(Q, generators, seed=seed, known_order=target)


########################################################################### T2*


def t2_star_group_order(q: int, stabilizer_order: int) -> int:
    return q**3 * (q - 1) * stabilizer_order


def _t2StarGroup(Q: GeneralizedQuadrangle, seed: int) -> CollineationGroup:
    realization = Q.realization
    F = realization.field
    vectors = realization.vectors
    stabilizer = hyperoval_stabilizer(realization.hyperoval)
    target = t2_star_group_order(F.order, len(stabilizer))

    def point_map(g: SemilinearMap, shift=None) -> Permutation:
        X = g.apply(F, vectors)
        if shift is not None:
            X = F.add(X, shift[None, :])
        return Permutation(realization.point_indices(X))

    identity = SemilinearMap(np.eye(3, dtype=np.int64), 0)
    translations = []
    for k in range(3):
        for j in range(F.f):
            shift = np.zeros(3, dtype=np.int64)
            shift[k] = F.p**j
            translations.append(point_map(identity, shift))
    scalar = SemilinearMap(np.eye(3, dtype=np.int64) * F.primitive_element, 0)

    order = np.random.default_rng(seed).permutation(len(stabilizer))
    candidates = translations + [point_map(scalar)]
    candidates += [point_map(stabilizer[i]) for i in order]
    generators = grow_generators(candidates, Q.num_points, target, seed=seed)
    logger.info(f"T2*(O) collineations: {len(generators)} generators, order {target}")
    return CollineationGroup.from_point_maps(Q, generators, seed=seed, known_order=target)


def translation_group(Q: GeneralizedQuadrangle, seed: int = DEFAULT_SEED) -> CollineationGroup:
    """The q^3 translations of T2*(O), as a collineation group."""
    if not isinstance(Q.realization, AffineRealization):
        raise ValueError("Translations are only defined for T2*(O) quadrangles")
    F = Q.realization.field
    vectors = Q.realization.vectors
    maps = []
    for k in range(3):
        for j in range(F.f):
            shift = np.zeros(3, dtype=np.int64)
            shift[k] = F.p**j
            maps.append(Permutation(Q.realization.point_indices(F.add(vectors, shift[None, :]))))
    return CollineationGroup.from_point_maps(Q, maps, seed=seed, known_order=F.order**3)


def induced_collineations(Q: GeneralizedQuadrangle, tag=None, seed: int = DEFAULT_SEED) -> CollineationGroup:
    """The collineation group a constructed quadrangle inherits from its model."""
    if Q.dual_of is not None:
        return dual_collineations(induced_collineations(Q.dual_of, seed=seed), Q)
    realization = Q.realization
    if isinstance(realization, Realization):
        if tag is not None and ClassicalFamily.parse(tag) != realization.family:
            raise ValueError(f"Quadrangle was built as {realization.family.value}, not {tag}")
        return _classicalGroup(Q, seed)
    if isinstance(realization, AffineRealization):
        if tag is not None and str(tag).lower() not in ("t2star", "t2*"):
            raise ValueError(f"Quadrangle was built as T2*(O), not {tag}")
        return _t2StarGroup(Q, seed)
    raise ValueError("Quadrangle carries no construction model to induce collineations from")
