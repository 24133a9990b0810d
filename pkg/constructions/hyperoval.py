import itertools
import logging
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from algebra.field import FiniteField, get_field, prime_power
from algebra.linalg import (
    all_vectors,
    inverse,
    matmul,
    normalize_rows,
    vector_keys,
)
from geometry.incidence import IncidenceStructure
from geometry.quadrangle import GeneralizedQuadrangle, verify_gq

logger = logging.getLogger(__name__)


def _det3(F: FiniteField, rows: np.ndarray):
    """Determinants of a stack of 3x3 matrices."""
    a, b, c = rows[..., 0, :], rows[..., 1, :], rows[..., 2, :]
    minor = lambda i, j: F.sub(F.mul(b[..., i], c[..., j]), F.mul(b[..., j], c[..., i]))
    total = F.mul(a[..., 0], minor(1, 2))
    total = F.sub(total, F.mul(a[..., 1], minor(0, 2)))
    return F.add(total, F.mul(a[..., 2], minor(0, 1)))


@dataclass(frozen=True, eq=False)
class Hyperoval:
    """q+2 points of PG(2,q), q even, no three collinear; rows are normalized and sorted by key."""

    field: FiniteField
    points: np.ndarray

    def __post_init__(self):
        F = self.field
        if F.p != 2:
            raise ValueError(f"Hyperovals live in planes of even order, got {F}")
        points = normalize_rows(F, self.points)
        points = points[np.argsort(vector_keys(F, points))]
        points.setflags(write=False)
        object.__setattr__(self, "points", points)
        if len(points) != F.order + 2:
            raise ValueError(f"A hyperoval of PG(2,{F.order}) has {F.order + 2} points, got {len(points)}")
        if len(np.unique(vector_keys(F, points))) != len(points):
            raise ValueError("Hyperoval points repeat")
        triples = np.array(list(itertools.combinations(range(len(points)), 3)))
        singular = _det3(F, points[triples]) == 0
        if np.any(singular):
            raise ValueError(f"Points {triples[np.argmax(singular)].tolist()} of the hyperoval are collinear")

    @property
    def q(self) -> int:
        return self.field.order

    def __len__(self):
        return len(self.points)


def regular_hyperoval(q: int) -> Hyperoval:
    """The conic {(1 : x : x^2)} together with its nucleus-completing points (0:1:0), (0:0:1)."""
    p, _ = prime_power(q)
    if p != 2:
        raise ValueError(f"Regular hyperovals need even q, got {q}")
    F = get_field(q)
    x = F.elements
    conic = np.stack([np.ones_like(x), x, F.mul(x, x)], axis=1)
    extra = np.array([[0, 1, 0], [0, 0, 1]], dtype=np.int64)
    return Hyperoval(F, np.vstack([conic, extra]))


########################################################################### T2*


@dataclass(frozen=True, eq=False)
class AffineRealization:
    """Points of T2*(O) are the vectors of GF(q)^3; point index = base-q key of the vector."""

    hyperoval: Hyperoval

    @property
    def field(self) -> FiniteField:
        return self.hyperoval.field

    @property
    def vectors(self) -> np.ndarray:
        return all_vectors(self.field, 3)

    def point_indices(self, X) -> np.ndarray:
        return vector_keys(self.field, X)


def t2_star(O: Hyperoval) -> GeneralizedQuadrangle:
    """
    Affine points of AG(3,q), and as lines the affine lines whose direction
    is a point of the hyperoval (placed in the plane at infinity).
    """
    F = O.field
    vectors = all_vectors(F, 3)
    lam = F.elements
    lines = []
    for d in O.points:
        on_line = F.add(vectors[:, None, :], F.mul(lam[None, :, None], d[None, None, :]))
        keys = np.sort(vector_keys(F, on_line.reshape(-1, 3)).reshape(len(vectors), F.order), axis=1)
        lines.extend(map(tuple, np.unique(keys, axis=0).tolist()))
    assert len(lines) == (O.q + 2) * O.q**2, f"Found {len(lines)} lines, expected {(O.q + 2) * O.q**2}"
    structure = IncidenceStructure(len(vectors), sorted(lines))
    Q = verify_gq(structure, realization=AffineRealization(O))
    logger.info(f"Built T2*(O) over GF({O.q}): order {Q.order}, {Q.num_points} points, {Q.num_lines} lines")
    return Q


########################################################################### STABILIZER


class SemilinearMap(NamedTuple):
    """x -> frobenius(x, k) @ matrix on row vectors."""

    matrix: np.ndarray
    k: int

    def apply(self, F: FiniteField, X) -> np.ndarray:
        return matmul(F, F.frobenius(np.atleast_2d(X), self.k), self.matrix)


def _frameMatrix(F: FiniteField, rows: np.ndarray) -> np.ndarray:
    """Rows of the first three points rescaled so that they sum to the fourth."""
    B = rows[:3]
    c = matmul(F, rows[3][None, :], inverse(F, B))[0]
    return F.mul(c[:, None], B)


def hyperoval_stabilizer(O: Hyperoval) -> list:
    """
    Every semilinear map of PG(2,q) fixing O, one matrix per projective map.

    Four points of O form a frame, so a map is fixed by its field automorphism
    and the images of the first four points; those images run over ordered
    4-tuples of O.
    """
    F = O.field
    keys = set(vector_keys(F, O.points).tolist())
    result = []
    for k in range(F.f):
        source = _frameMatrix(F, F.frobenius(O.points[:4], k))
        source_inverse = inverse(F, source)
        for images in itertools.permutations(range(len(O)), 4):
            target = _frameMatrix(F, O.points[list(images)])
            A = matmul(F, source_inverse, target)
            A = normalize_rows(F, A.reshape(1, -1)).reshape(3, 3)
            g = SemilinearMap(A, k)
            image = normalize_rows(F, g.apply(F, O.points))
            if set(vector_keys(F, image).tolist()) == keys:
                result.append(g)
    logger.debug(f"Hyperoval of PG(2,{F.order}) has a stabilizer of order {len(result)}")
    return result
