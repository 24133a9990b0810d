import logging
from dataclasses import dataclass
from enum import Enum

import joblib
import numpy as np

from algebra.counting import FormKind, ResourceCapError, count_totally_singular
from algebra.forms import FormSpace, enumerate_totally_singular
from algebra.linalg import normalize_rows, vector_keys
from geometry.incidence import IncidenceStructure
from geometry.quadrangle import GeneralizedQuadrangle, dual, verify_gq

logger = logging.getLogger(__name__)

MEMORY = joblib.memory.Memory("./joblib_cache", verbose=0)

# Largest order of the field the defining form lives over, per family
FIELD_ORDER_CAPS = {"H3": 16, "H4": 4, "H4dual": 4}
DEFAULT_FIELD_ORDER_CAP = 8


class ClassicalFamily(str, Enum):
    W3 = "W3"
    Q4 = "Q4"
    QMINUS5 = "Qminus5"
    H3 = "H3"
    H4 = "H4"
    H4DUAL = "H4dual"

    @classmethod
    def parse(cls, tag) -> "ClassicalFamily":
        if isinstance(tag, cls):
            return tag
        for family in cls:
            if family.value.lower() == str(tag).strip().lower():
                return family
        raise ValueError(f"Unknown classical family {tag!r}; expected one of {[f.value for f in cls]}")

    @property
    def form(self) -> tuple:
        """(form kind, vector space dimension) of the defining space."""
        return {
            ClassicalFamily.W3: (FormKind.SYMPLECTIC, 4),
            ClassicalFamily.Q4: (FormKind.PARABOLIC, 5),
            ClassicalFamily.QMINUS5: (FormKind.ELLIPTIC, 6),
            ClassicalFamily.H3: (FormKind.HERMITIAN, 4),
            ClassicalFamily.H4: (FormKind.HERMITIAN, 5),
            ClassicalFamily.H4DUAL: (FormKind.HERMITIAN, 5),
        }[self]

    def order(self, q: int) -> tuple:
        return {
            ClassicalFamily.W3: (q, q),
            ClassicalFamily.Q4: (q, q),
            ClassicalFamily.QMINUS5: (q, q**2),
            ClassicalFamily.H3: (q**2, q),
            ClassicalFamily.H4: (q**2, q**3),
            ClassicalFamily.H4DUAL: (q**3, q**2),
        }[self]

    def field_order(self, q: int) -> int:
        return q * q if self.form[0] is FormKind.HERMITIAN else q


@dataclass(frozen=True, eq=False)
class Realization:
    """Coordinates of a classical quadrangle: point i is the 1-space spanned by vectors[i]."""

    family: ClassicalFamily
    q: int
    space: FormSpace
    vectors: np.ndarray

    @property
    def field(self):
        return self.space.field

    def point_indices(self, X) -> np.ndarray:
        """Indices of the projective points spanned by the rows of X."""
        keys = vector_keys(self.field, normalize_rows(self.field, X))
        own = vector_keys(self.field, self.vectors)
        indices = np.searchsorted(own, keys)
        found = (indices < len(own)) & (own[np.minimum(indices, len(own) - 1)] == keys)
        if not np.all(found):
            raise ValueError("Some vectors do not span singular points of the space")
        return indices


@MEMORY.cache
def _classicalIncidence(tag: str, q: int) -> tuple:
    family = ClassicalFamily.parse(tag)
    kind, n = family.form
    space = FormSpace.standard(kind, n, q)
    F = space.field
    points = space.singular_points()
    keys = vector_keys(F, points)
    lines = []
    for subspace in enumerate_totally_singular(space, 2):
        on_line = np.searchsorted(keys, vector_keys(F, subspace.points()))
        lines.append(tuple(sorted(on_line.tolist())))
    lines.sort()
    return len(points), lines


def classical_gq(tag, q: int, cap: int = None) -> GeneralizedQuadrangle:
    """
    The classical quadrangle of a family: totally singular points and lines of
    its defining form space. `cap` bounds the order of that space's field.
    """
    family = ClassicalFamily.parse(tag)
    limit = cap if cap is not None else FIELD_ORDER_CAPS.get(family.value, DEFAULT_FIELD_ORDER_CAP)
    if family.field_order(q) > limit:
        raise ResourceCapError(
            f"{family.value}({q}) lives over GF({family.field_order(q)}), above the cap {limit}"
        )
    if family is ClassicalFamily.H4DUAL:
        return dual(classical_gq(ClassicalFamily.H4, q, cap=limit))

    kind, n = family.form
    space = FormSpace.standard(kind, n, q)
    num_points, lines = _classicalIncidence(family.value, q)
    assert num_points == count_totally_singular(kind, n, 1, q), (
        f"{family.value}({q}) has {num_points} points, formula disagrees"
    )
    assert len(lines) == count_totally_singular(kind, n, 2, q), (
        f"{family.value}({q}) has {len(lines)} lines, formula disagrees"
    )

    realization = Realization(family, q, space, space.singular_points())
    Q = verify_gq(IncidenceStructure(num_points, lines), realization=realization)
    assert Q.order == family.order(q), f"{family.value}({q}) has order {Q.order}, expected {family.order(q)}"
    logger.info(f"Built {family.value}({q}): order {Q.order}, {Q.num_points} points, {Q.num_lines} lines")
    return Q
