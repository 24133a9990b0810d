from typing import NamedTuple

import numpy as np

from geometry.quadrangle import GeneralizedQuadrangle
from symmetry.collineations import CollineationGroup


class Flag(NamedTuple):
    point: int
    line: int


class Antiflag(NamedTuple):
    point: int
    line: int


def flags(Q: GeneralizedQuadrangle) -> list:
    return [Flag(int(P), int(line)) for P, line in np.argwhere(Q.structure.incidence_matrix)]


def antiflags(Q: GeneralizedQuadrangle) -> list:
    return [Antiflag(int(P), int(line)) for P, line in np.argwhere(~Q.structure.incidence_matrix)]


# ---------------------------------------------------------------------------- PAIR ORBITS
# Point-line pairs are coded as P * L + line and never materialized as a
# permutation domain; images are computed from generator images on demand.


def _checkDegree(G: CollineationGroup, Q: GeneralizedQuadrangle):
    if G.degree != Q.num_points + Q.num_lines:
        raise ValueError(
            f"Group of degree {G.degree} does not act on {Q.num_points} points and {Q.num_lines} lines"
        )


def _pairOrbit(G: CollineationGroup, Q: GeneralizedQuadrangle, start: int) -> np.ndarray:
    P, L = Q.num_points, Q.num_lines
    seen = np.zeros(P * L, dtype=bool)
    seen[start] = True
    frontier = np.array([start])
    while len(frontier):
        points, lines = np.divmod(frontier, L)
        images = [g.images[points] * L + (g.images[P + lines] - P) for g in G.group.generators]
        images = np.unique(np.concatenate(images or [frontier]))
        images = images[~seen[images]]
        seen[images] = True
        frontier = images
    return seen


def _pairOrbits(G: CollineationGroup, Q: GeneralizedQuadrangle, mask: np.ndarray) -> list:
    """Sizes of the orbits on the pairs selected by mask, ordered by smallest code."""
    _checkDegree(G, Q)
    remaining = mask.ravel().copy()
    sizes = []
    while remaining.any():
        orbit = _pairOrbit(G, Q, int(np.argmax(remaining)))
        sizes.append(int(orbit.sum()))
        remaining &= ~orbit
    return sizes


def flag_orbits(G: CollineationGroup, Q: GeneralizedQuadrangle) -> list:
    return _pairOrbits(G, Q, Q.structure.incidence_matrix)


def antiflag_orbits(G: CollineationGroup, Q: GeneralizedQuadrangle) -> list:
    return _pairOrbits(G, Q, ~Q.structure.incidence_matrix)


def _isPairTransitive(G: CollineationGroup, Q: GeneralizedQuadrangle, mask: np.ndarray) -> bool:
    _checkDegree(G, Q)
    codes = np.flatnonzero(mask)
    if len(codes) == 0:
        return True
    return int(_pairOrbit(G, Q, int(codes[0])).sum()) == len(codes)


def is_flag_transitive(G: CollineationGroup, Q: GeneralizedQuadrangle) -> bool:
    return _isPairTransitive(G, Q, Q.structure.incidence_matrix)


def is_antiflag_transitive(G: CollineationGroup, Q: GeneralizedQuadrangle) -> bool:
    return _isPairTransitive(G, Q, ~Q.structure.incidence_matrix)
