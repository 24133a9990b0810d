import logging
from dataclasses import dataclass
from enum import Enum

import numpy as np

from geometry.incidence import IncidenceStructure

logger = logging.getLogger(__name__)


class GQErrorCode(str, Enum):
    EMPTY = "EMPTY"
    REPEATED_LINES = "REPEATED_LINES"
    NON_UNIFORM_LINES = "NON_UNIFORM_LINES"
    NON_UNIFORM_POINTS = "NON_UNIFORM_POINTS"
    TWO_LINES_THROUGH_TWO_POINTS = "TWO_LINES_THROUGH_TWO_POINTS"
    ANTIFLAG_NO_COLLINEAR_POINT = "ANTIFLAG_NO_COLLINEAR_POINT"
    ANTIFLAG_MANY_COLLINEAR_POINTS = "ANTIFLAG_MANY_COLLINEAR_POINTS"
    THIN = "THIN"
    COUNT_MISMATCH = "COUNT_MISMATCH"


class GQVerificationError(ValueError):
    def __init__(self, code: GQErrorCode, message: str, witness: tuple = ()):
        super().__init__(f"{code.value}: {message}")
        self.code = code
        self.message = message
        self.witness = tuple(witness)


@dataclass(frozen=True, eq=False)
class GeneralizedQuadrangle:
    """
    A verified generalized quadrangle of order (s, t).

    `realization` optionally carries the algebraic model the structure was
    built from; `dual_of` is set on quadrangles produced by `dual`.
    """

    structure: IncidenceStructure
    s: int
    t: int
    realization: object = None
    dual_of: "GeneralizedQuadrangle" = None

    @property
    def order(self) -> tuple:
        return (self.s, self.t)

    @property
    def num_points(self) -> int:
        return self.structure.num_points

    @property
    def num_lines(self) -> int:
        return self.structure.num_lines

    @property
    def lines(self) -> tuple:
        return self.structure.lines

    def lines_through(self, point: int) -> tuple:
        return self.structure.lines_through(point)

    def collinear(self, a: int, b: int) -> bool:
        return bool(self.structure.collinear[a, b])

    def common_line(self, a: int, b: int):
        return self.structure.common_line(a, b)

    def point_graph(self) -> np.ndarray:
        """Adjacency matrix of the collinearity graph."""
        return self.structure.collinear

    def check_counts(self) -> dict:
        """The basic identities every finite GQ satisfies, evaluated on this one."""
        s, t = self.s, self.t
        return {
            "points": self.num_points == (s + 1) * (s * t + 1),
            "lines": self.num_lines == (t + 1) * (s * t + 1),
            "divisibility": (s * t * (s + 1) * (t + 1)) % (s + t) == 0,
            "higman": s <= t * t and t <= s * s,
        }


########################################################################### VERIFICATION


def _firstTrue(mask: np.ndarray) -> tuple:
    return tuple(int(i) for i in np.argwhere(mask)[0])


def verify_gq(inc: IncidenceStructure, realization=None) -> GeneralizedQuadrangle:
    """
    Check the quadrangle axioms exhaustively and stamp the order (s, t).

    Checks run in a fixed order (repeated lines, line sizes, two lines on two
    points, antiflags, point degrees, thickness, counts) and the first failure
    raises GQVerificationError with a witness.
    """
    if inc.num_points == 0 or inc.num_lines == 0:
        raise GQVerificationError(GQErrorCode.EMPTY, "structure has no points or no lines")

    repeats = inc.repeated_lines()
    if repeats:
        raise GQVerificationError(
            GQErrorCode.REPEATED_LINES, f"lines {repeats[0]} carry the same points", repeats[0]
        )

    sizes = inc.line_sizes()
    if np.any(sizes != sizes[0]):
        j = int(np.nonzero(sizes != sizes[0])[0][0])
        raise GQVerificationError(
            GQErrorCode.NON_UNIFORM_LINES,
            f"line 0 has {sizes[0]} points, line {j} has {sizes[j]}",
            (0, j),
        )
    s = int(sizes[0]) - 1

    common = inc.common_line_counts.copy()
    np.fill_diagonal(common, 0)
    if np.any(common > 1):
        a, b = _firstTrue(common > 1)
        shared = sorted(set(inc.lines_through(a)) & set(inc.lines_through(b)))
        raise GQVerificationError(
            GQErrorCode.TWO_LINES_THROUGH_TWO_POINTS,
            f"points {a} and {b} share lines {shared}",
            (a, b, *shared[:2]),
        )

    # K[P, l]: points of l collinear with P (P itself excluded)
    M = inc.incidence_matrix
    K = inc.collinear.astype(np.int64) @ M.astype(np.int64)
    antiflags = ~M
    for mask, code, what in (
        (antiflags & (K == 0), GQErrorCode.ANTIFLAG_NO_COLLINEAR_POINT, "no point"),
        (antiflags & (K > 1), GQErrorCode.ANTIFLAG_MANY_COLLINEAR_POINTS, "several points"),
    ):
        if np.any(mask):
            P, line = _firstTrue(mask)
            raise GQVerificationError(
                code,
                f"antiflag (point {P}, line {line}) has {what} of the line collinear with the point",
                (P, line, int(K[P, line])),
            )

    degrees = inc.point_degrees()
    if np.any(degrees != degrees[0]):
        P = int(np.nonzero(degrees != degrees[0])[0][0])
        raise GQVerificationError(
            GQErrorCode.NON_UNIFORM_POINTS,
            f"point 0 is on {degrees[0]} lines, point {P} on {degrees[P]}",
            (0, P),
        )
    t = int(degrees[0]) - 1

    if s < 2 or t < 2:
        raise GQVerificationError(GQErrorCode.THIN, f"order ({s}, {t}) is not thick", (s, t))

    expected = ((s + 1) * (s * t + 1), (t + 1) * (s * t + 1))
    if (inc.num_points, inc.num_lines) != expected:
        raise GQVerificationError(
            GQErrorCode.COUNT_MISMATCH,
            f"{inc.num_points} points and {inc.num_lines} lines, order ({s}, {t}) needs {expected}",
            (inc.num_points, inc.num_lines, *expected),
        )

    logger.debug(f"Verified GQ of order ({s}, {t}): {inc.num_points} points, {inc.num_lines} lines")
    return GeneralizedQuadrangle(inc, s, t, realization)


def dual(Q: GeneralizedQuadrangle) -> GeneralizedQuadrangle:
    """Swap points and lines: dual point i is line i, dual line j lists the lines through point j."""
    lines = tuple(Q.lines_through(P) for P in range(Q.num_points))
    structure = IncidenceStructure(Q.num_lines, lines)
    return GeneralizedQuadrangle(structure, Q.t, Q.s, dual_of=Q)


########################################################################### PERPS


def _checkPoint(Q: GeneralizedQuadrangle, P) -> int:
    if not 0 <= int(P) < Q.num_points:
        raise ValueError(f"Point {P} outside 0..{Q.num_points - 1}")
    return int(P)


def perp(Q: GeneralizedQuadrangle, P: int) -> frozenset:
    P = _checkPoint(Q, P)
    return frozenset([P, *np.nonzero(Q.structure.collinear[P])[0].tolist()])


def perp_pair(Q: GeneralizedQuadrangle, P1: int, P2: int) -> frozenset:
    if _checkPoint(Q, P1) == _checkPoint(Q, P2):
        raise ValueError(f"perp_pair needs two distinct points, got {P1} twice")
    return perp(Q, P1) & perp(Q, P2)


def perp_set(Q: GeneralizedQuadrangle, S) -> frozenset:
    """Points at distance 0 or 2 from every point of S."""
    S = [_checkPoint(Q, P) for P in S]
    if not S:
        raise ValueError("perp_set of the empty set is not defined")
    mask = np.ones(Q.num_points, dtype=bool)
    for P in S:
        row = Q.structure.collinear[P].copy()
        row[P] = True
        mask &= row
    return frozenset(np.nonzero(mask)[0].tolist())


def perp_perp(Q: GeneralizedQuadrangle, S) -> frozenset:
    S = sorted({_checkPoint(Q, P) for P in S})
    C = Q.structure.collinear
    for i, a in enumerate(S):
        for b in S[i + 1 :]:
            if C[a, b]:
                raise ValueError(f"perp_perp is only defined for pairwise noncollinear points: {a}, {b}")
    inner = perp_set(Q, S)
    return perp_set(Q, inner)


def is_regular_pair(Q: GeneralizedQuadrangle, P1: int, P2: int) -> bool:
    if _checkPoint(Q, P1) == _checkPoint(Q, P2) or Q.collinear(P1, P2):
        raise ValueError(f"Points {P1} and {P2} are not a noncollinear pair")
    return len(perp_perp(Q, [P1, P2])) == Q.t + 1


########################################################################### OVOIDS


def is_ovoid(Q: GeneralizedQuadrangle, S) -> bool:
    S = sorted({_checkPoint(Q, P) for P in S})
    if not S:
        return False
    hits = Q.structure.incidence_matrix[S].sum(axis=0)
    result = bool(np.all(hits == 1))
    if result:
        assert len(S) == Q.s * Q.t + 1, f"Ovoid of size {len(S)}, expected {Q.s * Q.t + 1}"
    return result


def find_ovoid(Q: GeneralizedQuadrangle):
    """First ovoid found by backtracking over the least-covered line, or None."""
    M = Q.structure.incidence_matrix
    closed = Q.structure.collinear.copy()
    np.fill_diagonal(closed, True)
    covered = np.zeros(Q.num_lines, dtype=bool)
    blocked = np.zeros(Q.num_points, dtype=np.int64)
    chosen = []
    nodes = 0

    def search():
        nonlocal nodes
        nodes += 1
        if covered.all():
            return True
        free = M & (blocked == 0)[:, None]
        options = np.where(covered, np.iinfo(np.int64).max, free.sum(axis=0))
        line = int(np.argmin(options))
        if options[line] == 0:
            return False
        for P in np.nonzero(free[:, line])[0].tolist():
            chosen.append(P)
            covered[M[P]] = True
            blocked[closed[P]] += 1
            if search():
                return True
            blocked[closed[P]] -= 1
            covered[M[P]] = False
            chosen.pop()
        return False

    found = search()
    logger.debug(f"Ovoid search visited {nodes} nodes: {'found' if found else 'none'}")
    return tuple(sorted(chosen)) if found else None
