from dataclasses import dataclass
from functools import cached_property

import numpy as np


@dataclass(frozen=True, eq=False)
class IncidenceStructure:
    """
    Points 0..num_points-1 and lines given as sorted tuples of point indices.

    A structure is simple when no two lines carry the same point set; coset
    geometries may legitimately produce repeated lines, so they are built with
    simple=False and rejected later by quadrangle verification.
    """

    num_points: int
    lines: tuple
    simple: bool = True

    def __post_init__(self):
        lines = tuple(tuple(sorted(int(x) for x in line)) for line in self.lines)
        object.__setattr__(self, "lines", lines)
        if self.num_points < 0:
            raise ValueError(f"Negative point count {self.num_points}")
        for i, line in enumerate(lines):
            if not line:
                raise ValueError(f"Line {i} is empty")
            if line[0] < 0 or line[-1] >= self.num_points:
                raise ValueError(f"Line {i} has a point outside 0..{self.num_points - 1}")
            if len(set(line)) != len(line):
                raise ValueError(f"Line {i} repeats a point")
        if self.simple and len(set(lines)) != len(lines):
            first = self.repeated_lines()[0]
            raise ValueError(f"Lines {first[0]} and {first[1]} carry the same points")

    @property
    def num_lines(self) -> int:
        return len(self.lines)

    def repeated_lines(self) -> list:
        seen = {}
        repeats = []
        for i, line in enumerate(self.lines):
            if line in seen:
                repeats.append((seen[line], i))
            else:
                seen[line] = i
        return repeats

    @cached_property
    def incidence_matrix(self) -> np.ndarray:
        M = np.zeros((self.num_points, self.num_lines), dtype=bool)
        for j, line in enumerate(self.lines):
            M[list(line), j] = True
        M.setflags(write=False)
        return M

    @cached_property
    def common_line_counts(self) -> np.ndarray:
        """Number of lines through each pair of points (diagonal: point degrees)."""
        M = self.incidence_matrix.astype(np.int64)
        counts = M @ M.T
        counts.setflags(write=False)
        return counts

    @cached_property
    def collinear(self) -> np.ndarray:
        """Boolean matrix of distinct collinear point pairs."""
        C = self.common_line_counts > 0
        np.fill_diagonal(C, False)
        C.setflags(write=False)
        return C

    @cached_property
    def _linesThrough(self) -> tuple:
        through = [[] for _ in range(self.num_points)]
        for j, line in enumerate(self.lines):
            for x in line:
                through[x].append(j)
        return tuple(tuple(ls) for ls in through)

    def lines_through(self, point: int) -> tuple:
        return self._linesThrough[point]

    def line_sizes(self) -> np.ndarray:
        return self.incidence_matrix.sum(axis=0)

    def point_degrees(self) -> np.ndarray:
        return self.incidence_matrix.sum(axis=1)

    def common_line(self, a: int, b: int):
        """Index of a line through both points, or None."""
        shared = set(self._linesThrough[a]) & set(self._linesThrough[b])
        return min(shared) if shared else None

    def line_index(self) -> dict:
        """Map from point tuple to line index."""
        return {line: j for j, line in enumerate(self.lines)}

    def flag_count(self) -> int:
        return int(self.incidence_matrix.sum())

    def without_line(self, j: int) -> "IncidenceStructure":
        lines = self.lines[:j] + self.lines[j + 1 :]
        return IncidenceStructure(self.num_points, lines, self.simple)
