"""
JSON interchange for geometries, collineation groups and sieve reports.

Every document carries "format_version". Files are UTF-8 with LF line
endings and two-space indentation, so fixtures diff cleanly.
"""

import json
import os
from dataclasses import dataclass, field

from geometry.incidence import IncidenceStructure
from geometry.quadrangle import GeneralizedQuadrangle
from permgroup.group import DEFAULT_SEED, PermGroup
from permgroup.permutation import Permutation, check_images

FORMAT_VERSION = 1


class DocumentError(ValueError):
    pass


def _require(obj: dict, key: str, kind, where: str):
    if key not in obj:
        raise DocumentError(f"{where} document is missing {key!r}")
    value = obj[key]
    if not isinstance(value, kind) or isinstance(value, bool) and kind is not bool:
        raise DocumentError(f"{where} field {key!r} has type {type(value).__name__}")
    return value


def _checkVersion(obj, where: str):
    if not isinstance(obj, dict):
        raise DocumentError(f"{where} document must be a JSON object")
    version = _require(obj, "format_version", int, where)
    if version != FORMAT_VERSION:
        raise DocumentError(f"{where} document has format version {version}, expected {FORMAT_VERSION}")


def dumps(obj: dict) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def write_json(obj: dict, path: str):
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as file:
        file.write(dumps(obj))


def read_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as file:
            return json.load(file)
    except json.JSONDecodeError as e:
        raise DocumentError(f"{path}: invalid JSON ({e})") from e


# ---------------------------------------------------------------------------- GEOMETRY


@dataclass
class GeometryDocument:
    num_points: int
    lines: list
    metadata: dict = field(default_factory=dict)
    order: tuple = None

    def __post_init__(self):
        self.lines = [sorted(int(x) for x in line) for line in self.lines]
        if self.order is not None:
            self.order = tuple(int(x) for x in self.order)

    @classmethod
    def from_quadrangle(cls, Q: GeneralizedQuadrangle, metadata: dict = None) -> "GeometryDocument":
        return cls(Q.num_points, [list(line) for line in Q.lines], dict(metadata or {}), Q.order)

    def to_structure(self) -> IncidenceStructure:
        """Repeated lines are kept so that verification can report them."""
        try:
            return IncidenceStructure(self.num_points, self.lines, simple=False)
        except ValueError as e:
            raise DocumentError(str(e)) from e

    def to_dict(self) -> dict:
        return {
            "format_version": FORMAT_VERSION,
            "metadata": self.metadata,
            "num_points": self.num_points,
            "lines": self.lines,
            "order": list(self.order) if self.order is not None else None,
        }

    @classmethod
    def from_dict(cls, obj) -> "GeometryDocument":
        _checkVersion(obj, "Geometry")
        num_points = _require(obj, "num_points", int, "Geometry")
        lines = _require(obj, "lines", list, "Geometry")
        for i, line in enumerate(lines):
            if not isinstance(line, list) or not all(isinstance(x, int) for x in line):
                raise DocumentError(f"Geometry line {i} is not a list of point indices")
        metadata = obj.get("metadata") or {}
        if not isinstance(metadata, dict):
            raise DocumentError("Geometry metadata must be an object")
        order = obj.get("order")
        if order is not None and (len(order) != 2 or not all(isinstance(x, int) for x in order)):
            raise DocumentError(f"Geometry order must be a pair of integers, got {order}")
        return cls(num_points, lines, metadata, order)


def save_geometry(Q: GeneralizedQuadrangle, path: str, metadata: dict = None) -> GeometryDocument:
    document = GeometryDocument.from_quadrangle(Q, metadata)
    write_json(document.to_dict(), path)
    return document


def load_geometry(path: str) -> GeometryDocument:
    return GeometryDocument.from_dict(read_json(path))


# ---------------------------------------------------------------------------- GROUP


@dataclass
class GroupDocument:
    degree: int
    generators: list
    order: int = None

    def __post_init__(self):
        try:
            self.generators = [check_images(g).tolist() for g in self.generators]
        except ValueError as e:
            raise DocumentError(f"Generator is not a bijection: {e}") from e
        bad = [i for i, g in enumerate(self.generators) if len(g) != self.degree]
        if bad:
            raise DocumentError(f"Generator {bad[0]} does not have degree {self.degree}")

    @classmethod
    def from_group(cls, group: PermGroup) -> "GroupDocument":
        return cls(group.degree, [g.images.tolist() for g in group.generators], group.order())

    def to_group(self, seed: int = DEFAULT_SEED) -> PermGroup:
        """The group, with its claimed order certified by the stabilizer chain."""
        generators = [Permutation(g, check=False) for g in self.generators]
        group = PermGroup(generators, degree=self.degree, seed=seed, known_order=self.order)
        try:
            group.chain
        except ValueError as e:
            raise DocumentError(f"Claimed order does not hold: {e}") from e
        return group

    def to_dict(self) -> dict:
        return {
            "format_version": FORMAT_VERSION,
            "degree": self.degree,
            "generators": self.generators,
            "order": self.order,
        }

    @classmethod
    def from_dict(cls, obj) -> "GroupDocument":
        _checkVersion(obj, "Group")
        degree = _require(obj, "degree", int, "Group")
        generators = _require(obj, "generators", list, "Group")
        order = obj.get("order")
        if order is not None and (not isinstance(order, int) or order < 1):
            raise DocumentError(f"Group order must be a positive integer, got {order!r}")
        return cls(degree, generators, order)


def save_group(group: PermGroup, path: str) -> GroupDocument:
    document = GroupDocument.from_group(group)
    write_json(document.to_dict(), path)
    return document


def load_group(path: str) -> GroupDocument:
    return GroupDocument.from_dict(read_json(path))


# ---------------------------------------------------------------------------- SIEVE


@dataclass
class SieveReport:
    """One sieve run, rendered both as JSON and as a console table from the same dict."""

    kind: str  # "table", "order" or "pair"
    title: str
    columns: list
    rows: list
    discrepancies: int = 0
    feasible: bool = None
    unchecked: int = 0

    @classmethod
    def from_table(cls, report) -> "SieveReport":
        rows = [row.to_dict() for row in report.rows]
        return cls(
            "table",
            f"{report.table}: {report.title}",
            list(report.columns),
            rows,
            len(report.discrepancies),
            unchecked=len(report.unchecked),
        )

    @classmethod
    def from_case(cls, case) -> "SieveReport":
        rows = [check.to_dict() for check in case.verdict.checks]
        return cls("order", f"N = {case.N}", ["test", "inputs", "outcome", "witness"], rows, feasible=case.feasible)

    @classmethod
    def from_verdict(cls, pair, verdict) -> "SieveReport":
        rows = [check.to_dict() for check in verdict.checks]
        s, t = pair
        return cls("pair", f"order ({s},{t})", ["test", "inputs", "outcome", "witness"], rows, feasible=verdict.passed)

    @property
    def exit_code(self) -> int:
        return 3 if self.discrepancies else 0

    def to_dict(self) -> dict:
        return {
            "format_version": FORMAT_VERSION,
            "kind": self.kind,
            "title": self.title,
            "columns": self.columns,
            "rows": self.rows,
            "discrepancies": self.discrepancies,
            "feasible": self.feasible,
            "unchecked": self.unchecked,
        }
