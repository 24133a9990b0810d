from dataclasses import dataclass

import numpy as np

from permgroup.group import PermGroup

# Highest transitivity degree we ever test for
MAX_TRANSITIVITY = 4


@dataclass(frozen=True)
class BlockSystem:
    """A G-invariant partition into blocks of equal size, ordered by smallest point."""

    blocks: tuple

    @property
    def block_size(self) -> int:
        return len(self.blocks[0])

    @property
    def count(self) -> int:
        return len(self.blocks)

    @property
    def degree(self) -> int:
        return self.block_size * self.count

    def block_of(self, x: int) -> frozenset:
        for block in self.blocks:
            if x in block:
                return block
        raise ValueError(f"Point {x} is not covered by the system")

    def refines(self, other: "BlockSystem") -> bool:
        return all(any(block <= coarse for coarse in other.blocks) for block in self.blocks)

    def is_invariant(self, group: PermGroup) -> bool:
        for g in group.generators:
            for block in self.blocks:
                image = frozenset(int(g.images[x]) for x in block)
                if image not in self.blocks:
                    return False
        return True


def _find(parent: np.ndarray, x: int) -> int:
    root = x
    while parent[root] != root:
        root = parent[root]
    while parent[x] != root:
        parent[x], x = root, parent[x]
    return int(root)


def finest_block_system(group: PermGroup, a: int, b: int) -> BlockSystem:
    """Smallest invariant partition with a and b in one block (union-find closure)."""
    parent = np.arange(group.degree)
    parent[_find(parent, b)] = _find(parent, a)
    queue = [(a, b)]
    while queue:
        x, y = queue.pop()
        for g in group.generators:
            gx, gy = int(g.images[x]), int(g.images[y])
            rx, ry = _find(parent, gx), _find(parent, gy)
            if rx != ry:
                parent[max(rx, ry)] = min(rx, ry)
                queue.append((gx, gy))

    classes = {}
    for x in range(group.degree):
        classes.setdefault(_find(parent, x), []).append(x)
    blocks = tuple(sorted((frozenset(c) for c in classes.values()), key=min))
    sizes = {len(block) for block in blocks}
    assert len(sizes) == 1, f"Blocks of unequal sizes {sorted(sizes)} from a transitive group"
    return BlockSystem(blocks)


def minimal_block_systems(group: PermGroup) -> list:
    """All minimal nontrivial block systems of a transitive group."""
    if not group.is_transitive():
        raise ValueError("Block systems are only defined here for transitive groups")
    candidates = []
    for y in range(1, group.degree):
        system = finest_block_system(group, 0, y)
        if system.count > 1 and system not in candidates:
            candidates.append(system)
    return [
        system
        for system in candidates
        if not any(other != system and other.refines(system) for other in candidates)
    ]


def is_primitive(group: PermGroup) -> bool:
    return not minimal_block_systems(group)


def is_k_transitive(group: PermGroup, k: int) -> bool:
    return transitivity_degree(group, k) >= k


def transitivity_degree(group: PermGroup, max_k: int = MAX_TRANSITIVITY) -> int:
    """Largest k <= max_k for which the group is k-transitive."""
    if max_k > MAX_TRANSITIVITY:
        raise ValueError(f"Transitivity is only tested up to k = {MAX_TRANSITIVITY}")
    fixed = []
    stabilizer = group
    for k in range(1, min(max_k, group.degree) + 1):
        remaining = [x for x in range(group.degree) if x not in fixed]
        if len(stabilizer.orbit(remaining[0])) != len(remaining):
            return k - 1
        fixed.append(remaining[0])
        if k < max_k:
            stabilizer = group.pointwise_stabilizer(fixed)
    return min(max_k, group.degree)
