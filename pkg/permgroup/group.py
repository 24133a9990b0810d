"""
Permutation groups held by a base and strong generating set.

Chains are built with a randomised Schreier-Sims phase (random elements from
product replacement are sifted, residues become strong generators) followed
by a deterministic completion in which every Schreier generator at every level
must sift to the identity. A known group order, when supplied, only stops the
random phase early; the completion still runs and the order it certifies must
equal the claim.
"""

import logging
from math import prod

import numpy as np

from permgroup.permutation import Permutation

logger = logging.getLogger(__name__)

DEFAULT_SEED = 42
RANDOM_SIFT_PATIENCE = 30  # consecutive identity residues ending the random phase
RESERVOIR_SIZE = 11


class NotInGroupError(ValueError):
    pass


########################################################################### RANDOM ELEMENTS


class ProductReplacement:
    """Approximately uniform random elements by product replacement."""

    def __init__(self, generators: list, degree: int, rng: np.random.Generator):
        self.rng = rng
        gens = [g for g in generators if not g.is_identity] or [Permutation.identity(degree)]
        self.reservoir = [gens[i % len(gens)] for i in range(max(RESERVOIR_SIZE, len(gens)))]
        self.accumulator = Permutation.identity(degree)
        for _ in range(50):
            self.sample()

    def sample(self) -> Permutation:
        i, j = self.rng.choice(len(self.reservoir), size=2, replace=False)
        factor = self.reservoir[j]
        if self.rng.random() < 0.5:
            factor = factor.inverse()
        self.reservoir[i] = self.reservoir[i] * factor
        self.accumulator = self.accumulator * self.reservoir[i]
        return self.accumulator


########################################################################### STABILIZER CHAIN


class _Level:
    __slots__ = ("base", "generators", "transversal")

    def __init__(self, base: int, degree: int):
        self.base = base
        self.generators = []
        self.transversal = {base: Permutation.identity(degree)}

    def rebuild(self):
        """Orbit of the base point with u[base] = x for every transversal entry u."""
        transversal = {self.base: self.transversal[self.base]}
        queue = [self.base]
        for x in queue:
            u = transversal[x]
            for s in self.generators:
                y = int(s.images[x])
                if y not in transversal:
                    transversal[y] = u * s
                    queue.append(y)
        self.transversal = transversal


class StabilizerChain:
    def __init__(self, degree: int, base_prefix=()):
        self.degree = degree
        self.levels = [_Level(int(b), degree) for b in base_prefix]

    @property
    def base(self) -> list:
        return [level.base for level in self.levels]

    @property
    def strong_generators(self) -> list:
        return list(self.levels[0].generators) if self.levels else []

    def order(self) -> int:
        return prod(len(level.transversal) for level in self.levels)

    def sift(self, g: Permutation, start: int = 0) -> tuple[Permutation, int]:
        """Strip g through the levels; returns the residue and the depth reached."""
        for depth in range(start, len(self.levels)):
            level = self.levels[depth]
            u = level.transversal.get(int(g.images[level.base]))
            if u is None:
                return g, depth
            g = g * u.inverse()
        return g, len(self.levels)

    def add_strong(self, h: Permutation, depth: int):
        """Add h, which fixes the first `depth` base points, as a strong generator."""
        if depth == len(self.levels):
            moved = h.support
            fresh = [int(x) for x in moved if int(x) not in self.base]
            assert fresh, "A nontrivial residue must move a point outside the base"
            self.levels.append(_Level(fresh[0], self.degree))
        for level in self.levels[: depth + 1]:
            level.generators.append(h)
            level.rebuild()

    def absorb(self, g: Permutation) -> bool:
        residue, depth = self.sift(g)
        if residue.is_identity:
            return False
        self.add_strong(residue, depth)
        return True

    def complete(self):
        """Deterministic Schreier-Sims: every Schreier generator sifts to identity."""
        i = len(self.levels) - 1
        while i >= 0:
            level = self.levels[i]
            witness = None
            for x, u in list(level.transversal.items()):
                for s in level.generators:
                    y = int(s.images[x])
                    schreier = u * s * level.transversal[y].inverse()
                    residue, depth = self.sift(schreier, i + 1)
                    if not residue.is_identity:
                        witness = (residue, depth)
                        break
                if witness:
                    break
            if witness:
                self.add_strong(*witness)
                i = witness[1]
            else:
                i -= 1

    def tail(self, start: int) -> "StabilizerChain":
        """The chain of the pointwise stabilizer of the first `start` base points."""
        chain = StabilizerChain(self.degree)
        chain.levels = self.levels[start:]
        return chain


def build_chain(
    generators: list,
    degree: int,
    base_prefix=(),
    known_order: int = None,
    seed: int = DEFAULT_SEED,
) -> StabilizerChain:
    chain = StabilizerChain(degree, base_prefix)
    for g in generators:
        chain.absorb(g)

    if known_order is None or chain.order() != known_order:
        sampler = ProductReplacement(generators, degree, np.random.default_rng(seed))
        misses = 0
        while misses < RANDOM_SIFT_PATIENCE:
            if known_order is not None and chain.order() == known_order:
                break
            misses = 0 if chain.absorb(sampler.sample()) else misses + 1

    # Reaching the claimed order early does not certify the chain
    chain.complete()
    if known_order is not None and chain.order() != known_order:
        raise ValueError(f"Group has order {chain.order()}, expected {known_order}")
    logger.debug(f"Chain on {degree} points: base {chain.base}, order {chain.order()}")
    return chain


########################################################################### GROUP


class PermGroup:
    """A permutation group with a lazily built, verified stabilizer chain."""

    def __init__(
        self,
        generators,
        degree: int = None,
        seed: int = DEFAULT_SEED,
        known_order: int = None,
    ):
        gens = [g if isinstance(g, Permutation) else Permutation(g) for g in generators]
        degrees = {g.degree for g in gens}
        if degree is not None:
            degrees.add(degree)
        if len(degrees) != 1:
            raise ValueError(f"Generators have inconsistent degrees {sorted(degrees)}")
        self.degree = degrees.pop()
        self.generators = [g for g in gens if not g.is_identity]
        self.seed = seed
        self.known_order = known_order
        self._chain = None

    @classmethod
    def _fromChain(cls, chain: StabilizerChain, seed: int) -> "PermGroup":
        group = cls(chain.strong_generators, degree=chain.degree, seed=seed)
        group._chain = chain
        return group

    @property
    def chain(self) -> StabilizerChain:
        if self._chain is None:
            self._chain = build_chain(
                self.generators, self.degree, known_order=self.known_order, seed=self.seed
            )
        return self._chain

    @property
    def base(self) -> list:
        return self.chain.base

    @property
    def strong_generators(self) -> list:
        return self.chain.strong_generators

    def order(self) -> int:
        return self.chain.order()

    def __len__(self):
        return self.order()

    def __repr__(self):
        return f"PermGroup(degree={self.degree}, generators={len(self.generators)})"

    def _check_point(self, x) -> int:
        if not 0 <= int(x) < self.degree:
            raise ValueError(f"Point {x} outside 0..{self.degree - 1}")
        return int(x)

    def contains(self, g) -> bool:
        g = g if isinstance(g, Permutation) else Permutation(g)
        if g.degree != self.degree:
            return False
        residue, depth = self.chain.sift(g)
        return residue.is_identity and depth == len(self.chain.levels)

    def __contains__(self, g):
        return self.contains(g)

    def check_member(self, g):
        if not self.contains(g):
            raise NotInGroupError(f"{g} is not an element of {self}")

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        return self.degree == other.degree and all(other.contains(g) for g in self.generators)

    def orbit(self, x) -> frozenset:
        x = self._check_point(x)
        seen = np.zeros(self.degree, dtype=bool)
        seen[x] = True
        frontier = np.array([x])
        while len(frontier):
            images = np.concatenate([g.images[frontier] for g in self.generators] or [frontier])
            images = np.unique(images[~seen[images]])
            seen[images] = True
            frontier = images
        return frozenset(np.nonzero(seen)[0].tolist())

    def orbits(self) -> list:
        """Orbits ordered by their smallest point."""
        remaining = np.ones(self.degree, dtype=bool)
        result = []
        for x in range(self.degree):
            if remaining[x]:
                orbit = self.orbit(x)
                remaining[list(orbit)] = False
                result.append(orbit)
        return result

    def is_transitive(self) -> bool:
        return self.degree <= 1 or len(self.orbit(0)) == self.degree

    def is_regular(self) -> bool:
        return self.is_transitive() and self.order() == self.degree

    def stabilizer(self, x) -> "PermGroup":
        """Point stabilizer, read off a chain whose base starts at x."""
        x = self._check_point(x)
        chain = build_chain(
            self.generators, self.degree, base_prefix=[x], known_order=self.order(), seed=self.seed
        )
        return PermGroup._fromChain(chain.tail(1), self.seed)

    def pointwise_stabilizer(self, points) -> "PermGroup":
        points = [self._check_point(x) for x in points]
        chain = build_chain(
            self.generators, self.degree, base_prefix=points, known_order=self.order(), seed=self.seed
        )
        return PermGroup._fromChain(chain.tail(len(points)), self.seed)

    def random_element(self, rng: np.random.Generator = None) -> Permutation:
        """Uniformly random element, as a product of random coset representatives."""
        rng = rng or np.random.default_rng(self.seed)
        g = Permutation.identity(self.degree)
        for level in self.chain.levels:
            reps = list(level.transversal.values())
            g = reps[rng.integers(len(reps))] * g
        return g

    def action_on(self, domain) -> "PermGroup":
        """The group induced on an invariant subset, relabelled 0..len-1."""
        domain = sorted(int(x) for x in domain)
        gens = [g.restricted(domain) for g in self.generators]
        return PermGroup(gens, degree=len(domain), seed=self.seed)


def group_from_generators(generators, seed: int = DEFAULT_SEED, known_order: int = None) -> PermGroup:
    """Build a group and its verified chain from a list of same-degree permutations."""
    generators = list(generators)
    if not generators:
        raise ValueError("At least one generator is needed to fix the degree")
    group = PermGroup(generators, seed=seed, known_order=known_order)
    group.chain
    return group


def grow_generators(candidates, degree: int, target_order: int, seed: int = DEFAULT_SEED) -> list:
    """
    Keep the candidates that enlarge the group generated so far, until the
    group reaches `target_order`. Every candidate must lie in a group of
    exactly that order.
    """
    rng = np.random.default_rng(seed)
    chain = StabilizerChain(degree)
    generators = []
    tried = 0
    for g in candidates:
        tried += 1
        if not chain.absorb(g):
            continue
        generators.append(g)
        sampler = ProductReplacement(generators, degree, rng)
        misses = 0
        while misses < RANDOM_SIFT_PATIENCE and chain.order() < target_order:
            misses = 0 if chain.absorb(sampler.sample()) else misses + 1
        if chain.order() == target_order:
            break
    if chain.order() != target_order:
        raise ValueError(
            f"Candidates generate a group of order at least {chain.order()}, expected {target_order}"
        )
    logger.debug(f"Order {target_order} reached with {len(generators)} of {tried} candidates")
    return generators
