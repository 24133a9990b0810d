from functools import lru_cache

import numpy as np


@lru_cache(maxsize=None)
def _identityImages(degree: int) -> np.ndarray:
    images = np.arange(degree, dtype=np.int64)
    images.setflags(write=False)
    return images


def check_images(images) -> np.ndarray:
    """Raise ValueError unless `images` is a bijection of 0..m-1."""
    images = np.array(images, dtype=np.int64)
    if images.ndim != 1:
        raise ValueError("A permutation is a one-dimensional image array")
    m = len(images)
    if np.any((images < 0) | (images >= m)) or len(np.unique(images)) != m:
        raise ValueError(f"Not a permutation of 0..{m - 1}: {images.tolist()}")
    return images


class Permutation:
    """
    A bijection of {0, ..., m-1} held as its image array.

    Products read left to right: (a * b)[x] = b[a[x]], i.e. apply a, then b.
    """

    __slots__ = ("images", "_inverse", "_key")

    def __init__(self, images, check: bool = True):
        images = check_images(images) if check else np.asarray(images, dtype=np.int64)
        images.setflags(write=False)
        self.images = images
        self._inverse = None
        self._key = None

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(_identityImages(degree), check=False)

    @classmethod
    def from_cycles(cls, degree: int, *cycles) -> "Permutation":
        images = np.arange(degree, dtype=np.int64)
        for cycle in cycles:
            cycle = list(cycle)
            if len(set(cycle)) != len(cycle):
                raise ValueError(f"Cycle {cycle} repeats a point")
            # Applied left to right, like products
            step = np.arange(degree, dtype=np.int64)
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                step[a] = b
            images = step[images]
        return cls(images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __getitem__(self, x):
        return self.images[x]

    def __call__(self, x):
        return int(self.images[x])

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.degree != other.degree:
            raise ValueError(f"Degrees differ: {self.degree} and {other.degree}")
        return Permutation(other.images[self.images], check=False)

    def __pow__(self, k: int) -> "Permutation":
        result = Permutation.identity(self.degree)
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> "Permutation":
        if self._inverse is None:
            images = np.empty_like(self.images)
            images[self.images] = np.arange(self.degree)
            self._inverse = Permutation(images, check=False)
            self._inverse._inverse = self
        return self._inverse

    @property
    def is_identity(self) -> bool:
        return bool(np.array_equal(self.images, _identityImages(self.degree)))

    @property
    def support(self) -> np.ndarray:
        return np.nonzero(self.images != _identityImages(self.degree))[0]

    def cycles(self) -> list:
        seen = np.zeros(self.degree, dtype=bool)
        result = []
        for start in range(self.degree):
            if seen[start] or self.images[start] == start:
                continue
            cycle = [start]
            seen[start] = True
            x = int(self.images[start])
            while x != start:
                cycle.append(x)
                seen[x] = True
                x = int(self.images[x])
            result.append(tuple(cycle))
        return result

    def order(self) -> int:
        return int(np.lcm.reduce([len(c) for c in self.cycles()] or [1]))

    def restricted(self, domain) -> "Permutation":
        """The induced permutation on an invariant subset, relabelled 0..len-1."""
        domain = np.asarray(domain, dtype=np.int64)
        position = np.full(self.degree, -1, dtype=np.int64)
        position[domain] = np.arange(len(domain))
        images = position[self.images[domain]]
        if np.any(images < 0):
            raise ValueError("Domain is not invariant under the permutation")
        return Permutation(images, check=False)

    def key(self) -> bytes:
        if self._key is None:
            self._key = self.images.tobytes()
        return self._key

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        body = "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles())
        return f"Permutation({body or '()'}, degree={self.degree})"

    def tolist(self) -> list:
        return self.images.tolist()
