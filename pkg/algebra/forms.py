import logging
import dataclasses
from dataclasses import dataclass

import numpy as np

from algebra.counting import (
    FormKind,
    check_cap,
    count_totally_singular,
    witt_parameters,
)
from algebra.field import FieldElement, FiniteField, get_field
from algebra.linalg import (
    as_matrix,
    nullspace,
    projective_points,
    rank,
    rref,
    span_points,
    vector_keys,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class FormSpace:
    """
    An n-dimensional space over `field` with a nondegenerate classical form.

    `gram` is the matrix of the bilinear (sesquilinear for hermitian) form.
    Quadratic kinds also carry `quadratic`, the upper-triangular coefficient
    matrix of Q, which in characteristic 2 is not recoverable from `gram`.
    """

    field: FiniteField
    n: int
    kind: FormKind
    gram: np.ndarray
    quadratic: np.ndarray = None

    def __post_init__(self):
        object.__setattr__(self, "kind", FormKind.parse(self.kind))
        gram = as_matrix(self.field, self.gram)
        assert gram.shape == (self.n, self.n), f"Gram shape {gram.shape} != ({self.n}, {self.n})"
        gram.setflags(write=False)
        object.__setattr__(self, "gram", gram)
        if self.quadratic is not None:
            quadratic = as_matrix(self.field, self.quadratic)
            quadratic.setflags(write=False)
            object.__setattr__(self, "quadratic", quadratic)
        witt_parameters(self.kind, self.n)
        self._validate()

    def _validate(self):
        F, G, n = self.field, self.gram, self.n
        if self.kind is FormKind.SYMPLECTIC:
            if np.any(np.diag(G)) or np.any(G.T != F.neg(G)):
                raise ValueError("Symplectic Gram matrix is not alternating")
            if rank(F, G) != n:
                raise ValueError("Symplectic form is degenerate")
        elif self.kind is FormKind.HERMITIAN:
            if F.f % 2:
                raise ValueError(f"Hermitian forms need a quadratic extension, got {F}")
            if np.any(G.T != F.conjugate(G)):
                raise ValueError("Gram matrix is not hermitian")
            if rank(F, G) != n:
                raise ValueError("Hermitian form is degenerate")
        else:
            U = self.quadratic
            if U is None or U.shape != (n, n) or np.any(np.tril(U, -1)):
                raise ValueError("Quadratic forms need an upper-triangular coefficient matrix")
            if np.any(F.add(U, U.T) != G):
                raise ValueError("Gram matrix is not the polarization of the quadratic form")
            radical = nullspace(F, G)
            if F.p != 2 or n % 2 == 0:
                if len(radical):
                    raise ValueError("Quadratic form is degenerate")
            elif len(radical) != 1 or self.quadratic_values(radical)[0] == 0:
                raise ValueError("Odd-dimensional quadric in characteristic 2 is degenerate")

    @classmethod
    def standard(cls, kind, n: int, q: int) -> "FormSpace":
        """
        The canonical form of each kind: hyperbolic pairs (e_{2i}, e_{2i+1})
        followed by a kind-dependent tail. For hermitian kinds q is the order
        of the fixed field and the space is built over GF(q^2).
        """
        kind = FormKind.parse(kind)
        witt_parameters(kind, n)
        if kind is FormKind.HERMITIAN:
            F = get_field(q * q)
            gram = np.fliplr(np.eye(n, dtype=np.int64))
            return cls(F, n, kind, gram)

        F = get_field(q)
        if kind is FormKind.SYMPLECTIC:
            gram = np.zeros((n, n), dtype=np.int64)
            for i in range(0, n, 2):
                gram[i, i + 1] = 1
                gram[i + 1, i] = F.neg(1)
            return cls(F, n, kind, gram)

        U = np.zeros((n, n), dtype=np.int64)
        pairs = {FormKind.PARABOLIC: (n - 1) // 2, FormKind.HYPERBOLIC: n // 2}.get(kind, n // 2 - 1)
        for i in range(pairs):
            U[2 * i, 2 * i + 1] = 1
        if kind is FormKind.PARABOLIC:
            U[n - 1, n - 1] = 1
        elif kind is FormKind.ELLIPTIC:
            U[n - 2, n - 2] = 1
            U[n - 2, n - 1] = 1
            U[n - 1, n - 1] = anisotropic_constant(F)
        return cls(F, n, kind, F.add(U, U.T), U)

    @property
    def q(self) -> int:
        """Order of the field the counting formulas are written over."""
        if self.kind is FormKind.HERMITIAN:
            return self.field.sqrt_order
        return self.field.order

    @property
    def witt_index(self) -> int:
        return witt_parameters(self.kind, self.n).d

    def _conj(self, X):
        return self.field.conjugate(X) if self.kind is FormKind.HERMITIAN else X

    def bilinear(self, X, Y):
        """b(x, y) for broadcastable stacks of row vectors."""
        F = self.field
        Y = self._conj(np.asarray(Y, dtype=np.int64))
        W = F.sum(F.mul(self.gram, Y[..., None, :]), axis=-1)
        return F.sum(F.mul(np.asarray(X, dtype=np.int64), W), axis=-1)

    def quadratic_values(self, X):
        """Q(x) for quadratic kinds, h(x, x) for hermitian, 0 for symplectic."""
        F = self.field
        X = np.asarray(X, dtype=np.int64)
        if self.kind is FormKind.SYMPLECTIC:
            return np.zeros(X.shape[:-1], dtype=np.int64)[()]
        if self.kind is FormKind.HERMITIAN:
            return self.bilinear(X, X)
        total = np.zeros(X.shape[:-1], dtype=np.int64)
        for i, j in zip(*np.nonzero(self.quadratic)):
            term = F.mul(self.quadratic[i, j], F.mul(X[..., i], X[..., j]))
            total = F.add(total, term)
        return total[()]

    def is_singular(self, X):
        return np.asarray(self.quadratic_values(X)) == 0

    def singular_points(self) -> np.ndarray:
        points = projective_points(self.field, self.n)
        return points[self.is_singular(points)]

    def _check_vector(self, u) -> np.ndarray:
        u = np.asarray([int(x) for x in u], dtype=np.int64)
        if u.shape != (self.n,):
            raise ValueError(f"Vector of length {len(u)} in a space of dimension {self.n}")
        if np.any((u < 0) | (u >= self.field.order)):
            raise ValueError(f"Vector {u.tolist()} has entries outside {self.field}")
        return u


def anisotropic_constant(F: FiniteField) -> int:
    """Smallest mu for which x^2 + x + mu has no root in F."""
    x = F.elements
    values = F.add(F.mul(x, x), x)
    for mu in range(1, F.order):
        if not np.any(F.add(values, mu) == 0):
            return mu
    raise AssertionError(f"{F} has no irreducible x^2 + x + mu")


def evaluate_form(space: FormSpace, u, v) -> FieldElement:
    """b(u, v) under the space's bilinear or sesquilinear form."""
    u, v = space._check_vector(u), space._check_vector(v)
    return FieldElement(space.field, space.bilinear(u, v))


def singular_value(space: FormSpace, u) -> FieldElement:
    """Q(u) for quadratic kinds, h(u, u) for hermitian, always 0 for symplectic."""
    u = space._check_vector(u)
    return FieldElement(space.field, space.quadratic_values(u))


@dataclass(frozen=True)
class Subspace:
    """A subspace held by its canonical reduced row-echelon basis."""

    basis: tuple
    space: FormSpace = dataclasses.field(compare=False, hash=False, repr=False, default=None)

    @classmethod
    def from_rows(cls, space: FormSpace, rows) -> "Subspace":
        R, _ = rref(space.field, rows)
        return cls(tuple(map(tuple, R.tolist())), space)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def matrix(self) -> np.ndarray:
        return np.array(self.basis, dtype=np.int64).reshape(self.dim, -1)

    def points(self) -> np.ndarray:
        return span_points(self.space.field, self.matrix)

    def is_totally_singular(self) -> bool:
        B = self.matrix
        if not np.all(self.space.is_singular(B)):
            return False
        return not np.any(self.space.bilinear(B[:, None, :], B[None, :, :]))


def enumerate_totally_singular(space: FormSpace, k: int, cap: int = None) -> set:
    """Every totally singular k-space, grown one singular point at a time."""
    if k < 0 or k > space.witt_index:
        raise ValueError(f"k={k} exceeds the Witt index {space.witt_index}")
    predicted = count_totally_singular(space.kind, space.n, k, space.q)
    check_cap(predicted, cap, what=f"{space.kind.value} k={k} subspace enumeration")
    if k == 0:
        return {Subspace((), space)}

    F = space.field
    singular = space.singular_points()
    current = {tuple(p): Subspace((tuple(p),), space) for p in singular.tolist()}
    for level in range(2, k + 1):
        grown = {}
        for subspace in current.values():
            W = subspace.matrix
            orthogonal = np.all(space.bilinear(singular[:, None, :], W[None, :, :]) == 0, axis=1)
            covered = set(vector_keys(F, subspace.points()).tolist())
            for candidate in singular[orthogonal]:
                key = int(vector_keys(F, candidate)[0])
                if key in covered:
                    continue
                extended = Subspace.from_rows(space, np.vstack([W, candidate]))
                covered.update(vector_keys(F, extended.points()).tolist())
                grown.setdefault(extended.basis, extended)
        current = grown
        logger.debug(f"{space.kind.value} n={space.n}: {len(current)} totally singular {level}-spaces")

    found = set(current.values())
    assert len(found) == predicted, (
        f"Enumerated {len(found)} totally singular {k}-spaces, formula gives {predicted}"
    )
    return found
