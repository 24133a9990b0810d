import itertools

import numpy as np

from algebra.field import FiniteField

# Linear algebra over GF(q). Matrices and vectors are int64 arrays of field
# encodings; vectors are rows.


def as_matrix(F: FiniteField, rows) -> np.ndarray:
    M = np.atleast_2d(np.asarray(rows, dtype=np.int64))
    assert np.all((M >= 0) & (M < F.order)), f"Entries outside {F}"
    return M


def rref(F: FiniteField, M) -> tuple[np.ndarray, list]:
    """Reduced row-echelon form with zero rows removed, plus pivot columns."""
    M = as_matrix(F, M).copy()
    rows, cols = M.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nonzero = np.nonzero(M[r:, c])[0]
        if len(nonzero) == 0:
            continue
        k = r + nonzero[0]
        if k != r:
            M[[r, k]] = M[[k, r]]
        M[r] = F.mul(M[r], F.inv(M[r, c]))
        for i in range(rows):
            if i != r and M[i, c]:
                M[i] = F.sub(M[i], F.mul(M[i, c], M[r]))
        pivots.append(c)
        r += 1
    return M[:r], pivots


def rank(F: FiniteField, M) -> int:
    return len(rref(F, M)[1])


def nullspace(F: FiniteField, M) -> np.ndarray:
    """Basis (as rows) of {x : M x^T = 0}."""
    M = as_matrix(F, M)
    n = M.shape[1]
    R, pivots = rref(F, M)
    free = [c for c in range(n) if c not in pivots]
    basis = np.zeros((len(free), n), dtype=np.int64)
    for i, c in enumerate(free):
        basis[i, c] = 1
        for row, pc in enumerate(pivots):
            basis[i, pc] = F.neg(R[row, c])
    return basis


def matmul(F: FiniteField, A, B) -> np.ndarray:
    A, B = np.asarray(A), np.asarray(B)
    return F.sum(F.mul(A[..., :, :, None], B[..., None, :, :]), axis=-2)


def inverse(F: FiniteField, A) -> np.ndarray:
    A = as_matrix(F, A)
    n = A.shape[0]
    assert A.shape == (n, n), f"Matrix of shape {A.shape} is not square"
    R, pivots = rref(F, np.hstack([A, np.eye(n, dtype=np.int64)]))
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise ValueError("Matrix is singular")
    return R[:, n:]


def solve(F: FiniteField, A, b) -> np.ndarray:
    """The unique x with A x = b, for square invertible A."""
    return matmul(F, inverse(F, A), np.asarray(b)[:, None])[:, 0]


def normalize_rows(F: FiniteField, X) -> np.ndarray:
    """Scale each nonzero row so that its first nonzero coordinate is 1."""
    X = np.atleast_2d(np.asarray(X, dtype=np.int64))
    nonzero = X != 0
    lead = np.argmax(nonzero, axis=1)
    lead_values = X[np.arange(len(X)), lead]
    scale = np.where(lead_values == 0, 0, F.inv_table[lead_values])
    return F.mul(X, scale[:, None])


def vector_keys(F: FiniteField, X) -> np.ndarray:
    """Integer key per row, reading the row as base-q digits."""
    X = np.atleast_2d(np.asarray(X, dtype=np.int64))
    weights = F.order ** np.arange(X.shape[1] - 1, -1, -1, dtype=np.int64)
    return X @ weights


def all_vectors(F: FiniteField, n: int) -> np.ndarray:
    if n == 0:
        return np.zeros((1, 0), dtype=np.int64)
    grid = np.indices((F.order,) * n).reshape(n, -1).T
    return grid.astype(np.int64)


def projective_points(F: FiniteField, n: int) -> np.ndarray:
    """Normalized representatives of the 1-spaces of GF(q)^n, sorted by key."""
    blocks = []
    for lead in reversed(range(n)):
        tail = all_vectors(F, n - lead - 1)
        block = np.zeros((len(tail), n), dtype=np.int64)
        block[:, lead] = 1
        block[:, lead + 1 :] = tail
        blocks.append(block)
    return np.vstack(blocks) if blocks else np.zeros((0, n), dtype=np.int64)


def span_points(F: FiniteField, basis) -> np.ndarray:
    """Normalized projective points of the row space of an RREF basis."""
    basis = as_matrix(F, basis)
    coefficients = projective_points(F, basis.shape[0])
    return normalize_rows(F, matmul(F, coefficients, basis))


def enumerate_subspaces(F: FiniteField, n: int, k: int) -> list:
    """Every k-subspace of GF(q)^n as a canonical RREF basis (tuple of tuples)."""
    subspaces = []
    values = range(F.order)
    for pivots in itertools.combinations(range(n), k):
        free = [
            (i, c)
            for i, p in enumerate(pivots)
            for c in range(p + 1, n)
            if c not in pivots
        ]
        for assignment in itertools.product(values, repeat=len(free)):
            basis = np.zeros((k, n), dtype=np.int64)
            for i, p in enumerate(pivots):
                basis[i, p] = 1
            for (i, c), value in zip(free, assignment):
                basis[i, c] = value
            subspaces.append(tuple(map(tuple, basis.tolist())))
    return subspaces
