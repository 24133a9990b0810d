import numpy as np
import pytest

from algebra.field import FieldError, FiniteField, get_field, is_prime_power, prime_power
from algebra.linalg import (
    all_vectors,
    enumerate_subspaces,
    inverse,
    matmul,
    nullspace,
    normalize_rows,
    projective_points,
    rank,
    rref,
    solve,
    vector_keys,
)
from algebra.counting import gaussian_binomial

ORDERS = [2, 3, 4, 5, 7, 8, 9, 16, 25, 27]


# ---------------------------------------------------------------------------- PRIME POWERS


@pytest.mark.parametrize("q, expected", [(2, (2, 1)), (9, (3, 2)), (64, (2, 6)), (121, (11, 2))])
def test_prime_power(q, expected):
    assert prime_power(q) == expected


@pytest.mark.parametrize("q", [0, 1, 6, 12, 100])
def test_not_prime_power(q):
    assert not is_prime_power(q)
    with pytest.raises(FieldError):
        prime_power(q)


def test_field_order_cap():
    with pytest.raises(FieldError):
        FiniteField(2, 11)


# ---------------------------------------------------------------------------- AXIOMS


@pytest.mark.parametrize("q", ORDERS)
def test_field_axioms(q):
    F = get_field(q)
    x = F.elements
    a, b = x[:, None], x[None, :]
    # Commutativity
    assert np.array_equal(F.add(a, b), F.add(b, a))
    assert np.array_equal(F.mul(a, b), F.mul(b, a))
    # Identities and inverses
    assert np.array_equal(F.add(x, 0), x)
    assert np.array_equal(F.mul(x, 1), x)
    assert np.all(F.add(x, F.neg(x)) == 0)
    assert np.all(F.mul(x[1:], F.inv(x[1:])) == 1)
    # Distributivity on a sample of triples
    c = x[(np.arange(q) * 7 + 3) % q][:, None]
    assert np.array_equal(F.mul(c, F.add(a, b)), F.add(F.mul(c, a), F.mul(c, b)))


@pytest.mark.parametrize("q", ORDERS)
def test_primitive_element(q):
    F = get_field(q)
    assert F.element_order(F.primitive_element) == q - 1
    powers = {int(F.pow(F.primitive_element, k)) for k in range(q - 1)}
    assert powers == set(range(1, q))


def test_inverse_of_zero():
    with pytest.raises(ZeroDivisionError):
        get_field(5).inv(0)


@pytest.mark.parametrize("q", [4, 8, 9, 27])
def test_frobenius_is_additive_and_multiplicative(q):
    F = get_field(q)
    x = F.elements
    a, b = x[:, None], x[None, :]
    assert np.array_equal(F.frobenius(F.add(a, b)), F.add(F.frobenius(a), F.frobenius(b)))
    assert np.array_equal(F.frobenius(F.mul(a, b)), F.mul(F.frobenius(a), F.frobenius(b)))
    assert np.array_equal(F.frobenius(x, F.f), x)


@pytest.mark.parametrize("q", [4, 9, 16, 25])
def test_conjugation_is_an_involution(q):
    F = get_field(q)
    x = F.elements
    assert np.array_equal(F.conjugate(F.conjugate(x)), x)
    fixed = x[F.conjugate(x) == x]
    assert len(fixed) == F.sqrt_order


def test_field_element_wrapper():
    F = get_field(4)
    w = F(F.primitive_element)
    assert w**3 == 1
    assert w * w.inverse() == 1
    assert w + w == 0
    assert (w - 1) + 1 == w
    assert w.conjugate() == w**2
    with pytest.raises(FieldError):
        F(4)
    with pytest.raises(FieldError):
        w + get_field(8)(1)


# ---------------------------------------------------------------------------- LINEAR ALGEBRA


def test_rref_and_rank():
    F = get_field(3)
    M = [[1, 2, 0], [2, 1, 0], [0, 0, 1]]
    R, pivots = rref(F, M)
    assert pivots == [0, 2]
    assert rank(F, M) == 2
    assert R.tolist() == [[1, 2, 0], [0, 0, 1]]


def test_nullspace_is_annihilated():
    F = get_field(5)
    M = np.array([[1, 2, 3, 4], [0, 1, 1, 1]])
    N = nullspace(F, M)
    assert N.shape == (2, 4)
    assert np.all(matmul(F, M, N.T) == 0)


@pytest.mark.parametrize("q", [2, 4, 7])
def test_inverse_and_solve(q):
    F = get_field(q)
    A = np.array([[1, 1, 0], [0, 1, 1], [0, 0, 1]])
    identity = np.eye(3, dtype=np.int64)
    assert np.array_equal(matmul(F, A, inverse(F, A)), identity)
    b = np.array([1, 0, 1])
    x = solve(F, A, b)
    assert np.array_equal(matmul(F, A, x[:, None])[:, 0], b)


def test_singular_matrix():
    with pytest.raises(ValueError):
        inverse(get_field(3), [[1, 2], [2, 1]])


def test_normalize_rows():
    F = get_field(5)
    X = normalize_rows(F, [[0, 3, 1], [2, 4, 0], [0, 0, 0]])
    assert X.tolist() == [[0, 1, 2], [1, 2, 0], [0, 0, 0]]


@pytest.mark.parametrize("q, n", [(2, 3), (3, 3), (4, 2), (2, 4)])
def test_projective_points(q, n):
    F = get_field(q)
    points = projective_points(F, n)
    assert len(points) == (q**n - 1) // (q - 1)
    keys = vector_keys(F, points)
    assert np.all(np.diff(keys) > 0)
    assert np.array_equal(normalize_rows(F, points), points)
    assert len(all_vectors(F, n)) == q**n


@pytest.mark.parametrize("q, n, k", [(2, 4, 2), (3, 3, 1), (3, 4, 2), (4, 3, 2), (2, 5, 3)])
def test_subspace_enumeration_matches_gaussian_binomial(q, n, k):
    assert len(enumerate_subspaces(get_field(q), n, k)) == gaussian_binomial(n, k, q)


def test_gaussian_binomial_values():
    assert gaussian_binomial(4, 2, 2) == 35
    assert gaussian_binomial(5, 2, 2) == 155
    assert gaussian_binomial(8, 4, 2) == 200787
    assert gaussian_binomial(4, 0, 7) == 1
    with pytest.raises(ValueError):
        gaussian_binomial(3, 4, 2)
