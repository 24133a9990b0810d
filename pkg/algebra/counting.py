from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

# Largest predicted enumeration a caller may request without raising the cap
ENUMERATION_CAP = 10**7


class ResourceCapError(ValueError):
    pass


class FormKind(str, Enum):
    SYMPLECTIC = "symplectic"
    PARABOLIC = "quadratic0"
    HYPERBOLIC = "quadratic+"
    ELLIPTIC = "quadratic-"
    HERMITIAN = "hermitian"

    @classmethod
    def parse(cls, kind) -> "FormKind":
        if isinstance(kind, cls):
            return kind
        key = str(kind).strip().lower().replace("−", "-").replace("∘", "0")
        try:
            return _KIND_ALIASES[key]
        except KeyError:
            raise ValueError(f"Unknown form kind {kind!r}") from None

    @property
    def is_quadratic(self) -> bool:
        return self in (FormKind.PARABOLIC, FormKind.HYPERBOLIC, FormKind.ELLIPTIC)


_KIND_ALIASES = {
    "symplectic": FormKind.SYMPLECTIC,
    "quadratic0": FormKind.PARABOLIC,
    "quadratico": FormKind.PARABOLIC,
    "parabolic": FormKind.PARABOLIC,
    "orthogonal0": FormKind.PARABOLIC,
    "quadratic+": FormKind.HYPERBOLIC,
    "hyperbolic": FormKind.HYPERBOLIC,
    "orthogonal+": FormKind.HYPERBOLIC,
    "quadratic-": FormKind.ELLIPTIC,
    "elliptic": FormKind.ELLIPTIC,
    "orthogonal-": FormKind.ELLIPTIC,
    "hermitian": FormKind.HERMITIAN,
    "unitary": FormKind.HERMITIAN,
}


@dataclass(frozen=True)
class WittParameters:
    d: int  # Witt index
    e: Fraction
    r_exponent: int  # r = q ** r_exponent


def witt_parameters(kind, n: int) -> WittParameters:
    """Witt index d and the exponent offset e of a nondegenerate classical form."""
    kind = FormKind.parse(kind)
    if n < 1:
        raise ValueError(f"Dimension {n} must be positive")
    if kind is FormKind.SYMPLECTIC:
        if n % 2:
            raise ValueError(f"Symplectic spaces have even dimension, got {n}")
        return WittParameters(n // 2, Fraction(1), 1)
    if kind is FormKind.PARABOLIC:
        if n % 2 == 0 or n < 3:
            raise ValueError(f"Parabolic quadrics need odd dimension >= 3, got {n}")
        return WittParameters((n - 1) // 2, Fraction(1), 1)
    if kind is FormKind.HYPERBOLIC:
        if n % 2:
            raise ValueError(f"Hyperbolic quadrics need even dimension, got {n}")
        return WittParameters(n // 2, Fraction(0), 1)
    if kind is FormKind.ELLIPTIC:
        if n % 2:
            raise ValueError(f"Elliptic quadrics need even dimension, got {n}")
        return WittParameters(n // 2 - 1, Fraction(2), 1)
    # Hermitian
    if n % 2:
        return WittParameters((n - 1) // 2, Fraction(3, 2), 2)
    return WittParameters(n // 2, Fraction(1, 2), 2)


def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of an n-dimensional space over GF(q)."""
    if q < 2:
        raise ValueError(f"Gaussian binomial base must be >= 2, got {q}")
    if k < 0 or k > n:
        raise ValueError(f"Need 0 <= k <= n, got n={n}, k={k}")
    numerator, denominator = 1, 1
    for i in range(1, k + 1):
        numerator *= q ** (n - k + i) - 1
        denominator *= q**i - 1
    value, remainder = divmod(numerator, denominator)
    assert remainder == 0, f"Inexact Gaussian binomial ({n} {k})_{q}"
    return value


def count_totally_singular(kind, n: int, k: int, q: int) -> int:
    """
    Number of totally singular k-spaces of the nondegenerate form of the given
    kind on an n-dimensional space. For hermitian forms q is the order of the
    fixed field of the involution, so the space lives over GF(q^2).
    """
    params = witt_parameters(kind, n)
    if k < 0 or k > params.d:
        raise ValueError(f"k={k} exceeds the Witt index {params.d} of {kind} n={n}")
    r = q**params.r_exponent
    count = gaussian_binomial(params.d, k, r)
    for i in range(1, k + 1):
        exponent = params.r_exponent * (params.d + params.e - i)
        assert exponent.denominator == 1, f"Non-integral exponent {exponent}"
        count *= q ** int(exponent) + 1
    return count


def check_cap(predicted: int, cap: int = None, what: str = "enumeration"):
    cap = ENUMERATION_CAP if cap is None else cap
    if predicted > cap:
        raise ResourceCapError(f"{what} of size {predicted} exceeds the cap {cap}")
