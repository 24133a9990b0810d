import logging
from functools import lru_cache

import numpy as np
from sympy import factorint, isprime, primitive_root

logger = logging.getLogger(__name__)

# Largest field we build full addition/multiplication tables for
MAX_FIELD_ORDER = 1024

# Conway polynomials, coefficients listed from the constant term upwards
CONWAY_POLYNOMIALS = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 1, 1, 0, 1),
    (2, 7): (1, 1, 0, 0, 0, 0, 0, 1),
    (2, 8): (1, 0, 1, 1, 1, 0, 0, 0, 1),
    (2, 9): (1, 0, 0, 0, 1, 0, 0, 0, 0, 1),
    (2, 10): (1, 1, 1, 1, 0, 1, 1, 0, 0, 0, 1),
    (3, 2): (2, 2, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 0, 0, 2, 1),
    (3, 5): (1, 2, 0, 0, 0, 1),
    (3, 6): (2, 2, 1, 0, 2, 0, 1),
    (5, 2): (2, 4, 1),
    (5, 3): (3, 3, 0, 1),
    (5, 4): (2, 1, 4, 0, 1),
    (7, 2): (3, 6, 1),
    (7, 3): (4, 0, 6, 1),
    (11, 2): (2, 7, 1),
    (13, 2): (2, 12, 1),
}


class FieldError(ValueError):
    pass


def prime_power(q: int) -> tuple[int, int]:
    """Return (p, f) with q = p**f, or raise FieldError."""
    if not isinstance(q, (int, np.integer)) or q < 2:
        raise FieldError(f"{q} is not a prime power")
    factors = factorint(int(q))
    if len(factors) != 1:
        raise FieldError(f"{q} is not a prime power")
    ((p, f),) = factors.items()
    return int(p), int(f)


def is_prime_power(q: int) -> bool:
    try:
        prime_power(q)
    except FieldError:
        return False
    return True


# ---------------------------------------------------------------------------- POLYNOMIALS OVER GF(p)


def _polyTrim(a: list) -> list:
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return a


def _polyMod(a: list, m: tuple, p: int) -> list:
    a = list(a)
    inv_lead = pow(m[-1], -1, p)
    while len(a) >= len(m) and any(a):
        shift = len(a) - len(m)
        coef = (a[-1] * inv_lead) % p
        for i, c in enumerate(m):
            a[shift + i] = (a[shift + i] - coef * c) % p
        _polyTrim(a)
        if len(a) < len(m):
            break
    return _polyTrim(a) if a else [0]


def _polyMulMod(a: list, b: list, m: tuple, p: int) -> list:
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
    return _polyMod(prod, m, p)


def _intToPoly(x: int, p: int, f: int) -> list:
    return [(x // p**i) % p for i in range(f)]


def _polyToInt(a: list, p: int) -> int:
    return sum(int(c) * p**i for i, c in enumerate(a))


def is_irreducible(modulus: tuple, p: int) -> bool:
    """Exhaustive trial division by every monic polynomial of degree <= f/2."""
    f = len(modulus) - 1
    if f == 1:
        return True
    for d in range(1, f // 2 + 1):
        for low in range(p**d):
            divisor = tuple(_intToPoly(low, p, d)) + (1,)
            if _polyMod(list(modulus), divisor, p) == [0]:
                return False
    return True


def find_irreducible(p: int, f: int) -> tuple:
    """First monic irreducible polynomial of degree f whose root is primitive."""
    for low in range(p**f):
        candidate = tuple(_intToPoly(low, p, f)) + (1,)
        if candidate[0] == 0 or not is_irreducible(candidate, p):
            continue
        if _cyclePowers(p**f, p, f, candidate, p if f > 1 else 0) is not None:
            return candidate
    raise FieldError(f"No primitive polynomial of degree {f} over GF({p})")


def _cyclePowers(q: int, p: int, f: int, modulus: tuple, g: int):
    """Powers of g, or None when g does not have order q - 1."""
    if g == 0:
        return None
    powers = [1]
    g_poly = _intToPoly(g, p, f)
    current = [1]
    for _ in range(q - 2):
        current = _polyMulMod(current, g_poly, modulus, p)
        value = _polyToInt(current, p)
        if value == 1:
            return None
        powers.append(value)
    return powers


# ---------------------------------------------------------------------------- FIELD


class FiniteField:
    """GF(p^f) with elements encoded as integers 0..q-1 (base-p coefficient digits)."""

    def __init__(self, p: int, f: int = 1, modulus: tuple = None):
        assert isprime(p), f"Characteristic {p} is not prime"
        assert f >= 1, f"Degree {f} must be positive"
        self.p = p
        self.f = f
        self.order = p**f
        if self.order > MAX_FIELD_ORDER:
            raise FieldError(
                f"GF({self.order}) exceeds the supported field order {MAX_FIELD_ORDER}"
            )

        if modulus is None:
            if f == 1:
                modulus = ((-primitive_root(p)) % p, 1)
            else:
                modulus = CONWAY_POLYNOMIALS.get((p, f))
                if modulus is None:
                    logger.debug(f"No tabulated polynomial for GF({p}^{f}), searching")
                    modulus = find_irreducible(p, f)
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != f + 1 or modulus[-1] != 1:
            raise FieldError(f"Modulus {modulus} is not monic of degree {f}")
        if not is_irreducible(modulus, p):
            raise FieldError(f"Modulus {modulus} is reducible over GF({p})")
        self.modulus = modulus

        self._buildTables()

    def _buildTables(self):
        q, p, f = self.order, self.p, self.f
        generator = p if f > 1 else int((-self.modulus[0]) % p)
        powers = _cyclePowers(q, p, f, self.modulus, generator)
        if powers is None:
            for candidate in range(2, q):
                powers = _cyclePowers(q, p, f, self.modulus, candidate)
                if powers is not None:
                    generator = candidate
                    break
        assert powers is not None and len(set(powers)) == q - 1, (
            f"GF({q}) has no element of order {q - 1}"
        )
        self.primitive_element = generator

        self.exp_table = np.array(powers + powers, dtype=np.int64)
        self.log_table = np.zeros(q, dtype=np.int64)
        self.log_table[np.array(powers)] = np.arange(q - 1)

        elements = np.arange(q)
        if p == 2:
            self.add_table = np.bitwise_xor.outer(elements, elements)
        else:
            self.add_table = np.zeros((q, q), dtype=np.int64)
            for i in range(f):
                digit = (elements // p**i) % p
                self.add_table += ((digit[:, None] + digit[None, :]) % p) * p**i
        self.neg_table = np.argmin(self.add_table, axis=1)

        logs = self.log_table
        self.mul_table = self.exp_table[(logs[:, None] + logs[None, :]) % (q - 1)]
        self.mul_table[0, :] = 0
        self.mul_table[:, 0] = 0
        self.inv_table = np.zeros(q, dtype=np.int64)
        self.inv_table[1:] = self.exp_table[(q - 1 - logs[1:]) % (q - 1)]

        for table in (self.exp_table, self.log_table, self.add_table, self.mul_table):
            table.setflags(write=False)

    def __repr__(self):
        return f"GF({self.order})"

    def __eq__(self, other):
        return (
            isinstance(other, FiniteField)
            and self.order == other.order
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return hash((self.order, self.modulus))

    def __len__(self):
        return self.order

    def __call__(self, value) -> "FieldElement":
        return FieldElement(self, value)

    @property
    def elements(self) -> np.ndarray:
        return np.arange(self.order)

    @property
    def sqrt_order(self) -> int:
        """r with r*r = q, for fields carrying a hermitian involution."""
        assert self.f % 2 == 0, f"{self} is not a quadratic extension"
        return self.p ** (self.f // 2)

    # Arithmetic on integer encodings (scalars or numpy arrays)
    def add(self, a, b):
        return self.add_table[a, b]

    def neg(self, a):
        return self.neg_table[a]

    def sub(self, a, b):
        return self.add_table[a, self.neg_table[b]]

    def mul(self, a, b):
        return self.mul_table[a, b]

    def inv(self, a):
        if np.any(np.asarray(a) == 0):
            raise ZeroDivisionError(f"0 has no inverse in {self}")
        return self.inv_table[a]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, k: int):
        a = np.asarray(a)
        if k == 0:
            return np.ones_like(a)[()]
        if k < 0:
            a, k = self.inv(a), -k
        powered = self.exp_table[(self.log_table[a] * k) % (self.order - 1)]
        return np.where(a == 0, 0, powered)[()]

    def frobenius(self, a, k: int = 1):
        """x -> x^(p^k)"""
        return self.pow(a, self.p ** (k % self.f))

    def conjugate(self, a):
        """The involution x -> x^r on GF(r^2)."""
        return self.pow(a, self.sqrt_order)

    def sum(self, values, axis: int = -1):
        values = np.asarray(values)
        values = np.moveaxis(values, axis, 0)
        total = np.zeros(values.shape[1:], dtype=np.int64)
        for row in values:
            total = self.add_table[total, row]
        return total[()]

    def dot(self, a, b):
        return self.sum(self.mul(a, b), axis=-1)

    def element_order(self, a: int) -> int:
        assert a != 0, "0 has no multiplicative order"
        log = int(self.log_table[a])
        n = self.order - 1
        return n // int(np.gcd(n, log))


class FieldElement:
    """Value wrapper over an integer encoding, for readable scalar arithmetic."""

    __slots__ = ("field", "value")

    def __init__(self, field: FiniteField, value):
        if isinstance(value, FieldElement):
            assert value.field == field, f"Element of {value.field} used in {field}"
            value = value.value
        value = int(value)
        if not 0 <= value < field.order:
            raise FieldError(f"{value} is not an element of {field}")
        self.field = field
        self.value = value

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldError(f"Cannot combine {self.field} with {other.field}")
            return other.value
        return FieldElement(self.field, other).value

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.value, self._coerce(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.value, self._coerce(other)))

    def __rsub__(self, other):
        return FieldElement(self.field, self.field.sub(self._coerce(other), self.value))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.value, self._coerce(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElement(self.field, self.field.div(self.value, self._coerce(other)))

    def __pow__(self, k: int):
        return FieldElement(self.field, self.field.pow(self.value, k))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.value))

    def frobenius(self, k: int = 1) -> "FieldElement":
        return FieldElement(self.field, self.field.frobenius(self.value, k))

    def conjugate(self) -> "FieldElement":
        return FieldElement(self.field, self.field.conjugate(self.value))

    @property
    def coefficients(self) -> tuple:
        return tuple(_intToPoly(self.value, self.field.p, self.field.f))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, (int, np.integer)):
            return self.value == int(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.value)

    def __int__(self):
        return self.value

    def __index__(self):
        return self.value

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"{self.field}({self.value})"


@lru_cache(maxsize=None)
def get_field(q: int) -> FiniteField:
    """Shared GF(q) instance."""
    p, f = prime_power(q)
    return FiniteField(p, f)
