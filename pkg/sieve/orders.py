from fractions import Fraction
from math import factorial, gcd, prod
from typing import NamedTuple

from algebra.field import prime_power

# ---------------------------------------------------------------------------- SPORADIC

SPORADIC_ORDERS = {
    "M11": 7920,
    "M12": 95040,
    "M22": 443520,
    "M23": 10200960,
    "M24": 244823040,
    "J1": 175560,
    "J2": 604800,
    "J3": 50232960,
    "J4": 86775571046077562880,
    "HS": 44352000,
    "McL": 898128000,
    "Suz": 448345497600,
    "He": 4030387200,
    "Ru": 145926144000,
    "ON": 460815505920,
    "Co3": 495766656000,
    "Co2": 42305421312000,
    "Co1": 4157776806543360000,
    "Fi22": 64561751654400,
    "Fi23": 4089470473293004800,
    "Fi24'": 1255205709190661721292800,
    "HN": 273030912000000,
    "Ly": 51765179004000000,
    "Th": 90745943887872000,
    "B": 4154781481226426191177580544000000,
    "M": 808017424794512875886459904961710757005754368000000000,
}

# Exponents d_i with |G| = q^N prod (q^{d_i} - 1) / center
_EXCEPTIONAL_DEGREES = {
    "G2": (6, (2, 6), 1),
    "F4": (24, (2, 6, 8, 12), 1),
    "E6": (36, (2, 5, 6, 8, 9, 12), 3),
    "E7": (63, (2, 6, 8, 10, 12, 14, 18), 2),
    "E8": (120, (2, 8, 12, 14, 18, 20, 24, 30), 1),
}

_FAMILY_ALIASES = {
    "psl": "PSL",
    "l": "PSL",
    "psu": "PSU",
    "u": "PSU",
    "psp": "PSp",
    "s": "PSp",
    "pomega": "POmega",
    "pomega0": "POmega",
    "omega": "POmega",
    "pomega+": "POmega+",
    "omega+": "POmega+",
    "pomega-": "POmega-",
    "omega-": "POmega-",
    "sz": "Sz",
    "2b2": "Sz",
    "ree": "Ree",
    "2g2": "Ree",
    "g2": "G2",
    "3d4": "3D4",
    "2f4": "2F4",
    "f4": "F4",
    "e6": "E6",
    "2e6": "2E6",
    "e7": "E7",
    "e8": "E8",
    "alt": "Alt",
    "a": "Alt",
    "sym": "Sym",
}


class GroupOrderSpec(NamedTuple):
    """A simple group named by family, dimension (or rank, or degree) and field order."""

    family: str
    n: int = None
    q: int = None

    def normalized(self) -> "GroupOrderSpec":
        name = str(self.family).strip()
        if name in SPORADIC_ORDERS:
            return GroupOrderSpec(name)
        key = name.lower().replace("−", "-").replace("∘", "0").replace("ω", "omega")
        if key not in _FAMILY_ALIASES:
            raise ValueError(f"Unsupported group family {self.family!r}")
        return GroupOrderSpec(_FAMILY_ALIASES[key], self.n, self.q)

    def __str__(self):
        if self.n is None and self.q is None:
            return self.family
        if self.family in ("Alt", "Sym"):
            return f"{self.family}{self.n}"
        if self.n is None:
            return f"{self.family}({self.q})"
        return f"{self.family}{self.n}({self.q})"


########################################################################### CLASSICAL


def _checkQ(q: int) -> int:
    prime_power(q)
    return q


def _unitaryFactors(n: int, q: int) -> int:
    return prod(q**i - (-1) ** i for i in range(2, n + 1))


def sl_order(n: int, q: int) -> int:
    _checkQ(q)
    return q ** (n * (n - 1) // 2) * prod(q**i - 1 for i in range(2, n + 1))


def psl_order(n: int, q: int) -> int:
    if n < 2:
        raise ValueError(f"PSL_n needs n >= 2, got {n}")
    return sl_order(n, q) // gcd(n, q - 1)


def su_order(n: int, q: int) -> int:
    _checkQ(q)
    return q ** (n * (n - 1) // 2) * _unitaryFactors(n, q)


def psu_order(n: int, q: int) -> int:
    if n < 2:
        raise ValueError(f"PSU_n needs n >= 2, got {n}")
    return su_order(n, q) // gcd(n, q + 1)


def sp_order(n: int, q: int) -> int:
    _checkQ(q)
    if n % 2 or n < 2:
        raise ValueError(f"Symplectic groups need even dimension, got {n}")
    m = n // 2
    return q ** (m * m) * prod(q ** (2 * i) - 1 for i in range(1, m + 1))


def psp_order(n: int, q: int) -> int:
    return sp_order(n, q) // gcd(2, q - 1)


def omega_order(n: int, q: int, sign: int = 0) -> int:
    """|Omega^sign_n(q)|: sign 0 for odd n, +1 or -1 for even n."""
    _checkQ(q)
    if sign == 0:
        if n % 2 == 0 or n < 3:
            raise ValueError(f"Parabolic orthogonal groups need odd dimension >= 3, got {n}")
        m = (n - 1) // 2
        return q ** (m * m) * prod(q ** (2 * i) - 1 for i in range(1, m + 1)) // gcd(2, q - 1)
    if n % 2 or n < 2 or sign not in (1, -1):
        raise ValueError(f"Orthogonal groups of type {sign:+d} need even dimension, got {n}")
    m = n // 2
    core = q ** (m * (m - 1)) * (q**m - sign) * prod(q ** (2 * i) - 1 for i in range(1, m))
    return core // gcd(2, q - 1)


def pomega_order(n: int, q: int, sign: int = 0) -> int:
    if sign == 0:
        return omega_order(n, q, 0)
    m = n // 2
    return omega_order(n, q, sign) * gcd(2, q - 1) // gcd(4, q**m - sign)


def subfield_subgroup_order(n: int, q0: int, r: int) -> int:
    """Order of the image in PSL_n(q0^r) of the subfield group SL_n(q0) extended by its scalars."""
    q = q0**r
    return sl_order(n, q0) * gcd(n, (q - 1) // (q0 - 1)) // gcd(n, q - 1)


########################################################################### EXCEPTIONAL


def _oddPowerOf(q: int, p: int, name: str):
    base, f = prime_power(q)
    if base != p or f % 2 == 0:
        raise ValueError(f"{name}(q) needs q = {p}^(2m+1), got {q}")


def exceptional_order(family: str, q: int) -> int:
    _checkQ(q)
    if family == "Sz":
        _oddPowerOf(q, 2, "Sz")
        return q**2 * (q**2 + 1) * (q - 1)
    if family == "Ree":
        _oddPowerOf(q, 3, "Ree")
        return q**3 * (q**3 + 1) * (q - 1)
    if family == "3D4":
        return q**12 * (q**8 + q**4 + 1) * (q**6 - 1) * (q**2 - 1)
    if family == "2F4":
        _oddPowerOf(q, 2, "2F4")
        return q**12 * (q**6 + 1) * (q**4 - 1) * (q**3 + 1) * (q - 1)
    if family == "2E6":
        degrees = _EXCEPTIONAL_DEGREES["E6"][1]
        return q**36 * prod(q**d - (-1) ** d for d in degrees) // gcd(3, q + 1)
    N, degrees, center = _EXCEPTIONAL_DEGREES[family]
    return q**N * prod(q**d - 1 for d in degrees) // gcd(center, q - 1)


########################################################################### DISPATCH


def simple_group_order(spec, n: int = None, q: int = None) -> int:
    """Exact order of a simple group, given a GroupOrderSpec or its fields."""
    if not isinstance(spec, GroupOrderSpec):
        spec = GroupOrderSpec(spec, n, q)
    spec = spec.normalized()
    family, n, q = spec
    if family in SPORADIC_ORDERS:
        return SPORADIC_ORDERS[family]
    if family in ("Alt", "Sym"):
        if n is None or n < 1:
            raise ValueError(f"{family} needs a degree, got {n}")
        return factorial(n) // (2 if family == "Alt" and n > 1 else 1)
    if q is None:
        raise ValueError(f"{family} needs a field order")
    if family == "PSL":
        return psl_order(n, q)
    if family == "PSU":
        return psu_order(n, q)
    if family == "PSp":
        return psp_order(n, q)
    if family == "POmega":
        return pomega_order(n, q, 0)
    if family == "POmega+":
        return pomega_order(n, q, 1)
    if family == "POmega-":
        return pomega_order(n, q, -1)
    return exceptional_order(family, q)


def q_part(N: int, q: int) -> int:
    """Largest power of the characteristic of GF(q) dividing N."""
    p, _ = prime_power(q)
    if N == 0:
        raise ValueError("0 has no q-part")
    part = 1
    N = abs(N)
    while N % p == 0:
        N //= p
        part *= p
    return part


def q_exponent(N: int, q: int) -> Fraction:
    """e with q_part(N, q) = q^e; fractional when the p-part is not a power of q."""
    p, f = prime_power(q)
    return Fraction(_valuation(q_part(N, q), p), f)


def _valuation(N: int, p: int) -> int:
    a = 0
    while N % p == 0:
        N //= p
        a += 1
    return a
