import logging
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from math import isqrt
from typing import NamedTuple

from sieve.orders import q_part

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Check:
    """One applied predicate: its name, inputs, outcome and the values that decided it."""

    test: str
    inputs: dict
    outcome: bool
    witness: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass
class Verdict:
    checks: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.outcome for check in self.checks)

    def failed(self) -> list:
        return [check for check in self.checks if not check.outcome]

    def extend(self, other: "Verdict") -> "Verdict":
        self.checks.extend(other.checks)
        return self

    def to_dict(self) -> dict:
        return {"passed": self.passed, "checks": [check.to_dict() for check in self.checks]}


class OrderPair(NamedTuple):
    s: int
    t: int


########################################################################### ORDER EQUATION


class OrderSolution(NamedTuple):
    delta: int
    is_square: bool
    root: int
    s: int  # None when (s+1)(st+1) = N has no positive integral solution


def solve_order_equation(N: int, t: int) -> OrderSolution:
    """Solve (s+1)(st+1) = N for a positive integer s, through Δ = (t+1)^2 + 4t(N-1)."""
    if N < 1 or t < 1:
        raise ValueError(f"Need N >= 1 and t >= 1, got N={N}, t={t}")
    delta = (t + 1) ** 2 + 4 * t * (N - 1)
    root = isqrt(delta)
    square = root * root == delta
    s = None
    if square:
        numerator = root - (t + 1)
        if numerator > 0 and numerator % (2 * t) == 0:
            s = numerator // (2 * t)
    return OrderSolution(delta, square, root, s)


def solve_for_t(N: int, s: int):
    """The t with (s+1)(st+1) = N, or None."""
    if N < 1 or s < 1:
        raise ValueError(f"Need N >= 1 and s >= 1, got N={N}, s={s}")
    quotient, remainder = divmod(N, s + 1)
    if remainder or (quotient - 1) % s:
        return None
    t = (quotient - 1) // s
    return t if t >= 1 else None


def discriminant_td(t: int, d: int) -> int:
    """Δ_{t,d} = (t-1)^2 + 4dt, the order-equation discriminant written in the index d."""
    if t < 1 or d < 1:
        raise ValueError(f"Need t >= 1 and d >= 1, got t={t}, d={d}")
    value = (t - 1) ** 2 + 4 * d * t
    assert value == (t + 1) ** 2 + 4 * t * (d - 1), f"Discriminant identity fails at t={t}, d={d}"
    return value


########################################################################### PREDICATES


def parameter_feasible(pair) -> Verdict:
    s, t = OrderPair(*pair)
    if s < 1 or t < 1:
        raise ValueError(f"Orders must be positive, got ({s}, {t})")
    inputs = {"s": s, "t": t}
    product = s * t * (s + 1) * (t + 1)
    checks = [
        Check("thickness", inputs, s >= 2 and t >= 2),
        Check(
            "divisibility",
            inputs,
            product % (s + t) == 0,
            {"divisor": s + t, "value": product, "remainder": product % (s + t)},
        ),
        Check("higman", inputs, t <= s * s and s <= t * t, {"s^2": s * s, "t^2": t * t}),
        Check("higman_gap", inputs, not (s < t * t) or s <= t * t - t, {"t^2-t": t * t - t}),
        Check("higman_gap_dual", inputs, not (t < s * s) or t <= s * s - s, {"s^2-s": s * s - s}),
    ]
    return Verdict(checks)


def pbounds_check(N: int, t: int) -> Verdict:
    """(t+1)^2 < |P| < (t+1)^3."""
    inputs = {"N": N, "t": t}
    witness = {"(t+1)^2": (t + 1) ** 2, "(t+1)^3": (t + 1) ** 3}
    return Verdict(
        [
            Check("pbounds_lower", inputs, (t + 1) ** 2 < N, witness),
            Check("pbounds_upper", inputs, N < (t + 1) ** 3, witness),
        ]
    )


def pbounds_with_s(N: int, s: int, t: int) -> Verdict:
    """s^2 (t+1) < |P| < s (t+1)^2, for s <= t."""
    if s > t:
        raise ValueError(f"Point bounds with s assume s <= t, got s={s}, t={t}")
    inputs = {"N": N, "s": s, "t": t}
    witness = {"s^2(t+1)": s * s * (t + 1), "s(t+1)^2": s * (t + 1) ** 2}
    return pbounds_check(N, t).extend(
        Verdict(
            [
                Check("pbounds_s_lower", inputs, s * s * (t + 1) < N, witness),
                Check("pbounds_s_upper", inputs, N < s * (t + 1) ** 2, witness),
            ]
        )
    )


def ratio_check(s: int, t: int, stabP_order: int, stabL_order: int) -> bool:
    """(s+1)/(t+1) = |G_l|/|G_P|."""
    if min(stabP_order, stabL_order) < 1:
        raise ValueError("Stabilizer orders must be positive")
    return Fraction(s + 1, t + 1) == Fraction(stabL_order, stabP_order)


def stabilizer_bounds(total: int, stab: int, s: int, t: int) -> Verdict:
    """|G| < |G_P|^2 when s < t, |G|^9 < |G_P|^19 when s = t; reports |T| < |T_P|^3."""
    if s > t:
        raise ValueError(f"Stabilizer bounds assume s <= t, got s={s}, t={t}")
    inputs = {"order": total, "stabilizer": stab, "s": s, "t": t}
    if s < t:
        bound = Check("stabilizer_square", inputs, total < stab**2, {"|G_P|^2": stab**2})
    else:
        bound = Check("stabilizer_19_9", inputs, total**9 < stab**19, {"|G|^9": total**9, "|G_P|^19": stab**19})
    large = Check("large_subgroup", inputs, total < stab**3, {"|G_P|^3": stab**3})
    return Verdict([bound, large])


########################################################################### CASES


@dataclass
class SieveCase:
    """A candidate index N = |T:T_P| with the t values to try, and its audit trail."""

    N: int
    t_values: list
    q: int = None
    verdict: Verdict = field(default_factory=Verdict)
    solutions: dict = field(default_factory=dict)

    @property
    def feasible(self) -> bool:
        return any(s is not None for s in self.solutions.values())

    def to_dict(self) -> dict:
        return {
            "N": self.N,
            "t_values": list(self.t_values),
            "q": self.q,
            "feasible": self.feasible,
            "solutions": {str(t): s for t, s in self.solutions.items()},
            "checks": [check.to_dict() for check in self.verdict.checks],
        }


def evaluate_case(N: int, t_values, q: int = None) -> SieveCase:
    """
    For each t: the point bounds, then the order equation. A t survives when
    both bounds hold and (s+1)(st+1) = N has an integral s.
    """
    case = SieveCase(N, list(t_values), q)
    if q is not None:
        part = q_part(N, q)
        case.verdict.checks.append(Check("q_part", {"N": N, "q": q}, True, {"q_part": part}))
    for t in case.t_values:
        bounds = pbounds_check(N, t)
        case.verdict.extend(bounds)
        solution = solve_order_equation(N, t)
        witness = {"delta": solution.delta, "square": solution.is_square, "root": solution.root}
        if solution.s is not None:
            witness["s"] = solution.s
        case.verdict.checks.append(
            Check("order_equation", {"N": N, "t": t}, solution.s is not None, witness)
        )
        case.solutions[t] = solution.s if bounds.passed else None
    logger.debug(f"Sieve case N={N}: solutions {case.solutions}")
    return case
