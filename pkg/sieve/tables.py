"""
Row-by-row replication of the classification sieve's elimination tables.

Each table is held as the printed values of its rows. Every derivable
column is recomputed from order formulas and Gaussian binomials, then
compared with the printed cell. A mismatch never fails the replication:
it marks the row as a DISCREPANCY and names the catalogue entry that
explains it ("uncatalogued" otherwise). Rows whose verdict rests on more
than the recomputable columns are marked "unchecked".
"""

import logging
from dataclasses import dataclass, field
from math import isqrt

from algebra.counting import gaussian_binomial
from algebra.field import is_prime_power
from sieve.feasibility import (
    Check,
    discriminant_td,
    pbounds_check,
    solve_for_t,
    solve_order_equation,
)
from sieve.orders import (
    GroupOrderSpec,
    omega_order,
    pomega_order,
    psl_order,
    psp_order,
    q_exponent,
    simple_group_order,
    subfield_subgroup_order,
)

logger = logging.getLogger(__name__)

MATCH = "match"
DISCREPANCY = "DISCREPANCY"
UNCHECKED = "unchecked"
UNCATALOGUED = "uncatalogued"

SAMPLE_Q = (2, 3, 4, 5, 7, 8, 9)
SUZUKI_SAMPLE_Q = (8, 32)
EVEN_SAMPLE_Q = (4, 8, 16, 32)

CATALOGUED_DISCREPANCIES = {
    "psu-q-typo": "The last row prints q = 1; its |P| = 162504 is (q^2+1)(q^3+1) at q = 11.",
    "delta-row-alignment": (
        "The discriminants of the first three rows are printed one row down: 443416 belongs to "
        "Omega7(3)/Sp6(2) at t+1 = 36, 1136 to PSL3(4)/A6, and PSU3(5)/A7 has 1225 = 35^2."
    ),
    "cnn-omega-dimension": (
        "The A13 row names POmega-11(2); A13 embeds in POmega-12(2), whose index is recomputed instead."
    ),
    "leftover-omega6-bound": (
        "The Omega6+(q) row prints the point bound as failing, but (t+1)^2 < |P| < (t+1)^3 "
        "holds for t+1 = q^2+q+1 at every sampled q."
    ),
}


@dataclass
class TableRow:
    label: str
    printed: dict
    recomputed: dict
    checks: list = field(default_factory=list)
    catalogue: str = None
    note: str = ""
    unchecked: list = field(default_factory=list)  # printed columns carried over as printed

    @property
    def mismatched(self) -> list:
        """Printed columns whose recomputed value differs; blank printed cells are not compared."""
        return [
            key
            for key, value in self.printed.items()
            if value is not None and key in self.recomputed and self.recomputed[key] != value
        ]

    @property
    def status(self) -> str:
        if self.mismatched:
            return DISCREPANCY
        return UNCHECKED if self.unchecked else MATCH

    @property
    def discrepancy(self):
        if not self.mismatched:
            return None
        return self.catalogue or UNCATALOGUED

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "status": self.status,
            "discrepancy": self.discrepancy,
            "mismatched": self.mismatched,
            "printed": self.printed,
            "recomputed": self.recomputed,
            "checks": [check.to_dict() for check in self.checks],
            "note": self.note,
            "unchecked": list(self.unchecked),
        }


@dataclass
class TableReport:
    table: str
    title: str
    columns: list
    rows: list = field(default_factory=list)

    @property
    def discrepancies(self) -> list:
        return [row for row in self.rows if row.status == DISCREPANCY]

    @property
    def unchecked(self) -> list:
        return [row for row in self.rows if row.status == UNCHECKED]

    @property
    def uncatalogued(self) -> list:
        return [row for row in self.discrepancies if row.discrepancy == UNCATALOGUED]

    def to_dict(self) -> dict:
        return {
            "table": self.table,
            "title": self.title,
            "columns": list(self.columns),
            "rows": [row.to_dict() for row in self.rows],
            "discrepancies": len(self.discrepancies),
            "unchecked": len(self.unchecked),
        }


def _order(spec) -> int:
    return spec if isinstance(spec, int) else simple_group_order(spec)


def _boundHolds(N: int, t_plus_one_values) -> tuple:
    """Whether (t+1)^2 < N < (t+1)^3 for some listed t+1, with the checks applied."""
    checks = []
    holds = False
    for t1 in t_plus_one_values:
        verdict = pbounds_check(N, t1 - 1)
        checks.extend(verdict.checks)
        holds = holds or verdict.passed
    return holds, checks


def _orderEquationCheck(N: int, t: int) -> tuple:
    solution = solve_order_equation(N, t)
    witness = {"delta": solution.delta, "square": solution.is_square, "s": solution.s}
    return solution, Check("order_equation", {"N": N, "t": t}, solution.s is not None, witness)


########################################################################### LINEAR


# (n, q), n - i, t+1, |P|, |P| < (t+1)^3?, integral solution?
_PI_ROWS = (
    (4, 4, 2, 6, 357, False, None),
    (4, 5, 2, 5, 806, False, None),
    (4, 7, 2, 7, 2850, False, None),
    (4, 8, 2, 28, 4745, True, False),
    (4, 9, 2, 6, 7462, False, None),
    (4, 11, 2, 11, 16226, False, None),
    (5, 2, 3, 8, 155, True, False),
    (6, 2, 3, 8, 1395, False, None),
    (6, 2, 4, 8, 651, False, None),
    (7, 2, 4, 8, 11811, False, None),
    (8, 2, 4, 8, 200787, False, None),
)


def _piTable() -> list:
    rows = []
    for n, q, rest, t1, P, bound, integral in _PI_ROWS:
        N = gaussian_binomial(n, n - rest, q)
        upper = [check for check in pbounds_check(N, t1 - 1).checks if check.test == "pbounds_upper"]
        recomputed = {"P": N, "bound": upper[0].outcome, "integral": None}
        checks = list(upper)
        if upper[0].outcome:
            solution, check = _orderEquationCheck(N, t1 - 1)
            recomputed["integral"] = solution.s is not None
            recomputed["delta"] = solution.delta
            checks.append(check)
        rows.append(
            TableRow(
                f"({n},{q}) ({rest},{q})",
                {"P": P, "bound": bound, "integral": integral},
                recomputed,
                checks,
            )
        )
    return rows


# (n, q), t+1, |P|, two-sided bound?, integral solution?
_C5_ROWS = (
    (2, 16, 6, 68, True, False),
    (2, 25, 5, 65, True, False),
    (2, 49, 7, 175, True, False),
    (2, 64, 28, 520, False, None),
    (2, 81, 6, 369, False, None),
    (2, 121, 11, 671, True, False),
    (3, 4, 8, 120, True, False),
    (4, 4, 8, 48960, False, None),
)


def _c5Table() -> list:
    rows = []
    for n, q, t1, P, bound, integral in _C5_ROWS:
        q0 = isqrt(q)
        assert q0 * q0 == q, f"Subfield rows need a square field order, got {q}"
        N = psl_order(n, q) // subfield_subgroup_order(n, q0, 2)
        holds, checks = _boundHolds(N, (t1,))
        recomputed = {"P": N, "bound": holds, "integral": None}
        if holds:
            solution, check = _orderEquationCheck(N, t1 - 1)
            recomputed["integral"] = solution.s is not None
            recomputed["delta"] = solution.delta
            checks.append(check)
        rows.append(
            TableRow(f"({n},{q}) ({n},{q0})", {"P": P, "bound": bound, "integral": integral}, recomputed, checks)
        )
    return rows


########################################################################### UNITARY


def unitary_line_index(q: int) -> int:
    """|P| = (q^2+1)(q^3+1) for the stabilizer of a totally isotropic line of PSU_4(q)."""
    return (q * q + 1) * (q**3 + 1)


# q, |P|, s+1, integral solution?, t <= s^2?
_PSU_ROWS = (
    (4, 1105, 11, False, None),
    (5, 3276, 11, False, None),
    (7, 17200, 15, False, None),
    (1, 162504, 12, True, False, "psu-q-typo"),
)


def _fieldOrderFromIndex(P: int):
    for q in range(2, 128):
        if is_prime_power(q) and unitary_line_index(q) == P:
            return q
    return None


def _psuTable() -> list:
    rows = []
    for q, P, s1, integral, bounded, *catalogue in _PSU_ROWS:
        solved = _fieldOrderFromIndex(P)
        N = unitary_line_index(solved) if solved is not None else None
        s = s1 - 1
        t = solve_for_t(N, s) if N is not None else None
        recomputed = {"q": solved, "P": N, "integral": t is not None, "t_le_s2": None}
        checks = [Check("order_equation_in_t", {"N": N, "s": s}, t is not None, {"t": t})]
        if t is not None:
            recomputed["t"] = t
            recomputed["t_le_s2"] = t <= s * s
            checks.append(Check("higman", {"s": s, "t": t}, t <= s * s, {"s^2": s * s}))
        rows.append(
            TableRow(
                f"q={q}",
                {"q": q, "P": P, "integral": integral, "t_le_s2": bounded},
                recomputed,
                checks,
                catalogue[0] if catalogue else None,
            )
        )
    return rows


########################################################################### ORTHOGONAL


class _OrthogonalRow:
    """A q-part elimination row: T = POmega^sign_n(q), T_P a product of orthogonal groups over q^r."""

    def __init__(self, n, sign, label, factors, t_plus_one, printed, r=1, forced_s_plus_one=False):
        self.n = n
        self.sign = sign
        self.label = label
        self.factors = factors  # (dimension, sign) pairs
        self.t_plus_one = t_plus_one
        self.printed = printed  # exponents of |T|_q, |T_P|_q, (s+1)_q
        self.r = r
        self.forced_s_plus_one = forced_s_plus_one

    def stabilizer_order(self, q: int) -> int:
        order = 1
        for dimension, sign in self.factors:
            order *= omega_order(dimension, q**self.r, sign)
        return order


def _cubic(q):
    return q**3 + q**2 + q + 1


_O1_ROWS = (
    _OrthogonalRow(7, 0, "O4-(q) x O3(q)", ((4, -1), (3, 0)), lambda q: q**2 + 1, (9, 3, 6)),
    _OrthogonalRow(7, 0, "O4+(q) x O3(q)", ((4, 1), (3, 0)), lambda q: q + 1, (9, 3, 6)),
    _OrthogonalRow(7, 0, "O6+(q)", ((6, 1),), _cubic, (9, 6, 3), forced_s_plus_one=True),
    _OrthogonalRow(8, -1, "O4-(q) x O4+(q)", ((4, -1), (4, 1)), lambda q: q**2 + 1, (12, 4, 8)),
    _OrthogonalRow(8, -1, "O6+(q) x O2-(q)", ((6, 1), (2, -1)), _cubic, (12, 6, 6)),
    _OrthogonalRow(8, 1, "O4-(q) x O4-(q)", ((4, -1), (4, -1)), lambda q: q**2 + 1, (12, 4, 8)),
    _OrthogonalRow(9, 0, "O6+(q) x O3(q)", ((6, 1), (3, 0)), _cubic, (16, 7, 9)),
    _OrthogonalRow(10, -1, "O6+(q) x O4-(q)", ((6, 1), (4, -1)), _cubic, (20, 8, 12)),
    _OrthogonalRow(12, 1, "O6+(q) x O6+(q)", ((6, 1), (6, 1)), _cubic, (30, 12, 18)),
)

_O2_ROWS = (
    _OrthogonalRow(8, 1, "O4+(q^2)", ((4, 1),), lambda q: q**2 + 1, (12, 4, 8), r=2),
    _OrthogonalRow(8, -1, "O4-(q^2)", ((4, -1),), lambda q: q**4 + 1, (12, 4, 8), r=2),
    _OrthogonalRow(12, 1, "O6+(q^2)", ((6, 1),), lambda q: (q**8 - 1) // (q**2 - 1), (30, 12, 18), r=2),
)


def _sampleValue(values: list):
    """The common value over all samples, or the list of per-sample values."""
    return values[0] if all(value == values[0] for value in values) else values


def _orthogonalRow(row: _OrthogonalRow) -> TableRow:
    exponents, contradictions, checks = [], [], []
    for q in SAMPLE_Q:
        total = pomega_order(row.n, q, row.sign)
        stabilizer = row.stabilizer_order(q)
        e_total, e_stab = q_exponent(total, q), q_exponent(stabilizer, q)
        assert e_total.denominator == e_stab.denominator == 1, f"{row.label}: q-parts are not powers of q={q}"
        e_total, e_stab = int(e_total), int(e_stab)
        e_line = e_total - e_stab
        exponents.append((e_total, e_stab, e_line))
        t1 = row.t_plus_one(q)
        inputs = {"q": q, "t+1": t1, "(s+1)_q": f"q^{e_line}"}
        if not row.forced_s_plus_one:
            # q^e divides s+1, so s+1 > t+1 contradicts s <= t
            contradiction = q**e_line > t1
            checks.append(Check("q_part_exceeds_valency", inputs, contradiction))
        else:
            # s <= t and q^3 | s+1 < 2q^3 force s+1 = q^3; the order equation then fails
            s, t = q**e_line - 1, t1 - 1
            contradiction = total != omega_order(6, q, 1) * (s + 1) * (s * t + 1)
            checks.append(
                Check("forced_order_equation", inputs, contradiction, {"s": s, "t": t, "|T|": total})
            )
        contradictions.append(contradiction)

    e_total, e_stab, e_line = (_sampleValue([e[i] for e in exponents]) for i in range(3))
    printed_total, printed_stab, printed_line = row.printed
    return TableRow(
        f"n={row.n} {row.label}",
        {"T_q": printed_total, "TP_q": printed_stab, "s1_q": printed_line, "contradiction": True},
        {
            "T_q": e_total,
            "TP_q": e_stab,
            "s1_q": e_line,
            "contradiction": all(contradictions),
            "samples": list(SAMPLE_Q),
        },
        checks,
    )


def _o1Table() -> list:
    return [_orthogonalRow(row) for row in _O1_ROWS]


def _o2Table() -> list:
    return [_orthogonalRow(row) for row in _O2_ROWS]


########################################################################### NON-NOVELTY


def _spec(family, n=None, q=None) -> GroupOrderSpec:
    return GroupOrderSpec(family, n, q)


# T label, T, T_P label, T_P (spec or order), t+1 values, bound verdict, printed T label if it differs
_CNN_ROWS = (
    ("POmega+14(2)", _spec("POmega+", 14, 2), "A16", _spec("Alt", 16), (16,), False),
    ("PSp12(2)", _spec("PSp", 12, 2), "S14", _spec("Sym", 14), (14,), False),
    ("POmega-12(2)", _spec("POmega-", 12, 2), "A13", _spec("Alt", 13), (13,), False, "POmega-11(2)"),
    ("POmega-10(2)", _spec("POmega-", 10, 2), "A12", _spec("Alt", 12), (12,), False),
    ("PSp8(2)", _spec("PSp", 8, 2), "S10", _spec("Sym", 10), (10,), False),
    ("POmega+8(2)", _spec("POmega+", 8, 2), "A9", _spec("Alt", 9), (9,), False),
    ("POmega7(3)", _spec("POmega", 7, 3), "PSp6(2)", _spec("PSp", 6, 2), (28, 36), True),
    ("POmega7(3)", _spec("POmega", 7, 3), "S9", _spec("Sym", 9), (9,), False),
    ("PSU6(2)", _spec("PSU", 6, 2), "M22", _spec("M22"), (22,), False),
    ("PSp6(2)", _spec("PSp", 6, 2), "PSU3(3).2", 2 * simple_group_order("PSU", 3, 3), (28,), False),
    ("PSL4(2)", _spec("PSL", 4, 2), "A7", _spec("Alt", 7), (7,), False),
    ("PSU4(3)", _spec("PSU", 4, 3), "A7", _spec("Alt", 7), (7,), False),
    ("PSU4(3)", _spec("PSU", 4, 3), "PSL3(4)", _spec("PSL", 3, 4), (21,), False),
    ("PSp4(2)'", _spec("Alt", 6), "A5", _spec("Alt", 5), (5, 6), False),
    ("PSL3(4)", _spec("PSL", 3, 4), "A6", _spec("Alt", 6), (6,), True),
    ("PSL3(4)", _spec("PSL", 3, 4), "A6", _spec("Alt", 6), (10,), False),
    ("PSU3(5)", _spec("PSU", 3, 5), "A7", _spec("Alt", 7), (7,), True),
    ("PSU3(5)", _spec("PSU", 3, 5), "M10", 720, (10,), True),
    ("PSU3(3)", _spec("PSU", 3, 3), "PSL2(7)", _spec("PSL", 2, 7), (7, 8), False),
    ("PSL2(9)", _spec("PSL", 2, 9), "A5", _spec("Alt", 5), (5, 6), False),
    ("PSL2(11)", _spec("PSL", 2, 11), "A5", _spec("Alt", 5), (5, 6), False),
    ("PSL2(19)", _spec("PSL", 2, 19), "A5", _spec("Alt", 5), (5, 6), True),
) + tuple(
    (f"PSp4({q})", _spec("PSp", 4, q), f"Sz({q})", _spec("Sz", q=q), (q * q + 1,), True)
    for q in SUZUKI_SAMPLE_Q
)


def _cnnTable() -> list:
    rows = []
    for T_label, T, TP_label, TP, t_plus_one, verdict, *printed_T in _CNN_ROWS:
        total, stabilizer = _order(T), _order(TP)
        assert total % stabilizer == 0, f"|{TP_label}| does not divide |{T_label}|"
        N = total // stabilizer
        holds, checks = _boundHolds(N, t_plus_one)
        printed = {"bound": verdict}
        recomputed = {"N": N, "t+1": list(t_plus_one), "bound": holds}
        catalogue = None
        if printed_T:
            printed["T"], recomputed["T"] = printed_T[0], T_label
            catalogue = "cnn-omega-dimension"
        rows.append(TableRow(f"{T_label} / {TP_label}", printed, recomputed, checks, catalogue))
    return rows


def suzuki_discriminant(q: int) -> int:
    """(q-1)(q+1)^2(4q^4+q-1), the discriminant for PSp4(q) / Sz(q) with t+1 = q^2+1."""
    return (q - 1) * (q + 1) ** 2 * (4 * q**4 + q - 1)


# T label, T, T_P label, T_P, t+1 values, printed discriminants
_DELTA_ROWS = (
    ("Omega7(3)", _spec("POmega", 7, 3), "Sp6(2)", _spec("PSp", 6, 2), (28, 36), (341848,), "delta-row-alignment"),
    ("PSL3(4)", _spec("PSL", 3, 4), "A6", _spec("Alt", 6), (6,), (443416,), "delta-row-alignment"),
    ("PSU3(5)", _spec("PSU", 3, 5), "A7", _spec("Alt", 7), (7,), (1136,), "delta-row-alignment"),
    ("PSU3(5)", _spec("PSU", 3, 5), "M10", 720, (10,), (6364,), None),
    ("PSL2(19)", _spec("PSL", 2, 19), "A5", _spec("Alt", 5), (5,), (921,), None),
    ("PSL2(19)", _spec("PSL", 2, 19), "A5", _spec("Alt", 5), (6,), (1156,), None),
) + tuple(
    (
        f"PSp4({q})",
        _spec("PSp", 4, q),
        f"Sz({q})",
        _spec("Sz", q=q),
        (q * q + 1,),
        (suzuki_discriminant(q),),
        None,
    )
    for q in SUZUKI_SAMPLE_Q
)


def _discriminantTable() -> list:
    rows = []
    for T_label, T, TP_label, TP, t_plus_one, deltas, catalogue in _DELTA_ROWS:
        N = _order(T) // _order(TP)
        checks, recomputed_deltas, squares, solutions = [], [], [], []
        for t1 in t_plus_one:
            solution, check = _orderEquationCheck(N, t1 - 1)
            checks.append(check)
            recomputed_deltas.append(solution.delta)
            squares.append(solution.is_square)
            solutions.append(solution.s)
        rows.append(
            TableRow(
                f"{T_label} / {TP_label} t+1={','.join(map(str, t_plus_one))}",
                {"delta": list(deltas)},
                {"N": N, "delta": recomputed_deltas, "square": squares, "s": solutions},
                checks,
                catalogue,
            )
        )
    return rows


########################################################################### LEFTOVER


def _omega10Index(q: int) -> int:
    return q**10 * (q + 1) * (q**2 + 1) * (q**3 + 1) * (q**4 + 1)


def _omega6Index(q: int) -> int:
    return q**3 * (q + 1) * (q**2 + 1)


def _sp4EvenIndex(q: int) -> int:
    return (q + 1) ** 2 * (q * q + 1)


# T, T_P, t+1 values (or a function of q), printed index (or a function of q), bound, printed Δ_{t,d}
_LEFTOVER_ROWS = (
    ("Omega+10(q)", "SL5(q).(q-1)/(q-1,2)", lambda q: ((q**5 - 1) // (q - 1),), _omega10Index, False, None),
    ("Omega+6(q)", "GL3(q)/(q-1,2)", lambda q: (q * q + q + 1,), _omega6Index, False, None, "leftover-omega6-bound"),
    ("Omega+8(3)", "2^7:A8", (8,), 3838185, False, None),
    ("Omega-6(3)", "GO-2(3)^3.S3/4", (3, 4), 8505, False, None),
    ("SU6(2)", "3^5.S6", (6,), 157696, False, None),
    ("Sp4(2)", "5:4", (5,), 36, True, 585),
    ("Sp4(2^f)", "[2^4f]:C^2", None, _sp4EvenIndex, False, None),
    ("SU4(3)", "4^3.S4", (3, 4), 8505, False, None),
    ("SU4(3)", "SL2(9).2", (10,), 36288, False, None),
    ("SL4(3)", "SL2(3)^2:2.2", (3,), 5265, False, None),
    ("Omega3(11)", "A4", (4,), 55, True, 664),
    ("Omega3(19)", "A4", (4,), 285, False, None),
    ("SU3(5)", "3 x PSL2(7)", (7, 8), 750, False, None),
    ("SU3(5)", "3^(1+2):Q8.3", (9,), 1750, False, None),
    ("SU3(5)", "6^2:S3", (3, 4), 1750, False, None),
)


def _sp4EvenRow(label: str, printed: dict) -> TableRow:
    """Only the index is recomputed; t+1 is bounded by 2^4f alone, so the bound column is carried over."""
    checks = []
    for q in EVEN_SAMPLE_Q:
        index = psp_order(4, q) // (q**4 * (q - 1) ** 2)
        checks.append(Check("index", {"q": q}, index == _sp4EvenIndex(q), {"index": index}))
    recomputed = {"index": [check.witness["index"] for check in checks], "samples": list(EVEN_SAMPLE_Q)}
    return TableRow(label, printed, recomputed, checks, unchecked=["bound"], note="bound carried over unchecked")


def _leftoverTable() -> list:
    rows = []
    for T_label, TP_label, t_plus_one, index, bound, delta, *catalogue in _LEFTOVER_ROWS:
        label = f"{T_label} / {TP_label}"
        printed = {"bound": bound, "delta": delta}
        if t_plus_one is None:
            rows.append(_sp4EvenRow(label, printed))
            continue

        if callable(index):
            verdicts, checks = [], []
            for q in SAMPLE_Q:
                holds, applied = _boundHolds(index(q), t_plus_one(q))
                verdicts.append(holds)
                checks.extend(applied)
            recomputed = {"bound": _sampleValue(verdicts), "samples": list(SAMPLE_Q)}
        else:
            holds, checks = _boundHolds(index, t_plus_one)
            recomputed = {"N": index, "t+1": list(t_plus_one), "bound": holds}
            if holds:
                t = t_plus_one[0] - 1
                value = discriminant_td(t, index)
                solution, check = _orderEquationCheck(index, t)
                checks.append(check)
                recomputed.update(delta=value, square=solution.is_square, s=solution.s)
        rows.append(TableRow(label, printed, recomputed, checks, catalogue[0] if catalogue else None))
    return rows


########################################################################### REGISTRY


TABLES = {
    "Pi": ("Parabolic P_2 point stabilizers of PSL_n(q)", ["P", "bound", "integral"], _piTable),
    "C5": ("Subfield point stabilizers of PSL_n(q)", ["P", "bound", "integral"], _c5Table),
    "PSU-1.2": ("Line stabilizers of PSU_4(q), exceptional q", ["q", "P", "integral", "t_le_s2"], _psuTable),
    "O1": ("Orthogonal decompositions: q-parts", ["T_q", "TP_q", "s1_q", "contradiction"], _o1Table),
    "O2": ("Orthogonal field extensions: q-parts", ["T_q", "TP_q", "s1_q", "contradiction"], _o2Table),
    "classical_not_novelty": ("Almost simple point stabilizers", ["T", "bound"], _cnnTable),
    "discriminant": ("Discriminants of the order equation", ["delta"], _discriminantTable),
    "leftover": ("Left-over novelty cases", ["bound", "delta"], _leftoverTable),
}

_TABLE_ALIASES = {alias.lower(): name for name in TABLES for alias in (name, f"tbl:{name}")}
_TABLE_ALIASES.update({"psu1.2": "PSU-1.2", "tbl:psu1.2": "PSU-1.2", "delta": "discriminant", "leftover2": "leftover"})


def table_id(name: str) -> str:
    key = str(name).strip().lower()
    if key not in _TABLE_ALIASES:
        raise ValueError(f"Unknown table {name!r}; known tables: {', '.join(TABLES)}")
    return _TABLE_ALIASES[key]


def replicate_table(name: str) -> TableReport:
    tid = table_id(name)
    title, columns, build = TABLES[tid]
    report = TableReport(tid, title, columns, build())
    for row in report.discrepancies:
        log = logger.warning if row.discrepancy == UNCATALOGUED else logger.info
        log(f"{tid} row {row.label}: {row.discrepancy} in {', '.join(row.mismatched)}")
    return report
