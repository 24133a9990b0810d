import numpy as np
import pytest

from algebra.counting import ResourceCapError, count_totally_singular
from algebra.field import get_field
from constructions.classical import ClassicalFamily, classical_gq
from constructions.coset import canonical_coset_rep, coset_geometry
from constructions.hyperoval import (
    Hyperoval,
    hyperoval_stabilizer,
    regular_hyperoval,
    t2_star,
)
from geometry.quadrangle import GQErrorCode, GQVerificationError, verify_gq
from permgroup.group import group_from_generators
from permgroup.permutation import Permutation


def _antiflagCount(structure) -> int:
    return structure.num_points * structure.num_lines - structure.flag_count()


def _cosetRoundTrip(G):
    """Cos(G; G_P, G_l) for a flag (P, l) of the group's quadrangle."""
    Q = G.Q
    P = Q.lines[0][0]
    A = G.point_stabilizer(P)
    B = G.line_stabilizer(0)
    return coset_geometry(G.group, A, B)


# ---------------------------------------------------------------------------- CLASSICAL


@pytest.mark.parametrize(
    "tag, q, order, points, lines",
    [
        ("W3", 2, (2, 2), 15, 15),
        ("W3", 3, (3, 3), 40, 40),
        ("Q4", 3, (3, 3), 40, 40),
        ("Qminus5", 2, (2, 4), 27, 45),
        ("H3", 2, (4, 2), 45, 27),
        ("H4", 2, (4, 8), 165, 297),
        ("H4dual", 2, (8, 4), 297, 165),
    ],
)
def test_classical_suite(tag, q, order, points, lines):
    Q = classical_gq(tag, q)
    assert Q.order == order
    assert (Q.num_points, Q.num_lines) == (points, lines)
    assert all(Q.check_counts().values())
    family = ClassicalFamily.parse(tag)
    if family is not ClassicalFamily.H4DUAL:
        kind, n = family.form
        assert points == count_totally_singular(kind, n, 1, q)
        assert lines == count_totally_singular(kind, n, 2, q)


def test_family_tags():
    assert ClassicalFamily.parse("qminus5") is ClassicalFamily.QMINUS5
    assert ClassicalFamily.parse(" w3 ") is ClassicalFamily.W3
    with pytest.raises(ValueError):
        ClassicalFamily.parse("W5")


@pytest.mark.parametrize("tag, q, cap", [("H4", 3, None), ("W3", 9, None), ("W3", 2, 1), ("H3", 4, 15)])
def test_field_order_cap(tag, q, cap):
    with pytest.raises(ResourceCapError):
        classical_gq(tag, q, cap=cap)


def test_realization_coordinates(w32):
    realization = w32.realization
    assert realization.family is ClassicalFamily.W3
    assert len(realization.vectors) == 15
    assert realization.point_indices(realization.vectors).tolist() == list(range(15))
    with pytest.raises(ValueError):
        realization.point_indices(np.zeros((1, 4), dtype=np.int64))


# ---------------------------------------------------------------------------- HYPEROVALS


@pytest.mark.parametrize("q", [2, 4, 8])
def test_regular_hyperoval(q):
    O = regular_hyperoval(q)
    assert len(O) == q + 2
    assert O.q == q


def test_hyperoval_needs_even_order():
    with pytest.raises(ValueError):
        regular_hyperoval(3)
    with pytest.raises(ValueError):
        regular_hyperoval(6)


def test_collinear_points_rejected():
    F = get_field(4)
    O = regular_hyperoval(4)
    # (1:0:0), (0:1:0), (1:1:0) lie on the line z = 0
    bad = O.points.copy()
    bad[-1] = [1, 1, 0]
    with pytest.raises(ValueError):
        Hyperoval(F, bad)
    with pytest.raises(ValueError):
        Hyperoval(F, O.points[:5])


@pytest.mark.parametrize("q, order", [(2, 24), (4, 720)])
def test_hyperoval_stabilizer(q, order):
    O = regular_hyperoval(q)
    F = O.field
    stabilizer = hyperoval_stabilizer(O)
    assert len(stabilizer) == order
    for g in stabilizer[:: max(1, order // 40)]:
        image = g.apply(F, O.points)
        assert Hyperoval(F, image).points.tolist() == O.points.tolist()


# ---------------------------------------------------------------------------- T2*


def test_t2_star_order(gq35):
    assert gq35.order == (3, 5)
    assert (gq35.num_points, gq35.num_lines) == (64, 96)
    assert all(gq35.check_counts().values())
    assert verify_gq(gq35.structure).order == (3, 5)


def test_t2_star_over_gf2_is_thin():
    with pytest.raises(GQVerificationError) as info:
        t2_star(regular_hyperoval(2))
    assert info.value.code is GQErrorCode.THIN


# ---------------------------------------------------------------------------- COSET GEOMETRY


def test_coset_round_trip_w32(w32, w32_group):
    inc = _cosetRoundTrip(w32_group)
    Q = verify_gq(inc)
    assert Q.order == w32.order
    assert inc.flag_count() == w32.structure.flag_count()
    assert _antiflagCount(inc) == _antiflagCount(w32.structure)


@pytest.mark.slow
def test_coset_round_trip_gq35(gq35, gq35_group):
    inc = _cosetRoundTrip(gq35_group)
    Q = verify_gq(inc)
    assert Q.order == (3, 5)
    assert inc.flag_count() == 384
    assert _antiflagCount(inc) == 5760


def test_coset_geometry_with_repeated_lines():
    S3 = group_from_generators([Permutation.from_cycles(3, (0, 1)), Permutation.from_cycles(3, (0, 1, 2))])
    A = [Permutation.from_cycles(3, (0, 1))]
    B = [Permutation.from_cycles(3, (0, 1, 2))]
    inc = coset_geometry(S3, A, B)
    assert (inc.num_points, inc.num_lines) == (3, 2)
    assert inc.lines == ((0, 1, 2), (0, 1, 2))
    with pytest.raises(GQVerificationError) as info:
        verify_gq(inc)
    assert info.value.code is GQErrorCode.REPEATED_LINES


def test_coset_geometry_rejects_bad_subgroups():
    S4 = group_from_generators([Permutation.from_cycles(4, (0, 1)), Permutation.from_cycles(4, (0, 1, 2, 3))])
    C4 = [Permutation.from_cycles(4, (0, 1, 2, 3))]
    outside = group_from_generators([Permutation.from_cycles(5, (0, 1))])
    with pytest.raises(ValueError):
        coset_geometry(S4, S4, C4)
    with pytest.raises(ValueError):
        coset_geometry(S4, C4, outside)
    with pytest.raises(ResourceCapError):
        coset_geometry(S4, [Permutation.from_cycles(4, (0, 1))], C4, cap=17)


def test_canonical_coset_rep():
    S4 = group_from_generators([Permutation.from_cycles(4, (0, 1)), Permutation.from_cycles(4, (0, 1, 2, 3))])
    A = S4.stabilizer(0)
    rng = np.random.default_rng(3)
    reps = set()
    for _ in range(40):
        g, a = S4.random_element(rng), A.random_element(rng)
        rep = canonical_coset_rep(A.chain, g)
        assert canonical_coset_rep(A.chain, a * g) == rep
        reps.add(rep)
    assert len(reps) <= 4
