import numpy as np
import pytest

from algebra.linalg import normalize_rows, vector_keys
from geometry.graph import incidence_graph
from geometry.quadrangle import dual
from permgroup.blocks import finest_block_system, minimal_block_systems, transitivity_degree
from permgroup.permutation import Permutation
from symmetry.arcs import (
    is_locally_s_arc_transitive,
    local_action,
    s_arcs_from,
    unique_3arc,
)
from symmetry.collineations import (
    CollineationGroup,
    NotACollineationError,
    dual_collineations,
    translation_group,
)
from symmetry.flags import (
    Antiflag,
    antiflag_orbits,
    antiflags,
    flag_orbits,
    flags,
    is_antiflag_transitive,
    is_flag_transitive,
)


def _agree(G: CollineationGroup) -> bool:
    """Antiflag-transitivity and local 3-arc-transitivity give the same verdict."""
    graph = incidence_graph(G.Q)
    return is_antiflag_transitive(G, G.Q) == is_locally_s_arc_transitive(G, graph, 3)


def _lineDirections(Q) -> np.ndarray:
    """Key of the normalized direction of every line of a T2*(O) quadrangle."""
    F = Q.realization.field
    vectors = Q.realization.vectors
    first, second = np.array([line[:2] for line in Q.lines]).T
    directions = normalize_rows(F, F.sub(vectors[second], vectors[first]))
    return vector_keys(F, directions)


# ---------------------------------------------------------------------------- FLAGS


def test_flag_counts(gq35):
    assert len(flags(gq35)) == 384
    assert len(antiflags(gq35)) == 5760
    P, line = antiflags(gq35)[0]
    assert P not in gq35.lines[line]


def test_gq35_collineation_group(gq35_group):
    assert gq35_group.order() == 138240
    assert gq35_group.point_stabilizer(0).order() == 2160
    assert gq35_group.line_stabilizer(0).order() == 1440


def test_gq35_pair_orbits(gq35, gq35_group):
    assert flag_orbits(gq35_group, gq35) == [384]
    assert antiflag_orbits(gq35_group, gq35) == [5760]
    assert is_flag_transitive(gq35_group, gq35)
    assert is_antiflag_transitive(gq35_group, gq35)


def test_w32_is_antiflag_transitive(w32, w32_group):
    assert is_flag_transitive(w32_group, w32)
    assert is_antiflag_transitive(w32_group, w32)
    assert antiflag_orbits(w32_group, w32) == [15 * 12]


def test_translations_split_antiflags(gq35):
    T = translation_group(gq35)
    assert T.order() == 64
    assert T.on_points().is_regular()
    orbits = antiflag_orbits(T, gq35)
    assert sum(orbits) == 5760
    assert set(orbits) == {64}
    assert not is_antiflag_transitive(T, gq35)


def test_translation_group_needs_affine_model(w32):
    with pytest.raises(ValueError):
        translation_group(w32)


def test_group_of_wrong_degree(w32, gq35_group):
    with pytest.raises(ValueError):
        flag_orbits(gq35_group, w32)
    with pytest.raises(ValueError):
        CollineationGroup(w32, gq35_group.group)


def test_non_collineation_rejected(w32):
    swap = Permutation.from_cycles(w32.num_points, (0, 1))
    with pytest.raises(NotACollineationError):
        CollineationGroup.from_point_maps(w32, [swap])


def test_dual_collineations(w32, w32_group, gq35):
    D = dual(w32)
    G = dual_collineations(w32_group, D)
    assert G.order() == 720
    assert is_antiflag_transitive(G, D)
    with pytest.raises(ValueError):
        dual_collineations(w32_group, gq35)


# ---------------------------------------------------------------------------- ARCS


def test_arc_counts(gq35_graph):
    s, t = 3, 5
    # From a point: (t+1), then s, then t, then s choices
    assert len(s_arcs_from(gq35_graph, 0, 1)) == t + 1
    assert len(s_arcs_from(gq35_graph, 0, 3)) == (t + 1) * s * t
    assert len(s_arcs_from(gq35_graph, 0, 4)) == (t + 1) * s * t * s
    # From a line
    assert len(s_arcs_from(gq35_graph, 64, 3)) == (s + 1) * t * s
    assert s_arcs_from(gq35_graph, 5, 0) == [(5,)]
    with pytest.raises(ValueError):
        s_arcs_from(gq35_graph, 0, 5)
    with pytest.raises(ValueError):
        s_arcs_from(gq35_graph, 160, 1)


def test_unique_3arc(w32):
    graph = incidence_graph(w32)
    for P, line in antiflags(w32)[:30]:
        arc = unique_3arc(w32, Antiflag(P, line))
        assert arc[0] == P and arc[-1] == graph.line_vertex(line)
        assert arc[2] in w32.lines[line]
    P = w32.lines[0][0]
    with pytest.raises(ValueError):
        unique_3arc(w32, Antiflag(P, 0))


def test_gq35_local_arc_transitivity(gq35_group, gq35_graph):
    assert is_locally_s_arc_transitive(gq35_group, gq35_graph, 3)
    assert not is_locally_s_arc_transitive(gq35_group, gq35_graph, 4)


def test_local_action_is_two_transitive(w32_group):
    graph = incidence_graph(w32_group.Q)
    point_local = local_action(w32_group, graph, 0)
    line_local = local_action(w32_group, graph, graph.line_vertex(0))
    assert point_local.degree == 3 and line_local.degree == 3
    assert transitivity_degree(point_local, max_k=2) == 2
    assert transitivity_degree(line_local, max_k=2) == 2
    with pytest.raises(ValueError):
        local_action(w32_group, graph, graph.num_vertices)


def test_local_arcs_need_matching_graph(w32_group, gq35_graph):
    with pytest.raises(ValueError):
        is_locally_s_arc_transitive(w32_group, gq35_graph, 2)


# ---------------------------------------------------------------------------- EQUIVALENCE


def test_antiflag_and_3arc_agree_on_full_groups(w32_group, qminus52_group, gq35_group):
    for G in (w32_group, qminus52_group, gq35_group):
        assert _agree(G)


@pytest.mark.slow
def test_antiflag_and_3arc_agree_on_w33(w33_group):
    assert _agree(w33_group)


def test_antiflag_and_3arc_agree_on_subgroups(w32_group, qminus52_group, gq35, gq35_group):
    subgroups = [
        w32_group.subgroup(w32_group.point_stabilizer(0).generators),
        qminus52_group.subgroup(qminus52_group.line_stabilizer(0).generators),
        translation_group(gq35),
        gq35_group.subgroup(gq35_group.point_stabilizer(0).generators),
    ]
    for G in subgroups:
        assert _agree(G)
        assert not is_antiflag_transitive(G, G.Q)


def test_antiflag_and_3arc_agree_on_index_two_subgroup(w32_group):
    # Transvections of Sp4(2) = S6 are odd, so products of two generators span A6
    gens = w32_group.group.generators
    first = gens[0]
    even = [g * first.inverse() for g in gens] + [first * g for g in gens]
    G = w32_group.subgroup(even)
    assert G.order() == 360
    assert is_antiflag_transitive(G, G.Q)
    assert _agree(G)


@pytest.mark.slow
def test_antiflag_and_3arc_agree_on_w33_stabilizers(w33_group):
    for H in (w33_group.point_stabilizer(0), w33_group.line_stabilizer(0)):
        G = w33_group.subgroup(H.generators)
        assert _agree(G)
        assert not is_antiflag_transitive(G, G.Q)


# ---------------------------------------------------------------------------- LINE BLOCKS


def test_parallel_classes_form_line_blocks(gq35, gq35_group):
    lines = gq35_group.on_lines()
    directions = _lineDirections(gq35)
    parallel = int(np.nonzero(directions == directions[0])[0][1])
    system = finest_block_system(lines, 0, parallel)
    assert system.count == 6 and system.block_size == 16
    assert system.is_invariant(lines)

    systems = minimal_block_systems(lines)
    assert [(found.count, found.block_size) for found in systems] == [(6, 16)]
    assert systems[0] == system

    M = gq35.structure.incidence_matrix
    for block in system.blocks:
        block = sorted(block)
        assert len(set(directions[block].tolist())) == 1
        # Each point lies on exactly one line of every parallel class
        assert np.all(M[:, block].sum(axis=1) == 1)
