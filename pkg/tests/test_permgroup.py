import numpy as np
import pytest

from data.documents import DocumentError, GroupDocument
from permgroup.blocks import (
    BlockSystem,
    finest_block_system,
    is_k_transitive,
    is_primitive,
    minimal_block_systems,
    transitivity_degree,
)
from permgroup.group import (
    NotInGroupError,
    PermGroup,
    build_chain,
    group_from_generators,
    grow_generators,
)
from permgroup.permutation import Permutation, check_images


def _cycle(degree: int, *points) -> Permutation:
    return Permutation.from_cycles(degree, points)


def _symmetric(n: int) -> PermGroup:
    return group_from_generators([_cycle(n, 0, 1), _cycle(n, *range(n))])


def _alternating5() -> PermGroup:
    return group_from_generators([_cycle(5, 0, 1, 2), _cycle(5, 0, 1, 2, 3, 4)])


# ---------------------------------------------------------------------------- PERMUTATIONS


def test_product_applies_left_factor_first():
    a, b = _cycle(3, 0, 1), _cycle(3, 1, 2)
    assert (a * b)(0) == 2
    assert (b * a)(0) == 1
    assert (a * b).tolist() == [2, 0, 1]


def test_inverse_and_powers():
    g = _cycle(6, 0, 1, 2, 3, 4, 5)
    assert (g * g.inverse()).is_identity
    assert (g**6).is_identity
    assert g**-1 == g.inverse()
    assert g.order() == 6
    h = Permutation.from_cycles(6, (0, 1), (2, 3, 4))
    assert h.order() == 6
    assert h.cycles() == [(0, 1), (2, 3, 4)]
    assert h.support.tolist() == [0, 1, 2, 3, 4]


def test_restricted():
    g = Permutation.from_cycles(6, (0, 1, 2), (3, 4))
    assert g.restricted([3, 4, 5]).tolist() == [1, 0, 2]
    with pytest.raises(ValueError):
        g.restricted([2, 3])


@pytest.mark.parametrize("images", [[0, 0, 1], [1, 2, 3], [[0, 1]], [-1, 0]])
def test_check_images_rejects(images):
    with pytest.raises(ValueError):
        check_images(images)


def test_degree_mismatch():
    with pytest.raises(ValueError):
        _cycle(3, 0, 1) * _cycle(4, 0, 1)
    with pytest.raises(ValueError):
        Permutation.from_cycles(4, (0, 1, 0))


def test_equality_and_hash():
    a = Permutation([1, 2, 0])
    b = _cycle(3, 0, 1, 2)
    assert a == b
    assert len({a, b, Permutation.identity(3)}) == 2


# ---------------------------------------------------------------------------- ORDERS


@pytest.mark.parametrize("n, order", [(3, 6), (4, 24), (5, 120), (6, 720), (8, 40320)])
def test_symmetric_group_order(n, order):
    assert _symmetric(n).order() == order


def test_alternating_group():
    A5 = _alternating5()
    assert A5.order() == 60
    assert _cycle(5, 0, 1, 2) in A5
    assert _cycle(5, 0, 1) not in A5
    with pytest.raises(NotInGroupError):
        A5.check_member(_cycle(5, 3, 4))
    assert not A5.contains(Permutation.identity(6))
    assert A5.is_subgroup_of(_symmetric(5))
    assert not _symmetric(5).is_subgroup_of(A5)


def test_known_order_mismatch():
    with pytest.raises(ValueError):
        group_from_generators([_cycle(6, 0, 1), _cycle(6, *range(6))], known_order=360)
    with pytest.raises(ValueError):
        group_from_generators([])


@pytest.mark.parametrize("claimed", [30, 60, 120, 240, 360])
@pytest.mark.parametrize("seed", range(8))
def test_understated_order_is_rejected(seed, claimed):
    with pytest.raises(ValueError):
        group_from_generators([_cycle(6, 0, 1), _cycle(6, *range(6))], seed=seed, known_order=claimed)


@pytest.mark.parametrize("seed", range(8))
def test_understated_group_document_is_rejected(seed):
    document = GroupDocument(6, [[1, 0, 2, 3, 4, 5], [1, 2, 3, 4, 5, 0]], 120)
    with pytest.raises(DocumentError):
        document.to_group(seed=seed)
    assert GroupDocument(6, document.generators, 720).to_group(seed=seed).order() == 720


def test_known_order_certifies_chain():
    G = group_from_generators([_cycle(6, 0, 1), _cycle(6, *range(6))], known_order=720)
    assert G.order() == 720


@pytest.mark.parametrize("x", [0, 3, 5])
def test_orbit_stabilizer(x):
    G = _symmetric(6)
    H = G.stabilizer(x)
    assert len(G.orbit(x)) * H.order() == G.order()
    assert all(g(x) == x for g in H.generators)


def _checkOrbitStabilizer(G: PermGroup):
    """|orbit| * |stabilizer| = |group| at every base point of the chain."""
    chain = G.chain
    assert chain.tail(0).order() == G.order()
    for i, level in enumerate(chain.levels):
        stabilizer = PermGroup(level.generators, degree=G.degree)
        orbit = stabilizer.orbit(level.base)
        assert len(orbit) * chain.tail(i + 1).order() == chain.tail(i).order(), f"base point {i}"
        if i + 1 < len(chain.levels):
            assert all(g(level.base) == level.base for g in chain.levels[i + 1].generators)
    first = chain.base[0]
    assert len(G.orbit(first)) * G.stabilizer(first).order() == G.order()


def test_orbit_stabilizer_along_chains(w32_group, qminus52_group, gq35_group):
    for G in (w32_group, qminus52_group, gq35_group):
        _checkOrbitStabilizer(G.group)


@pytest.mark.slow
def test_orbit_stabilizer_along_w33_chain(w33_group):
    _checkOrbitStabilizer(w33_group.group)


def test_pointwise_stabilizer_and_base():
    G = _symmetric(6)
    assert G.pointwise_stabilizer([0, 1]).order() == 24
    assert G.pointwise_stabilizer([0, 1, 2, 3, 4]).order() == 1
    chain = build_chain(G.generators, 6, base_prefix=[4, 2], known_order=720)
    assert chain.base[:2] == [4, 2]
    assert chain.tail(2).order() == 24


def test_orbits_of_intransitive_group():
    G = PermGroup([Permutation.from_cycles(7, (0, 1, 2)), Permutation.from_cycles(7, (3, 4))])
    assert G.orbits() == [frozenset({0, 1, 2}), frozenset({3, 4}), frozenset({5}), frozenset({6})]
    assert not G.is_transitive()
    assert G.order() == 6
    assert G.action_on([3, 4]).order() == 2
    assert G.action_on([0, 1, 2]).order() == 3


def test_regular_group():
    C6 = group_from_generators([_cycle(6, *range(6))])
    assert C6.is_regular()
    assert not _symmetric(6).is_regular()


def test_random_elements_are_members():
    G = _alternating5()
    rng = np.random.default_rng(0)
    samples = [G.random_element(rng) for _ in range(50)]
    assert all(G.contains(g) for g in samples)
    assert len(set(samples)) > 10


def test_grow_generators():
    candidates = [_cycle(5, i, i + 1) for i in range(4)] * 3
    generators = grow_generators(candidates, 5, 120)
    assert len(generators) <= 4
    assert group_from_generators(generators).order() == 120
    with pytest.raises(ValueError):
        grow_generators(candidates, 5, 119)


def test_classical_group_orders(w32_group):
    assert w32_group.order() == 720
    assert w32_group.on_points().is_transitive()
    assert w32_group.on_lines().is_transitive()


@pytest.mark.slow
def test_psp4_3(w33_group):
    assert w33_group.order() == 25920
    assert w33_group.on_points().order() == 25920


# ---------------------------------------------------------------------------- BLOCKS


def test_dihedral_blocks():
    D4 = group_from_generators([_cycle(4, 0, 1, 2, 3), _cycle(4, 1, 3)])
    systems = minimal_block_systems(D4)
    assert systems == [BlockSystem((frozenset({0, 2}), frozenset({1, 3})))]
    assert systems[0].is_invariant(D4)
    assert not is_primitive(D4)


def test_cyclic_blocks():
    C6 = group_from_generators([_cycle(6, *range(6))])
    systems = minimal_block_systems(C6)
    assert sorted(system.block_size for system in systems) == [2, 3]
    halves = finest_block_system(C6, 0, 2)
    assert halves.blocks == (frozenset({0, 2, 4}), frozenset({1, 3, 5}))
    assert halves.block_of(5) == frozenset({1, 3, 5})
    assert finest_block_system(C6, 0, 1).count == 1


def test_block_refinement():
    fine = BlockSystem((frozenset({0, 4}), frozenset({1, 5}), frozenset({2, 6}), frozenset({3, 7})))
    coarse = BlockSystem((frozenset({0, 2, 4, 6}), frozenset({1, 3, 5, 7})))
    assert fine.refines(coarse)
    assert not coarse.refines(fine)
    assert fine.degree == coarse.degree == 8


def test_intransitive_blocks_rejected():
    G = PermGroup([Permutation.from_cycles(4, (0, 1))])
    with pytest.raises(ValueError):
        minimal_block_systems(G)


def test_transitivity_degree():
    assert transitivity_degree(_symmetric(5)) == 4
    assert transitivity_degree(_alternating5()) == 3
    assert transitivity_degree(_symmetric(3)) == 3
    assert is_primitive(_alternating5())
    assert is_k_transitive(_symmetric(6), 2)
    C6 = group_from_generators([_cycle(6, *range(6))])
    assert transitivity_degree(C6) == 1
    with pytest.raises(ValueError):
        transitivity_degree(C6, max_k=5)


def test_cyclic_of_degree_four():
    C4 = group_from_generators([_cycle(4, 0, 1, 2, 3)])
    assert minimal_block_systems(C4) == [BlockSystem((frozenset({0, 2}), frozenset({1, 3})))]
    assert transitivity_degree(C4) == 1


def test_symplectic_action_is_primitive(w32_group):
    assert is_primitive(w32_group.on_points())
