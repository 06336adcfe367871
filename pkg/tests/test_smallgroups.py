import pytest

from subcensus import groups
from subcensus.errors import OrderCapError, PreconditionError
from subcensus.groups import direct_product, is_abelian, make_cyclic, metacyclic
from subcensus.lattice import count_subgroups
from subcensus.smallgroups import (
    abelian_shape_of,
    automorphisms,
    cyclic_extensions,
    enumerate_groups_of_order,
    isomorphic,
    isomorphisms,
    order_profile,
    similarity_of,
)

# number of groups of order 1..12 up to isomorphism
GROUP_COUNTS = [1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5]


class TestIsomorphism:
    def test_dicyclic_8_is_quaternion(self):
        assert isomorphic(groups.dicyclic(8), metacyclic(4, 2, 3, 2))

    def test_dihedral_8_is_not_quaternion(self):
        assert not isomorphic(groups.dihedral(8), groups.quaternion(8))

    def test_dihedral_12_is_symmetric_by_z2(self):
        assert isomorphic(groups.dihedral(12), direct_product(groups.symmetric(3), make_cyclic(2)))

    def test_same_profile_different_groups(self):
        # Z_4 x Z_4 and Z_4:Z_4 share element orders but only one is abelian
        A = direct_product(make_cyclic(4), make_cyclic(4))
        B = metacyclic(4, 4, 3, 0)
        assert order_profile(A) == order_profile(B)
        assert not isomorphic(A, B)

    def test_mapping_is_a_homomorphism(self):
        G, H = groups.dicyclic(12), metacyclic(3, 4, 2, 0)
        phi = next(isomorphisms(G, H))
        for x in range(G.order):
            for y in range(G.order):
                assert phi[G.multiply(x, y)] == H.multiply(phi[x], phi[y])

    def test_size_limit(self):
        with pytest.raises(OrderCapError):
            isomorphic(make_cyclic(65), make_cyclic(65))

    @pytest.mark.parametrize("build, expected", [
        (lambda: make_cyclic(7), 6),
        (lambda: make_cyclic(12), 4),
        (lambda: direct_product(make_cyclic(2), make_cyclic(2)), 6),
        (lambda: groups.symmetric(3), 6),
        (lambda: groups.quaternion(8), 24),
        (lambda: groups.dihedral(8), 8),
    ])
    def test_automorphism_counts(self, build, expected):
        assert len(automorphisms(build())) == expected


class TestEnumeration:
    @pytest.mark.parametrize("n", range(1, 13))
    def test_counts(self, n):
        assert len(enumerate_groups_of_order(n)) == GROUP_COUNTS[n - 1]

    def test_order_8_lattice_sizes(self):
        counts = sorted(count_subgroups(G) for G in enumerate_groups_of_order(8))
        assert counts == [4, 6, 8, 10, 16]

    def test_order_12_lattice_sizes(self):
        counts = sorted(count_subgroups(G) for G in enumerate_groups_of_order(12))
        assert counts == [6, 8, 10, 10, 16]

    def test_extensions_of_z3_by_z2(self):
        built = cyclic_extensions(make_cyclic(3), 2)
        assert {G.order for G in built} == {6}
        assert {is_abelian(G) for G in built} == {True, False}

    def test_limits(self):
        with pytest.raises(OrderCapError):
            enumerate_groups_of_order(13)
        with pytest.raises(PreconditionError):
            enumerate_groups_of_order(0)
        with pytest.raises(PreconditionError):
            cyclic_extensions(make_cyclic(2), 4)


class TestSimilarityOfGroups:
    def test_abelian_shape(self):
        G = direct_product(make_cyclic(4), make_cyclic(2))
        assert abelian_shape_of(G).components == {2: (2, 1)}
        assert str(abelian_shape_of(make_cyclic(12))) == "Z_4 x Z_3"

    def test_abelian_shape_needs_abelian_group(self):
        with pytest.raises(PreconditionError):
            abelian_shape_of(groups.symmetric(3))

    def test_cyclic_group(self):
        cls, core = similarity_of(make_cyclic(12))
        assert cls.free_cyclic == (2, 1)
        assert cls.pinned == ()
        assert core.order == 1

    def test_pinned_component(self):
        G = direct_product(direct_product(make_cyclic(2), make_cyclic(2)), make_cyclic(3))
        cls, _ = similarity_of(G)
        assert cls.free_cyclic == (1,)
        assert cls.pinned == ((2, (1, 1)),)

    def test_non_abelian_core(self):
        cls, core = similarity_of(direct_product(groups.symmetric(3), make_cyclic(5)))
        assert cls.free_cyclic == (1,)
        assert core.order == 6
        assert isomorphic(core, groups.symmetric(3))

    def test_non_split_factor_is_kept(self):
        # Z_2 x Q_8: the Sylow 2-subgroup is not cyclic, nothing is stripped
        cls, core = similarity_of(direct_product(make_cyclic(2), groups.quaternion(8)))
        assert cls.free_cyclic == ()
        assert core.order == 16
