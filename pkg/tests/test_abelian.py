import itertools

import pytest
import sympy

from subcensus.abelian import (
    abelian_group,
    abelian_shapes,
    count_abelian,
    count_cyclic,
    count_elementary,
    count_p_component,
    count_rank2,
    exponent_partitions,
    gaussian_binomial,
    min_noncyclic_pgroup_count,
    p_component_lower_bound,
    p_group,
)
from subcensus.errors import DomainError, InexactDivisionError, OrderCapError, PreconditionError
from subcensus.lattice import count_subgroups
from subcensus.types import AbelianShape, FactoredOrder


class TestCyclicCounts:
    @pytest.mark.parametrize("order, expected", [
        (2**4 * 3, 10),
        (7**4 * 11, 10),
        (5, 2),
        (2 * 3 * 5 * 7, 16),
        (1, 1),
    ])
    def test_divisor_count(self, order, expected):
        assert count_cyclic(FactoredOrder.of(order)) == expected


class TestRank2:
    @pytest.mark.parametrize("p, a, b, expected", [
        (3, 1, 2, 10),
        (2, 1, 2, 8),
        (2, 2, 3, 22),
        (2, 1, 1, 5),
        (3, 1, 1, 6),
        (2, 2, 2, 15),
    ])
    def test_published_values(self, p, a, b, expected):
        assert count_rank2(p, a, b) == expected

    @pytest.mark.parametrize("p", [2, 3, 5, 7])
    def test_degenerate_cyclic_case(self, p):
        for b in range(5):
            assert count_rank2(p, 0, b) == b + 1

    def test_preconditions(self):
        with pytest.raises(PreconditionError):
            count_rank2(2, 3, 1)
        with pytest.raises(PreconditionError):
            count_rank2(4, 1, 1)

    @pytest.mark.slow
    @pytest.mark.parametrize("p", [2, 3, 5])
    def test_agrees_with_brute_force(self, p):
        for a, b in itertools.combinations_with_replacement(range(11), 2):
            if p ** (a + b) > 1024:
                continue
            parts = [e for e in (b, a) if e]
            G = p_group(p, parts)
            assert count_rank2(p, a, b) == count_subgroups(G), (p, a, b)


class TestElementary:
    def test_gaussian_binomial(self):
        assert gaussian_binomial(5, 0, 3) == 1
        assert gaussian_binomial(4, 2, 2) == 35
        assert gaussian_binomial(3, 1, 3) == 13

    def test_gaussian_binomial_range(self):
        with pytest.raises(PreconditionError):
            gaussian_binomial(2, 3, 2)

    @pytest.mark.parametrize("p, n, expected", [(2, 2, 5), (2, 3, 16), (3, 2, 6), (2, 4, 67), (3, 3, 28), (5, 2, 8)])
    def test_counts(self, p, n, expected):
        assert count_elementary(p, n) == expected

    @pytest.mark.parametrize("p, n", [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2)])
    def test_agrees_with_brute_force(self, p, n):
        assert count_elementary(p, n) == count_subgroups(p_group(p, [1] * n))


class TestComponents:
    def test_dispatch(self):
        assert count_p_component(2, [2, 1]) == 8
        assert count_p_component(11, [4]) == 5
        assert count_p_component(2, [1, 1, 1]) == 16
        assert count_p_component(2, [2, 1, 1]) == 27

    def test_partition_order_is_irrelevant(self):
        assert count_p_component(2, [1, 2]) == count_p_component(2, [2, 1])

    def test_brute_force_respects_cap(self):
        with pytest.raises(OrderCapError):
            count_p_component(3, [2, 1, 1], cap=50)

    def test_empty_partition(self):
        with pytest.raises(PreconditionError):
            count_p_component(2, [])

    def test_abelian_counts(self):
        assert count_abelian(AbelianShape(components={2: (1, 1), 5: (1,)})) == 10
        assert count_abelian(AbelianShape(components={7: (6,)})) == 7
        assert count_abelian(AbelianShape(components={2: (2, 1), 3: (1,)})) == 16

    def test_product_agrees_with_brute_force(self):
        shape = AbelianShape(components={2: (2, 1), 3: (1,)})
        G = abelian_group(shape)
        assert G.order == 24
        assert count_subgroups(G) == 16
        assert G.label == "Z_4 x Z_2 x Z_3"


class TestLowerBound:
    def test_closed_forms_are_exact(self):
        assert p_component_lower_bound(2, [2, 1]) == 8
        assert p_component_lower_bound(3, [1, 1, 1]) == 28

    def test_product_bound_beats_rank_bounds(self):
        # Z_243 x Z_3 x Z_3: the elementary rank-3 count alone would allow 28
        assert p_component_lower_bound(3, [5, 1, 1]) == 44

    def test_never_builds_a_group(self):
        assert p_component_lower_bound(2, [12, 1, 1]) == count_rank2(2, 1, 12) * 2

    @pytest.mark.slow
    def test_sound_against_brute_force(self):
        for p in (2, 3, 5):
            a = 3
            while p ** a <= 81:
                for parts in exponent_partitions(a):
                    if len(parts) >= 3:
                        assert p_component_lower_bound(p, parts) <= count_p_component(p, parts), (p, parts)
                a += 1


class TestMinimumCount:
    @pytest.mark.parametrize("p, a, expected", [(2, 2, 5), (2, 3, 6), (2, 4, 11), (2, 5, 14), (3, 4, 14), (3, 2, 6), (5, 3, 14)])
    def test_values(self, p, a, expected):
        assert min_noncyclic_pgroup_count(p, a) == expected

    def test_domain(self):
        with pytest.raises(DomainError):
            min_noncyclic_pgroup_count(3, 1)
        with pytest.raises(ValueError):
            min_noncyclic_pgroup_count(2, 0)

    @pytest.mark.parametrize("p, a", [(2, 2), (2, 4), (2, 5), (2, 6), (3, 2), (3, 3), (3, 4), (5, 2), (5, 3), (7, 2)])
    def test_attained_by_z_p_a_minus_1_times_z_p(self, p, a):
        assert count_p_component(p, [a - 1, 1]) == min_noncyclic_pgroup_count(p, a)

    def test_order_8_minimum_is_not_abelian(self):
        # Z_4 x Z_2 has 8 subgroups; the minimum 6 belongs to Q_8
        assert count_p_component(2, [2, 1]) == 8
        assert min_noncyclic_pgroup_count(2, 3) == 6

    @pytest.mark.slow
    def test_bound_is_sound_and_sharp_only_on_one_shape(self):
        for p in (2, 3, 5, 7):
            a = 2
            while p ** a <= 64:
                least = min_noncyclic_pgroup_count(p, a)
                for parts in exponent_partitions(a):
                    if len(parts) < 2:
                        continue
                    count = count_p_component(p, parts)
                    assert count >= least, (p, parts)
                    sharp = parts == (a - 1, 1) and (p, a) != (2, 3)
                    assert (count == least) == sharp, (p, parts)
                a += 1


class TestShapes:
    def test_partitions(self):
        assert sorted(exponent_partitions(4)) == [(1, 1, 1, 1), (2, 1, 1), (2, 2), (3, 1), (4,)]

    def test_shapes_of_order_72(self):
        shapes = sorted(str(s) for s in abelian_shapes(72))
        assert len(shapes) == 6
        assert "Z_8 x Z_9" in shapes
        assert "Z_2 x Z_2 x Z_2 x Z_3 x Z_3" in shapes

    def test_shape_canonical_form(self):
        shape = AbelianShape(components={3: [1, 2], 2: [1]})
        assert shape.key() == ((2, (1,)), (3, (2, 1)))
        assert shape.order == 54
        assert str(AbelianShape()) == "{e}"

    def test_shape_rejects_composite_prime(self):
        with pytest.raises(ValueError):
            AbelianShape(components={4: (1,)})

    @pytest.mark.slow
    def test_prime_counts_come_from_one_component(self):
        for order in range(2, 97):
            for shape in abelian_shapes(order):
                if sympy.isprime(count_abelian(shape)):
                    assert len(shape.components) == 1, shape

    @pytest.mark.slow
    def test_multiplicativity_against_brute_force(self):
        for order in range(2, 513):
            for shape in abelian_shapes(order):
                closed = all(
                    len(parts) <= 2 or parts[0] == 1 for parts in shape.components.values()
                )
                if not closed:
                    continue
                expected = count_abelian(shape)
                if expected > 300:
                    continue
                assert count_subgroups(abelian_group(shape)) == expected, shape


def test_inexact_division_is_an_arithmetic_error():
    assert issubclass(InexactDivisionError, ArithmeticError)
