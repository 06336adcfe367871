import pytest
import sympy

from subcensus.similarity import (
    PUBLISHED_CLASS_COUNTS,
    abelian_class_count,
    class_table,
    enumerate_abelian_classes,
    instantiate,
    pinned_components_with_count,
    render_class,
    render_free,
    verify_class,
)
from subcensus.types import SimilarityClass


class TestPinnedComponents:
    @pytest.mark.parametrize("f, expected", [
        (2, []),
        (5, [(2, (1, 1))]),
        (6, [(3, (1, 1))]),
        (8, [(2, (2, 1)), (5, (1, 1))]),
        (10, [(3, (2, 1)), (7, (1, 1))]),
        (22, [(2, (3, 2)), (3, (5, 1)), (19, (1, 1))]),
    ])
    def test_components(self, f, expected):
        assert pinned_components_with_count(f) == expected

    def test_count_below_two(self):
        with pytest.raises(ValueError):
            pinned_components_with_count(1)


class TestEnumeration:
    def test_trivial_class(self):
        classes = enumerate_abelian_classes(1)
        assert len(classes) == 1
        assert render_class(classes[0]) == "{e}"

    def test_prime_seven(self):
        assert [render_class(c) for c in enumerate_abelian_classes(7)] == ["Z_{p^6}"]

    def test_eight(self):
        rendered = {render_class(c) for c in enumerate_abelian_classes(8)}
        assert rendered == {"Z_{p^7}", "Z_{p^3 q}", "Z_{p q r}", "Z_4 x Z_2", "Z_5 x Z_5"}

    def test_ten(self):
        rendered = {render_class(c) for c in enumerate_abelian_classes(10)}
        assert "Z_2 x Z_2 x Z_p" in rendered
        assert "Z_9 x Z_3" in rendered
        assert "Z_7 x Z_7" in rendered
        assert "Z_{p^4 q}" in rendered

    @pytest.mark.parametrize("k, expected", [(13, 1), (16, 9), (20, 11), (22, 6)])
    def test_counts(self, k, expected):
        assert abelian_class_count(k) == expected

    def test_published_count_vector(self):
        assert tuple(abelian_class_count(k) for k in range(1, 23)) == PUBLISHED_CLASS_COUNTS

    def test_no_duplicates(self):
        for k in range(1, 23):
            keys = [(c.free_cyclic, c.pinned) for c in enumerate_abelian_classes(k)]
            assert len(keys) == len(set(keys))

    def test_prime_k_has_one_component(self):
        for k in sympy.primerange(2, 23):
            for c in enumerate_abelian_classes(k):
                assert len(c.free_cyclic) + len(c.pinned) == 1

    def test_nonpositive_k(self):
        with pytest.raises(ValueError):
            enumerate_abelian_classes(0)


class TestClassModel:
    def test_canonical_form(self):
        a = SimilarityClass(free_cyclic=[1, 3], pinned=[(5, (1, 1)), (2, (1, 2))])
        b = SimilarityClass(free_cyclic=(3, 1), pinned=[(2, (2, 1)), (5, (1, 1))])
        assert a == b
        assert a.free_cyclic == (3, 1)

    def test_repeated_pinned_prime(self):
        with pytest.raises(ValueError):
            SimilarityClass(pinned=[(2, (1, 1)), (2, (2, 1))])

    def test_pinned_component_must_be_noncyclic(self):
        with pytest.raises(ValueError):
            SimilarityClass(pinned=[(3, (2,))])


class TestRendering:
    def test_free_factors(self):
        assert render_free([1]) == "Z_p"
        assert render_free([1, 4]) == "Z_{p^4 q}"
        assert render_free([1, 1, 1, 1]) == "Z_{p q r s}"

    def test_pinned_then_free(self):
        c = SimilarityClass(free_cyclic=[1], pinned=[(2, (1, 1))])
        assert render_class(c) == "Z_2 x Z_2 x Z_p"

    def test_table(self):
        table = class_table(5)
        assert [k for k, _ in table] == [1, 2, 3, 4, 5]
        assert table[4][1] == ["Z_{p^4}", "Z_2 x Z_2"]


class TestInstantiation:
    def test_free_primes_avoid_pinned(self):
        c = SimilarityClass(free_cyclic=[2, 1], pinned=[(2, (1, 1))])
        shape = instantiate(c)
        assert shape.components == {2: (1, 1), 3: (2,), 5: (1,)}

    @pytest.mark.parametrize("k", range(1, 23))
    def test_every_class_has_k_subgroups(self, k):
        for c in enumerate_abelian_classes(k):
            report = verify_class(k, c)
            assert report.passed, report.line()


class TestWiderWindow:
    def test_pinned_components_stay_under_the_cap(self):
        found = pinned_components_with_count(28)
        assert (3, (1, 1, 1)) in found
        assert all(p ** sum(parts) <= 2048 for p, parts in found)

    @pytest.mark.parametrize("k", range(23, 31))
    def test_classes_beyond_the_table(self, k):
        classes = enumerate_abelian_classes(k)
        assert classes
        for c in classes:
            report = verify_class(k, c)
            assert report.passed, report.line()
