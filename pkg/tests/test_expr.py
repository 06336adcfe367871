import pytest

from subcensus import catalog, expr
from subcensus.config import configure
from subcensus.errors import ExprSyntaxError, OrderCapError, PreconditionError, UnknownConstructorError
from subcensus.lattice import count_subgroups
from subcensus.types import Ctor, Product


class TestParse:
    def test_single_term(self):
        parsed = expr.parse("Meta(5, 8, 3, 0)")
        assert isinstance(parsed, Ctor)
        assert (parsed.name, parsed.args) == ("Meta", (5, 8, 3, 0))

    def test_product(self):
        parsed = expr.parse("Q(8) x Z(5)")
        assert isinstance(parsed, Product)
        assert [(c.name, c.args) for c in parsed.factors] == [("Q", (8,)), ("Z", (5,))]
        assert [c.position for c in parsed.factors] == [0, 7]

    @pytest.mark.parametrize("text", ["Q(8)*Z(5)", "  Q(8)  x  Z(5) ", "Q(8) × Z(5)"])
    def test_separators_and_whitespace(self, text):
        assert expr.render(expr.parse(text)) == "Q(8) x Z(5)"

    def test_render_catalog_recipes(self):
        for e in catalog.catalog_entries():
            assert expr.render(expr.parse(e.recipe)) == e.recipe

    def test_known_constructors(self):
        assert {"Z", "D", "Dic", "Q", "M", "SD", "A", "S", "SL", "Heis", "Meta", "GA", "VZ"} == set(expr.CONSTRUCTORS)


class TestSyntaxErrors:
    @pytest.mark.parametrize("text, position", [
        ("Z(9) + Z(3)", 5),
        ("", 0),
        ("   ", 0),
        ("Z(3) x", 6),
        ("Z(3) Z(4)", 5),
        ("Z(3", 3),
        ("Z(-3)", 2),
        ("Z(3,4)", 0),
    ])
    def test_positions(self, text, position):
        with pytest.raises(ExprSyntaxError) as info:
            expr.parse(text)
        assert info.value.position == position

    def test_unknown_constructor(self):
        with pytest.raises(UnknownConstructorError) as info:
            expr.parse("Z(2) x Foo(3)")
        assert info.value.name == "Foo"
        assert info.value.position == 7

    def test_errors_are_value_errors(self):
        with pytest.raises(ValueError):
            expr.parse("Foo(3)")


class TestEvaluate:
    def test_product(self):
        G = expr.evaluate(expr.parse("Q(8) x Z(5)"))
        assert G.order == 40
        assert count_subgroups(G) == 12

    def test_three_factors(self):
        G = expr.build("Z(2) x Z(2) x Z(3)")
        assert G.order == 12
        assert count_subgroups(G) == 10

    def test_constructor_preconditions(self):
        with pytest.raises(PreconditionError):
            expr.build("GA(2,5)")
        with pytest.raises(PreconditionError):
            expr.build("Dic(10)")

    def test_order_cap(self):
        with pytest.raises(OrderCapError):
            expr.build("Z(3000)")
        configure(max_order=16)
        with pytest.raises(OrderCapError):
            expr.build("Z(4) x Z(5)")

    def test_explicit_cap(self):
        with pytest.raises(OrderCapError):
            expr.evaluate(expr.parse("S(3)"), cap=5)

    def test_build_is_cached_per_expression(self):
        assert expr.build("D(10)") is expr.build("D(10)")
        assert expr.build("D(10)") is not expr.build("D(12)")
