"""
Group expressions such as "Q(8) x Z(5)" or "Meta(5,8,3,0)".

    expr := term { "x" term }
    term := NAME "(" integer { "," integer } ")"

Whitespace is ignored. `*` and the multiplication sign are accepted for "x".
"""

from __future__ import annotations

import functools
import re
import typing

from . import config, groups
from .errors import ExprSyntaxError, PreconditionError, UnknownConstructorError
from .groups import Group
from .types import Ctor, GroupExpr, Product


def _special_linear(n: int, p: int, cap=None) -> Group:
    return groups.special_linear(n, p, cap=cap)


def _affine(one: int, p: int, cap=None) -> Group:
    if one != 1:
        raise PreconditionError(f"only GA(1, p) is supported, got GA({one}, {p})")
    return groups.affine_general(p, cap=cap)


def _metacyclic(n: int, m: int, k: int, t: int, cap=None) -> Group:
    return groups.metacyclic(n, m, k, t, cap=cap, label=f"Meta({n},{m},{k},{t})")


# NAME -> (arity, constructor)
CONSTRUCTORS: typing.Dict[str, typing.Tuple[int, typing.Callable[..., Group]]] = {
    "Z": (1, groups.make_cyclic),
    "D": (1, groups.dihedral),
    "Dic": (1, groups.dicyclic),
    "Q": (1, groups.quaternion),
    "M": (2, groups.modular),
    "SD": (1, groups.semidihedral),
    "A": (1, groups.alternating),
    "S": (1, groups.symmetric),
    "SL": (2, _special_linear),
    "Heis": (1, groups.heisenberg),
    "Meta": (4, _metacyclic),
    "GA": (2, _affine),
    "VZ": (1, groups.klein_by_cyclic),
}

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Z][A-Za-z]*)|(?P<times>[x*×])|(?P<punct>[(),]))")


class _Token(typing.NamedTuple):
    kind: str
    text: str
    position: int


def tokenize(text: str) -> typing.List[_Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].isspace():
            break
        match = _TOKEN.match(text, pos)
        if match is None or match.lastgroup is None:
            stripped = len(text[pos:]) - len(text[pos:].lstrip())
            raise ExprSyntaxError(f"unexpected character {text[pos + stripped]!r}", pos + stripped)
        kind = match.lastgroup
        tokens.append(_Token(kind, match.group(kind), match.start(kind)))
        pos = match.end()
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.index = 0

    def _peek(self) -> typing.Optional[_Token]:
        return self.tokens[self.index] if self.index < len(self.tokens) else None

    def _expect(self, kind: str, text: typing.Optional[str] = None) -> _Token:
        token = self._peek()
        if token is None:
            raise ExprSyntaxError(f"expected {text or kind}, got end of input", len(self.text))
        if token.kind != kind or (text is not None and token.text != text):
            raise ExprSyntaxError(f"expected {text or kind}, got {token.text!r}", token.position)
        self.index += 1
        return token

    def expr(self) -> GroupExpr:
        terms = [self.term()]
        while self._peek() is not None and self._peek().kind == "times":
            self.index += 1
            terms.append(self.term())
        trailing = self._peek()
        if trailing is not None:
            raise ExprSyntaxError(f"unexpected {trailing.text!r}", trailing.position)
        return terms[0] if len(terms) == 1 else Product(factors=tuple(terms))

    def term(self) -> Ctor:
        name = self._expect("name")
        if name.text not in CONSTRUCTORS:
            raise UnknownConstructorError(name.text, name.position)
        self._expect("punct", "(")
        args = [int(self._expect("int").text)]
        while self._peek() is not None and self._peek().text == ",":
            self.index += 1
            args.append(int(self._expect("int").text))
        self._expect("punct", ")")
        arity = CONSTRUCTORS[name.text][0]
        if len(args) != arity:
            raise ExprSyntaxError(f"{name.text} takes {arity} argument(s), got {len(args)}", name.position)
        return Ctor(name=name.text, args=tuple(args), position=name.position)


def parse(text: str) -> GroupExpr:
    if not text.strip():
        raise ExprSyntaxError("empty expression", 0)
    return _Parser(text).expr()


def render(expr: GroupExpr) -> str:
    factors = expr.factors if isinstance(expr, Product) else (expr,)
    return " x ".join(f"{c.name}({','.join(map(str, c.args))})" for c in factors)


def evaluate(expr: GroupExpr, cap: typing.Optional[int] = None) -> Group:
    factors = expr.factors if isinstance(expr, Product) else (expr,)
    built = [CONSTRUCTORS[c.name][1](*c.args, cap=cap) for c in factors]
    G = built[0]
    for H in built[1:]:
        G = groups.direct_product(G, H, cap=cap)
    return G


def build(text: str) -> Group:
    """parse + evaluate under the configured cap, cached per expression and cap"""
    return _build(text, config.max_order())


@functools.lru_cache(maxsize=64)
def _build(text: str, cap: int) -> Group:
    return evaluate(parse(text), cap=cap)
