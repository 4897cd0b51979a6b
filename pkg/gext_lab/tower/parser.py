"""Reader for the line-oriented tower description format.

    # comments run to the end of the line
    base Q                      (or base F<p>)
    gen s minpoly s^2 - 2
    gen t minpoly t^2 - s
    ground s                    (optional; K defaults to the base field)

Minimal polynomials are expressions in the new generator and previously
declared generators, built from integer literals, ``+ - * ^`` and brackets.
"""
import re
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from she_logging import logger

from gext_lab.exactcore.irreducible import IrreducibilityVerdict
from gext_lab.exactcore.poly import DensePoly
from gext_lab.exactcore.scalar import Field, base_field_from_tag
from gext_lab.helpers.errors import (
    ReducibleDefiningPolynomial,
    TowerSyntaxError,
    UnknownIrreducibility,
)
from gext_lab.tower.field import ExtensionField
from gext_lab.tower.irreducibility import irreducible_over
from gext_lab.tower.tower import FieldTower, Level

TOKEN_PATTERN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>\S))")


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    column: int


def _at(tokens: List[Token], index: int) -> Token:
    return tokens[min(index, len(tokens) - 1)]


def tokenize(line: str, number: int) -> List[Token]:
    code = line.split("#", 1)[0]
    tokens = []
    pos = 0
    while pos < len(code):
        match = TOKEN_PATTERN.match(code, pos)
        if match is None or match.end() == pos:
            break
        kind = match.lastgroup or "op"
        start = match.start(kind)
        tokens.append(Token(kind, match.group(kind), number, start + 1))
        pos = match.end()
    tokens.append(Token("eol", "", number, len(code.rstrip()) + 1))
    return tokens


class _ExpressionParser:
    """Recursive descent over one minpoly expression.

    expr  := term (('+' | '-') term)*
    term  := unary ('*' unary)*
    unary := ('+' | '-') unary | power
    power := atom ('^' INT)?
    atom  := INT | NAME | '(' expr ')'
    """

    def __init__(self, tokens: List[Token], start: int, below: Field, new_name: str, known: Dict[str, object]) -> None:
        self.tokens = tokens
        self.pos = start
        self.below = below
        self.new_name = new_name
        self.known = known

    @property
    def current(self) -> Token:
        return self.tokens[self.pos]

    def error(self, message: str, token: Optional[Token] = None) -> TowerSyntaxError:
        token = token or self.current
        return TowerSyntaxError(message, token.line, token.column)

    def accept(self, text: str) -> bool:
        if self.current.kind == "op" and self.current.text == text:
            self.pos += 1
            return True
        return False

    def expr(self) -> DensePoly:
        value = self.term()
        while True:
            if self.accept("+"):
                value = value + self.term()
            elif self.accept("-"):
                value = value - self.term()
            else:
                return value

    def term(self) -> DensePoly:
        value = self.unary()
        while self.accept("*"):
            value = value * self.unary()
        return value

    def unary(self) -> DensePoly:
        if self.accept("-"):
            return -self.unary()
        if self.accept("+"):
            return self.unary()
        return self.power()

    def power(self) -> DensePoly:
        value = self.atom()
        if self.accept("^"):
            token = self.current
            if token.kind != "int":
                raise self.error("expected an integer exponent")
            self.pos += 1
            value = value ** int(token.text)
        return value

    def atom(self) -> DensePoly:
        token = self.current
        if token.kind == "int":
            self.pos += 1
            return DensePoly.constant(self.below, int(token.text))
        if token.kind == "name":
            self.pos += 1
            if token.text == self.new_name:
                return DensePoly.x(self.below)
            if token.text in self.known:
                return DensePoly.constant(self.below, self.below.coerce(self.known[token.text]))
            raise self.error(f"unknown generator '{token.text}'", token)
        if self.accept("("):
            value = self.expr()
            if not self.accept(")"):
                raise self.error("expected ')'")
            return value
        if token.kind == "eol":
            raise self.error("unexpected end of line")
        raise self.error(f"unexpected '{token.text}'")


def parse_tower(text: str, trust_irreducible: bool = False) -> FieldTower:
    lines = [tokenize(raw, number) for number, raw in enumerate(text.splitlines(), start=1)]
    lines = [tokens for tokens in lines if len(tokens) > 1]
    if not lines:
        raise TowerSyntaxError("empty tower description", 1, 1)

    header = lines[0]
    if header[0].text != "base":
        raise TowerSyntaxError("expected 'base'", header[0].line, header[0].column)
    if _at(header, 1).kind != "name" or _at(header, 2).kind != "eol":
        raise TowerSyntaxError("expected 'Q' or 'F<p>' after 'base'", _at(header, 1).line, _at(header, 1).column)
    try:
        base = base_field_from_tag(_at(header, 1).text)
    except ValueError as e:
        raise TowerSyntaxError(str(e), _at(header, 1).line, _at(header, 1).column) from e

    levels: List[Level] = []
    known: Dict[str, object] = {}
    assumptions: List[str] = []
    ground: Optional[Tuple[str, Token]] = None

    for tokens in lines[1:]:
        keyword = tokens[0]
        if keyword.kind == "name" and keyword.text == "ground":
            name = _at(tokens, 1)
            if name.kind != "name" or _at(tokens, 2).kind != "eol":
                raise TowerSyntaxError("expected a generator name after 'ground'", name.line, name.column)
            if ground is not None:
                raise TowerSyntaxError("ground declared twice", keyword.line, keyword.column)
            ground = (name.text, name)
            continue
        if keyword.kind != "name" or keyword.text != "gen":
            raise TowerSyntaxError("expected 'gen' or 'ground'", keyword.line, keyword.column)
        name = _at(tokens, 1)
        if name.kind != "name" or name.text in ("base", "gen", "minpoly", "ground"):
            raise TowerSyntaxError("expected a generator name", name.line, name.column)
        if name.text in known:
            raise TowerSyntaxError(f"generator '{name.text}' declared twice", name.line, name.column)
        marker = _at(tokens, 2)
        if marker.kind != "name" or marker.text != "minpoly":
            raise TowerSyntaxError("expected 'minpoly'", marker.line, marker.column)
        below = levels[-1].field if levels else base
        parser = _ExpressionParser(tokens, 3, below, name.text, known)
        poly = parser.expr()
        if parser.current.kind != "eol":
            raise parser.error(f"unexpected '{parser.current.text}'")
        level = _make_level(name, poly, _at(tokens, 3), levels, base, assumptions, trust_irreducible)
        levels.append(level)
        known[name.text] = level.field.gen

    if not levels:
        raise TowerSyntaxError("a tower needs at least one 'gen' line", header[0].line, header[0].column)
    ground_index = 0
    if ground is not None:
        names = [lvl.name for lvl in levels]
        if ground[0] not in names:
            raise TowerSyntaxError(f"unknown generator '{ground[0]}'", ground[1].line, ground[1].column)
        ground_index = names.index(ground[0]) + 1

    tower = FieldTower(base, levels, ground=ground_index, assumptions=assumptions)
    logger.info(
        "Parsed tower with %d levels, [L:K] = %d",
        len(levels),
        tower.degree,
        extra={"tower_degree": tower.degree, "levels": len(levels)},
    )
    return tower


def _make_level(
    name: Token,
    poly: DensePoly,
    at: Token,
    levels: List[Level],
    base: Field,
    assumptions: List[str],
    trust_irreducible: bool,
) -> Level:
    if poly.degree < 1:
        raise TowerSyntaxError(f"minimal polynomial of '{name.text}' must be nonconstant", at.line, at.column)
    if not poly.is_monic():
        raise TowerSyntaxError(f"minimal polynomial of '{name.text}' is not monic", at.line, at.column)
    verdict: IrreducibilityVerdict = irreducible_over(levels, base, poly)
    if verdict.reducible:
        raise ReducibleDefiningPolynomial(
            f"minimal polynomial of '{name.text}' is reducible ({verdict.method})", verdict.witness
        )
    if not verdict.irreducible:
        if not trust_irreducible:
            raise UnknownIrreducibility(
                f"could not decide irreducibility of the minimal polynomial of '{name.text}'"
            )
        logger.warning("Assuming irreducibility of the minimal polynomial of '%s'", name.text)
        assumptions.append(f"minimal polynomial of '{name.text}' assumed irreducible")
    return Level(name.text, ExtensionField(levels[-1].field if levels else base, name.text, poly), verdict)
