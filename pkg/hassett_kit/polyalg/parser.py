"""
Polynomial expression parser

    expr     := term (('+' | '-') term)*
    term     := factor ('*' factor)*
    factor   := base ('^' nat)?
    base     := ident | rational | '(' expr ')' | '-' factor
    rational := int ('/' nat)?

Juxtaposition is not a product: "x y" is a syntax error.
"""

import re
from fractions import Fraction

from hassett_kit.errors import PolynomialSyntaxError
from hassett_kit.models_poly import Polynomial, VariableSet

TOKEN_PATTERN = re.compile(r'\s*(?:(?P<number>[0-9]+)|(?P<ident>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*^/()])|(?P<bad>\S))')

MAX_EXPONENT = 1000


def tokenize(text):
    """List of (kind, value, position) ending with an 'end' token"""
    tokens = []
    position = 0
    while True:
        match = TOKEN_PATTERN.match(text, position)
        if match is None:
            break
        kind = match.lastgroup
        start = match.start(kind)
        if kind == 'bad':
            raise PolynomialSyntaxError(f'unexpected character {match.group(kind)!r}', start)
        tokens.append((kind, match.group(kind), start))
        position = match.end()
    tokens.append(('end', '', len(text)))
    return tokens


class _Parser:

    def __init__(self, text, vars):
        self.vars = vars
        self.tokens = tokenize(text)
        self.index = 0

    @property
    def current(self):
        return self.tokens[self.index]

    def advance(self):
        token = self.tokens[self.index]
        self.index += 1
        return token

    def expect(self, value):
        kind, text, position = self.current
        if text != value or kind != 'op':
            found = 'end of input' if kind == 'end' else repr(text)
            raise PolynomialSyntaxError(f'expected {value!r}, found {found}', position)
        return self.advance()

    def parse(self):
        if self.current[0] == 'end':
            raise PolynomialSyntaxError('empty expression', 0)
        result = self.expr()
        kind, text, position = self.current
        if kind != 'end':
            raise PolynomialSyntaxError(f'unexpected {text!r}, products need an explicit "*"', position)
        return result

    def expr(self):
        result = self.term()
        while self.current[0] == 'op' and self.current[1] in '+-':
            operator = self.advance()[1]
            right = self.term()
            result = result + right if operator == '+' else result - right
        return result

    def term(self):
        result = self.factor()
        while self.current[:2] == ('op', '*'):
            self.advance()
            result = result * self.factor()
        return result

    def factor(self):
        base = self.base()
        if self.current[:2] == ('op', '^'):
            self.advance()
            kind, text, position = self.current
            if kind != 'number':
                raise PolynomialSyntaxError('exponent must be a non-negative integer literal', position)
            self.advance()
            exponent = int(text)
            if exponent > MAX_EXPONENT:
                raise PolynomialSyntaxError(f'exponent {exponent} exceeds {MAX_EXPONENT}', position)
            return base ** exponent
        return base

    def base(self):
        kind, text, position = self.current
        if kind == 'ident':
            self.advance()
            return Polynomial.variable(self.vars, text)
        if kind == 'number':
            self.advance()
            value = Fraction(int(text))
            if self.current[:2] == ('op', '/'):
                self.advance()
                kind, denominator, where = self.current
                if kind != 'number':
                    raise PolynomialSyntaxError('expected a denominator', where)
                if int(denominator) == 0:
                    raise PolynomialSyntaxError('zero denominator', where)
                self.advance()
                value /= int(denominator)
            return Polynomial.constant(self.vars, value)
        if (kind, text) == ('op', '('):
            self.advance()
            inner = self.expr()
            self.expect(')')
            return inner
        if (kind, text) == ('op', '-'):
            self.advance()
            return -self.factor()
        found = 'end of input' if kind == 'end' else repr(text)
        raise PolynomialSyntaxError(f'unexpected {found}', position)


def parse_poly(text, vars):
    """Parse `text` into an expanded polynomial over `vars`"""
    if not isinstance(vars, VariableSet):
        vars = VariableSet.parse(vars) if isinstance(vars, str) else VariableSet(tuple(vars))
    return _Parser(text, vars).parse()


def parse_poly_list(text, vars):
    """Parse a ';'-separated generator list, skipping empty entries"""
    return [parse_poly(part, vars) for part in text.split(';') if part.strip()]
