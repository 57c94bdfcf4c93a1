from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from types import MappingProxyType

from hassett_kit.errors import InvalidInput, ShapeMismatch, UnknownVariable


@total_ordering
class _NegativeInfinity:
    """Degree of the zero polynomial; below every integer"""
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return other is not self

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __hash__(self):
        return hash('-inf')

    def __repr__(self):
        return '-inf'


NEG_INF = _NegativeInfinity()


# Polynomial Models
@dataclass(frozen=True)
class VariableSet:
    names: tuple

    def __post_init__(self):
        if len(set(self.names)) != len(self.names):
            raise InvalidInput(f'variable names are not distinct: {list(self.names)}')
        for name in self.names:
            if not (isinstance(name, str) and name.isidentifier()):
                raise InvalidInput(f'not an identifier: {name!r}')

    @classmethod
    def parse(cls, text):
        """Read 'x,y,z,w'"""
        names = tuple(name.strip() for name in text.split(',') if name.strip())
        if not names:
            raise InvalidInput('empty variable list')
        return cls(names)

    @classmethod
    def indexed(cls, prefix, count):
        return cls(tuple(f'{prefix}{i}' for i in range(count)))

    def index(self, name):
        try:
            return self.names.index(name)
        except ValueError:
            raise UnknownVariable(f'unknown variable {name!r}, expected one of {list(self.names)}',
                                  variable=name)

    def without(self, name):
        return VariableSet(tuple(v for v in self.names if v != name))

    def __len__(self):
        return len(self.names)

    def __iter__(self):
        return iter(self.names)

    def __contains__(self, name):
        return name in self.names

    def __str__(self):
        return ','.join(self.names)


def grevlex_key(exponents):
    """Sort key for graded reverse lexicographic order (larger key = larger monomial)"""
    return (sum(exponents),) + tuple(-e for e in reversed(exponents))


def lex_key(exponents):
    return tuple(exponents)


def monomial_divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def format_monomial(names, exponents):
    factors = []
    for name, e in zip(names, exponents):
        if e == 1:
            factors.append(name)
        elif e > 1:
            factors.append(f'{name}^{e}')
    return '*'.join(factors)


class Polynomial:
    """
    Sparse multivariate polynomial with exact rational coefficients

    Terms map exponent tuples (aligned with `vars`) to nonzero Fractions.
    Values are immutable; every operation returns a new polynomial.
    """
    __slots__ = ('vars', '_terms', '_hash')

    def __init__(self, vars, terms=None):
        if not isinstance(vars, VariableSet):
            vars = VariableSet(tuple(vars))
        cleaned = {}
        for exponents, coefficient in (terms or {}).items():
            exponents = tuple(exponents)
            if len(exponents) != len(vars) or any(e < 0 for e in exponents):
                raise ShapeMismatch(f'exponent vector {exponents} does not fit {len(vars)} variables')
            coefficient = Fraction(coefficient)
            if coefficient:
                cleaned[exponents] = cleaned.get(exponents, 0) + coefficient
                if not cleaned[exponents]:
                    del cleaned[exponents]
        self.vars = vars
        self._terms = cleaned
        self._hash = None

    # Constructors
    @classmethod
    def zero(cls, vars):
        return cls(vars)

    @classmethod
    def constant(cls, vars, value):
        vars = vars if isinstance(vars, VariableSet) else VariableSet(tuple(vars))
        return cls(vars, {(0,) * len(vars): value})

    @classmethod
    def variable(cls, vars, name):
        vars = vars if isinstance(vars, VariableSet) else VariableSet(tuple(vars))
        exponents = [0] * len(vars)
        exponents[vars.index(name)] = 1
        return cls(vars, {tuple(exponents): 1})

    @classmethod
    def monomial(cls, vars, exponents, coefficient=1):
        return cls(vars, {tuple(exponents): coefficient})

    @classmethod
    def generators(cls, vars):
        return [cls.variable(vars, name) for name in vars]

    # Inspection
    @property
    def terms(self):
        return MappingProxyType(self._terms)

    def is_zero(self):
        return not self._terms

    def is_constant(self):
        return all(not any(e) for e in self._terms)

    @property
    def degree(self):
        if not self._terms:
            return NEG_INF
        return max(sum(e) for e in self._terms)

    def is_homogeneous(self):
        return len({sum(e) for e in self._terms}) <= 1

    def coefficient(self, exponents):
        return self._terms.get(tuple(exponents), Fraction(0))

    def constant_term(self):
        return self.coefficient((0,) * len(self.vars))

    def sorted_terms(self, key=grevlex_key):
        """Terms from the largest monomial down"""
        return sorted(self._terms.items(), key=lambda item: key(item[0]), reverse=True)

    def homogeneous_components(self):
        components = {}
        for exponents, coefficient in self._terms.items():
            components.setdefault(sum(exponents), {})[exponents] = coefficient
        return {d: Polynomial(self.vars, t) for d, t in sorted(components.items())}

    # Arithmetic
    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.vars != self.vars:
                raise ShapeMismatch(f'polynomials over ({self.vars}) and ({other.vars}) do not mix')
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.vars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self._terms)
        for exponents, coefficient in other._terms.items():
            terms[exponents] = terms.get(exponents, 0) + coefficient
        return Polynomial(self.vars, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.vars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                exponents = tuple(a + b for a, b in zip(e1, e2))
                terms[exponents] = terms.get(exponents, 0) + c1 * c2
        return Polynomial(self.vars, terms)

    __rmul__ = __mul__

    def __pow__(self, power):
        if not isinstance(power, int) or power < 0:
            raise InvalidInput(f'exponent must be a non-negative integer, got {power!r}')
        result = Polynomial.constant(self.vars, 1)
        base = self
        while power:
            if power & 1:
                result = result * base
            base = base * base
            power >>= 1
        return result

    def scale(self, factor):
        return Polynomial(self.vars, {e: c * factor for e, c in self._terms.items()})

    def mul_monomial(self, exponents, coefficient=1):
        return Polynomial(self.vars, {tuple(a + b for a, b in zip(e, exponents)): c * coefficient
                                      for e, c in self._terms.items()})

    # Calculus and evaluation
    def derivative(self, name):
        k = self.vars.index(name)
        terms = {}
        for exponents, coefficient in self._terms.items():
            if exponents[k]:
                lowered = exponents[:k] + (exponents[k] - 1,) + exponents[k + 1:]
                terms[lowered] = coefficient * exponents[k]
        return Polynomial(self.vars, terms)

    def gradient(self):
        return [self.derivative(name) for name in self.vars]

    def evaluate(self, point):
        point = [Fraction(x) for x in point]
        if len(point) != len(self.vars):
            raise ShapeMismatch(f'point has {len(point)} coordinates, expected {len(self.vars)}')
        total = Fraction(0)
        for exponents, coefficient in self._terms.items():
            value = coefficient
            for x, e in zip(point, exponents):
                if e:
                    value *= x ** e
            total += value
        return total

    def substitute(self, bindings, target=None):
        """
        Simultaneous substitution of polynomials for variables

        Variables without a binding are kept and must exist in `target`
        (defaults to this polynomial's variables).
        """
        target = target or self.vars
        if not isinstance(target, VariableSet):
            target = VariableSet(tuple(target))
        images = []
        for name in self.vars:
            if name in bindings:
                image = bindings[name]
                if not isinstance(image, Polynomial):
                    image = Polynomial.constant(target, image)
                elif image.vars != target:
                    raise ShapeMismatch(f'binding for {name} is not over ({target})')
            elif name in target:
                image = Polynomial.variable(target, name)
            else:
                raise UnknownVariable(f'variable {name!r} is unbound and absent from ({target})',
                                      variable=name)
            images.append(image)

        powers = [{0: Polynomial.constant(target, 1)} for _ in images]

        def power(k, e):
            if e not in powers[k]:
                powers[k][e] = power(k, e - 1) * images[k]
            return powers[k][e]

        result = Polynomial.zero(target)
        for exponents, coefficient in self._terms.items():
            term = Polynomial.constant(target, coefficient)
            for k, e in enumerate(exponents):
                if e:
                    term = term * power(k, e)
            result = result + term
        return result

    def dehomogenize(self, name):
        """Set variable `name` to 1 and drop it"""
        return self.substitute({name: 1}, self.vars.without(name))

    def homogenize(self, name):
        """Homogenize with a new last variable `name`"""
        if name in self.vars:
            raise InvalidInput(f'variable {name!r} already present')
        target = VariableSet(self.vars.names + (name,))
        degree = self.degree
        return Polynomial(target, {e + (degree - sum(e),): c for e, c in self._terms.items()})

    # Comparison and printing
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.vars, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.vars == other.vars and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.vars, frozenset(self._terms.items())))
        return self._hash

    def to_string(self, key=grevlex_key):
        if not self._terms:
            return '0'
        parts = []
        for index, (exponents, coefficient) in enumerate(self.sorted_terms(key)):
            sign = '-' if coefficient < 0 else '+'
            magnitude = abs(coefficient)
            monomial = format_monomial(self.vars.names, exponents)
            if not monomial:
                body = str(magnitude)
            elif magnitude == 1:
                body = monomial
            else:
                body = f'{magnitude}*{monomial}'
            if index == 0:
                parts.append(body if sign == '+' else f'-{body}')
            else:
                parts.append(f' {sign} {body}')
        return ''.join(parts)

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f'<Polynomial {self.to_string()} over ({self.vars})>'
