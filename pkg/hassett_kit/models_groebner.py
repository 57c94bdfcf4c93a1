from dataclasses import dataclass, field
from enum import Enum

from hassett_kit.models_poly import format_monomial, grevlex_key, lex_key

INFINITE = 'infinite'


# Groebner Models
class MonomialOrder(Enum):
    """Monomial orders; ties follow the order of the variable set"""
    GREVLEX = 'grevlex'
    LEX = 'lex'

    def key(self, exponents):
        if self is MonomialOrder.GREVLEX:
            return grevlex_key(exponents)
        return lex_key(exponents)


@dataclass(frozen=True)
class GroebnerBasis:
    """
    Reduced Groebner basis: monic, inter-reduced, sorted by decreasing
    leading monomial. The unit ideal is the single generator 1.
    """
    vars: object
    generators: tuple
    order: MonomialOrder = MonomialOrder.GREVLEX
    source_ideal: tuple = field(default_factory=tuple, compare=False)

    def leading_monomial(self, p):
        return max(p.terms, key=self.order.key)

    @property
    def leading_monomials(self):
        return [self.leading_monomial(g) for g in self.generators]

    def is_unit(self):
        return any(g.is_constant() for g in self.generators)

    def is_zero(self):
        return not self.generators

    def to_dict(self):
        return {
            'vars': list(self.vars.names),
            'order': self.order.value,
            'basis': [g.to_string(self.order.key) for g in self.generators],
        }


@dataclass(frozen=True)
class QuotientDimension:
    value: object  # int or INFINITE
    staircase: tuple = None
    vars: object = None

    @property
    def is_finite(self):
        return self.value != INFINITE

    def staircase_strings(self):
        if self.staircase is None:
            return None
        return [format_monomial(self.vars.names, e) or '1' for e in self.staircase]

    def to_dict(self):
        return {'dimension': self.value, 'staircase': self.staircase_strings()}
