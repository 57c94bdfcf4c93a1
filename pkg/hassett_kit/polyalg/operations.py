"""
Polynomial helpers
Differentiation, substitution and evaluation on top of the Polynomial model.
"""

import logging

from hassett_kit.errors import InvalidInput, ShapeMismatch
from hassett_kit.models_poly import Polynomial, VariableSet
from hassett_kit.polyalg.parser import parse_poly
from hassett_kit.weights.operations import parse_rational

logger = logging.getLogger(__name__)


def partial_derivative(p, variable):
    return p.derivative(variable)


def jacobian_ideal(f):
    """f together with all of its partial derivatives"""
    return [f] + f.gradient()


def substitute(p, bindings, target=None):
    """Simultaneous substitution; unbound variables must exist in `target`"""
    return p.substitute(bindings, target)


def evaluate(p, point):
    return p.evaluate([parse_rational(x) if isinstance(x, str) else x for x in point])


def translate(p, point):
    """p(x + point), moving `point` to the origin"""
    if len(point) != len(p.vars):
        raise ShapeMismatch(f'point has {len(point)} coordinates, expected {len(p.vars)}')
    bindings = {name: Polynomial.variable(p.vars, name) + value
                for name, value in zip(p.vars, point) if value}
    return p.substitute(bindings)


def linear_change(p, matrix):
    """p(M x) for a square rational matrix M given as a list of rows"""
    generators = Polynomial.generators(p.vars)
    if len(matrix) != len(generators) or any(len(row) != len(generators) for row in matrix):
        raise ShapeMismatch(f'expected a {len(generators)}x{len(generators)} matrix')
    bindings = {}
    for name, row in zip(p.vars, matrix):
        image = Polynomial.zero(p.vars)
        for coefficient, generator in zip(row, generators):
            image = image + generator.scale(coefficient)
        bindings[name] = image
    return p.substitute(bindings)


def parse_point(text):
    """Read '1,1,-1,-1' or '1/2,0' as a list of Fractions"""
    parts = [part.strip() for part in text.split(',')]
    if not parts or any(not part for part in parts):
        raise InvalidInput(f'malformed point {text!r}')
    return [parse_rational(part) for part in parts]


def parse_bindings(text, vars, target):
    """
    Read 'x=x+1; y=2*z' into a binding map

    Right-hand sides are parsed over `target`; left-hand sides must be
    variables of `vars`.
    """
    if not isinstance(target, VariableSet):
        target = VariableSet.parse(target)
    bindings = {}
    for entry in text.split(';'):
        if not entry.strip():
            continue
        name, sep, expression = entry.partition('=')
        name = name.strip()
        if not sep:
            raise InvalidInput(f'binding {entry.strip()!r} is not of the form var=expr')
        vars.index(name)
        if name in bindings:
            raise InvalidInput(f'variable {name!r} bound twice')
        bindings[name] = parse_poly(expression, target)
    logger.debug('Parsed %s bindings into (%s)', len(bindings), target)
    return bindings
