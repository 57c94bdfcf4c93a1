import click

from hassett_kit.errors import InvalidInput
from hassett_kit.groebner import bp
from hassett_kit.groebner.operations import (buchberger, local_multiplicity,
                                             quotient_dimension)
from hassett_kit.models_groebner import MonomialOrder
from hassett_kit.models_poly import VariableSet
from hassett_kit.polyalg.operations import jacobian_ideal, parse_point
from hassett_kit.polyalg.parser import parse_poly, parse_poly_list
from hassett_kit.utils.commands import json_command, vars_option


def order_option(f):
    return click.option('--order', type=click.Choice([o.value for o in MonomialOrder]),
                        default=MonomialOrder.GREVLEX.value, show_default=True)(f)


def gens_option(f):
    return click.option('--gens', required=True, help='Generators separated by ";"')(f)


@bp.cli.command('basis')
@vars_option
@gens_option
@order_option
@json_command
def basis(variables, gens, order):
    """Reduced Groebner basis"""
    vars = VariableSet.parse(variables)
    return buchberger(parse_poly_list(gens, vars), order, vars=vars).to_dict()


@bp.cli.command('dim')
@vars_option
@gens_option
@order_option
@json_command
def dim(variables, gens, order):
    """Dimension of the quotient ring"""
    vars = VariableSet.parse(variables)
    gb = buchberger(parse_poly_list(gens, vars), order, vars=vars)
    data = gb.to_dict()
    data.update(quotient_dimension(gb).to_dict())
    return data


@bp.cli.command('tyurina')
@vars_option
@click.option('--gens', default=None, help='Ideal generators separated by ";"')
@click.option('--poly', 'expression', default=None, help='Use f together with its partials')
@click.option('--point', required=True, help='Comma separated rational coordinates')
@json_command
def tyurina(variables, gens, expression, point):
    """Local multiplicity of an ideal at a point"""
    vars = VariableSet.parse(variables)
    if (gens is None) == (expression is None):
        raise InvalidInput('give exactly one of --gens and --poly')
    ideal = parse_poly_list(gens, vars) if gens else jacobian_ideal(parse_poly(expression, vars))
    coordinates = parse_point(point)
    return {
        'point': [str(c) for c in coordinates],
        'multiplicity': local_multiplicity(ideal, coordinates),
    }
