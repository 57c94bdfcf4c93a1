import click

from hassett_kit.models_poly import NEG_INF, VariableSet
from hassett_kit.polyalg import bp
from hassett_kit.polyalg.operations import (evaluate, parse_bindings, parse_point,
                                            partial_derivative, substitute)
from hassett_kit.polyalg.parser import parse_poly
from hassett_kit.utils.commands import json_command, vars_option


def describe(p):
    return {
        'poly': p.to_string(),
        'vars': list(p.vars.names),
        'terms': len(p.terms),
        'degree': None if p.degree is NEG_INF else p.degree,
        'homogeneous': p.is_homogeneous(),
    }


@bp.cli.command('parse')
@click.argument('expression')
@vars_option
@json_command
def parse(expression, variables):
    """Expand a polynomial expression"""
    return describe(parse_poly(expression, VariableSet.parse(variables)))


@bp.cli.command('diff')
@click.argument('expression')
@vars_option
@click.option('--var', 'variable', required=True, help='Differentiate with respect to this variable')
@json_command
def diff(expression, variables, variable):
    """Partial derivative"""
    p = parse_poly(expression, VariableSet.parse(variables))
    return describe(partial_derivative(p, variable))


@bp.cli.command('subst')
@click.argument('expression')
@vars_option
@click.option('--bind', 'bindings', required=True, help='Bindings such as "x=x+1; y=2*z"')
@click.option('--target', default=None, help='Variables of the result  [default: --vars]')
@json_command
def subst(expression, variables, bindings, target):
    """Simultaneous substitution"""
    vars = VariableSet.parse(variables)
    target = VariableSet.parse(target) if target else vars
    p = parse_poly(expression, vars)
    return describe(substitute(p, parse_bindings(bindings, vars, target), target))


@bp.cli.command('eval')
@click.argument('expression')
@vars_option
@click.option('--point', required=True, help='Comma separated rational coordinates')
@json_command
def eval_command(expression, variables, point):
    """Evaluate at a rational point"""
    p = parse_poly(expression, VariableSet.parse(variables))
    return {'value': str(evaluate(p, parse_point(point)))}
