import click

from hassett_kit.deform import bp
from hassett_kit.deform.operations import (HYPERPLANE_SECTIONS, SEGRE_VARS,
                                           aut_segre_order, build_ledger,
                                           hyperplane_section, node_action_group,
                                           segre_cubic, segre_nodes,
                                           singular_audit_charts)
from hassett_kit.models_poly import VariableSet
from hassett_kit.polyalg.parser import parse_poly
from hassett_kit.utils.commands import json_command


@bp.cli.command('poly')
@json_command
def poly():
    """The Segre cubic in x0..x4"""
    f = segre_cubic()
    return {'poly': f.to_string(), 'vars': list(f.vars.names), 'degree': f.degree}


@bp.cli.command('nodes')
@json_command
def nodes():
    """Certified nodes of the Segre cubic"""
    certificates = segre_nodes()
    return {'count': len(certificates), 'nodes': [c.to_dict() for c in certificates]}


@bp.cli.command('audit')
@click.option('--poly', 'expression', default=None, help='Homogeneous polynomial  [default: Segre cubic]')
@click.option('--vars', 'variables', default=str(SEGRE_VARS), show_default=True)
@json_command
def audit(expression, variables):
    """Sum of Tyurina numbers over all singular points"""
    f = parse_poly(expression, VariableSet.parse(variables)) if expression else segre_cubic()
    charts = singular_audit_charts(f)
    return {'total': sum(charts), 'charts': charts}


@bp.cli.command('ledger')
@json_command
def ledger():
    """Euler characteristic ledger for first-order deformations"""
    return build_ledger().to_dict()


@bp.cli.command('sections')
@json_command
def sections():
    """Hyperplane sections: Clebsch and Cayley cubic surfaces"""
    result = []
    for kind in HYPERPLANE_SECTIONS:
        f, total = hyperplane_section(kind)
        result.append({'kind': kind, 'poly': f.to_string(), 'vars': list(f.vars.names), 'audit': total})
    return result


@bp.cli.command('aut')
@json_command
def aut():
    """Order of Aut(S) and the induced action on the nodes"""
    order = aut_segre_order()
    group = node_action_group()
    return {'order': order, 'node_action': group.to_dict()}
