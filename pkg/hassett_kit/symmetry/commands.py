import click

from hassett_kit.symmetry import bp
from hassett_kit.symmetry.operations import (admissible_group, aut_descriptor,
                                             is_admissible_transposition,
                                             transposition_components)
from hassett_kit.utils.commands import (genus_option, json_command, mode_option,
                                        weight_data, weights_option)


@bp.cli.command('transposition')
@weights_option()
@genus_option
@mode_option
@click.option('-i', 'i', type=int, required=True)
@click.option('-j', 'j', type=int, required=True)
@click.option('--strict', is_flag=True, help='Also test single markings H')
@json_command
def transposition(weights, genus, mode, i, j, strict):
    """Is swapping markings i and j admissible?"""
    w = weight_data(weights, genus, mode)
    return {'i': i, 'j': j, 'admissible': is_admissible_transposition(w, i, j, strict=strict)}


@bp.cli.command('group')
@weights_option()
@genus_option
@mode_option
@json_command
def group(weights, genus, mode):
    """The group generated by admissible transpositions"""
    w = weight_data(weights, genus, mode)
    g = admissible_group(w)
    data = g.to_dict()
    data['components'] = [list(c) for c in transposition_components(
        [(p(k), k) for p in g.generators for k in range(1, w.n + 1) if p(k) > k], w.n)]
    return data


@bp.cli.command('aut')
@weights_option()
@genus_option
@mode_option
@click.option('--stack', is_flag=True, help='Automorphisms of the moduli stack')
@json_command
def aut(weights, genus, mode, stack):
    """Automorphism group of the Hassett space"""
    return aut_descriptor(weight_data(weights, genus, mode), stack=stack).to_dict()
