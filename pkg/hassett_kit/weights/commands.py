import click

from hassett_kit.utils.commands import (genus_option, json_command, mode_option,
                                        weight_data, weights_option)
from hassett_kit.weights import bp
from hassett_kit.weights.operations import (kapranov_chain, kapranov_weights,
                                            moduli_dimension)


@bp.cli.command('check')
@weights_option()
@genus_option
@mode_option
@json_command
def check(weights, genus, mode):
    """Validate weight data"""
    w = weight_data(weights, genus, mode)
    data = w.to_dict()
    data['admissible'] = True
    data['n'] = w.n
    return data


@bp.cli.command('kapranov')
@click.option('-n', 'n', type=int, required=True, help='Number of markings')
@click.option('-r', 'r', type=int, required=True)
@click.option('-s', 's', type=int, required=True)
@json_command
def kapranov(n, r, s):
    """Kapranov weights A_{r,s}[n]"""
    return [str(a) for a in kapranov_weights(n, r, s).weights]


@bp.cli.command('dim')
@weights_option()
@genus_option
@mode_option
@json_command
def dim(weights, genus, mode):
    """Dimension 3g - 3 + n of the moduli space"""
    w = weight_data(weights, genus, mode)
    return {'genus': w.genus, 'n': w.n, 'dimension': moduli_dimension(w)}


@bp.cli.command('chain')
@click.option('-n', 'n', type=int, required=True, help='Number of markings')
@json_command
def chain(n):
    """Kapranov's map as a chain of reduction morphisms"""
    return [{'r': r, 's': s, 'weights': [str(a) for a in w.weights]}
            for r, s, w in kapranov_chain(n)]
