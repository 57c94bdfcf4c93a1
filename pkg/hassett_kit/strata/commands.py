import click

from hassett_kit.strata import bp
from hassett_kit.strata.operations import (boundary_divisor, count_by_tag,
                                           factor_reduction)
from hassett_kit.utils.commands import (genus_option, json_command, split_labels,
                                        weight_data, weights_option)


@bp.cli.command('classify')
@weights_option()
@genus_option
@click.option('--subset', '-I', 'subsets', required=True, multiple=True,
              help='Comma separated markings on the genus-0 tail, repeatable')
@json_command
def classify(weights, genus, subsets):
    """Classify the boundary divisors D_{I,J}, one record per subset"""
    w = weight_data(weights, genus, 'strict')
    return [boundary_divisor(w, split_labels(subset)).to_dict() for subset in subsets]


@bp.cli.command('reduce')
@weights_option('--from', 'source', help='Weights of the source space')
@weights_option('--to', 'target', help='Weights of the target space')
@genus_option
@json_command
def reduce_morphism(source, target, genus):
    """Factor the reduction morphism into single-divisor blow-downs"""
    a = weight_data(source, genus, 'strict')
    b = weight_data(target, genus, 'strict')
    return [step.to_dict() for step in factor_reduction(a, b)]


@bp.cli.command('count')
@weights_option()
@genus_option
@json_command
def count(weights, genus):
    """Number of canonical subsets per tag"""
    return count_by_tag(weight_data(weights, genus, 'strict'))
