"""
Command helpers
Shared click options and JSON emission for the blueprint command groups.
"""

import functools
import re

import click
from flask import current_app

from hassett_kit.models_weights import Mode

QUIET_KEY = 'hassett_kit.quiet'
LABEL_PATTERN = re.compile(r'-?[0-9]+')


def emit(payload):
    """Print the payload as one JSON document unless output is captured"""
    ctx = click.get_current_context(silent=True)
    if ctx is None or not ctx.meta.get(QUIET_KEY):
        click.echo(current_app.json.dumps(payload, indent=current_app.config.get('JSON_INDENT')))
    return payload


def json_command(f):
    """The command's return value is its JSON payload"""
    @functools.wraps(f)
    def wrapper(*args, **kwargs):
        return emit(f(*args, **kwargs))
    return wrapper


def split_rationals(text):
    from hassett_kit.weights.operations import parse_rational
    return [parse_rational(part.strip()) for part in text.split(',') if part.strip()]


def split_labels(text):
    labels = []
    for part in text.split(','):
        part = part.strip()
        if not part:
            continue
        if not LABEL_PATTERN.fullmatch(part):
            raise click.BadParameter(f'{part!r} is not a marking label')
        labels.append(int(part))
    return labels


def genus_option(f):
    return click.option('--genus', '-g', type=click.IntRange(min=0), default=None,
                        help='Genus of the curves  [default: 0]')(f)


def mode_option(f):
    return click.option('--mode', type=click.Choice([m.value for m in Mode]), default=None,
                        help='Admissibility variant  [default: strict]')(f)


def weight_data(text, genus, mode):
    """Weights from '1,1/3,1/3' or from a JSON document"""
    from hassett_kit.weights.operations import validate_weight_data, weights_from_json

    text = text.strip()
    if text.startswith(('[', '{')):
        return weights_from_json(text, genus=genus, mode=mode)
    return validate_weight_data(genus or 0, split_rationals(text), mode or Mode.STRICT)


def weights_option(*names, **kwargs):
    names = names or ('--weights', '-w')
    kwargs.setdefault('help', 'Comma separated weights such as "1,1/3,1/3" or a JSON document')
    return click.option(*names, required=True, **kwargs)


def vars_option(f):
    return click.option('--vars', 'variables', default='x,y,z,w', show_default=True,
                        help='Comma separated variable names')(f)
