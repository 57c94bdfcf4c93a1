import os

import click
from flask import current_app

from hassett_kit.errors import ConsistencyError
from hassett_kit.main import bp
from hassett_kit.main.verification import verify_paper
from hassett_kit.utils.commands import QUIET_KEY, json_command

GOLDEN_COMMANDS = [
    ('weights_kapranov_6_1_1', ('weights', 'kapranov', '-n', '6', '-r', '1', '-s', '1')),
    ('weights_chain_6', ('weights', 'chain', '-n', '6')),
    ('strata_reduce_six', ('strata', 'reduce', '--from', '1,1,1,1,1,1',
                           '--to', '1,1/3,1/3,1/3,1/3,1/3')),
    ('strata_count_six', ('strata', 'count', '-w', '1,1,1,1,1,1')),
    ('sym_group_genus_one', ('sym', 'group', '-g', '1', '-w', '1,1/3,1/3,1/3')),
    ('sym_aut_kapranov_7_2_1', ('sym', 'aut', '-w', '1/4,1/4,1/4,1/4,1/4,1,1')),
    ('poly_parse_local_model', ('poly', 'parse', 'x^2*w + x*y - z*w')),
    ('gb_dim_local_model', ('gb', 'dim', '--gens', 'x^2*w + x*y - z*w; 2*x*w + y; x; -w; x^2 - z')),
    ('segre_poly', ('segre', 'poly')),
    ('segre_nodes', ('segre', 'nodes')),
    ('segre_ledger', ('segre', 'ledger')),
]


def capture(argv):
    """Run a command of this application and return its payload without printing"""
    cli = current_app.cli
    with cli.make_context(current_app.config['APP_NAME'], list(argv)) as ctx:
        ctx.meta[QUIET_KEY] = True
        return cli.invoke(ctx)


def render(payload):
    return current_app.json.dumps(payload, indent=current_app.config.get('JSON_INDENT')) + '\n'


@bp.cli.command('verify-paper')
@json_command
def verify_paper_command():
    """Recompute every closed-form claim and report pass/fail"""
    return verify_paper()


@bp.cli.command('golden')
@click.option('--write', 'action', flag_value='write', help='Regenerate the golden files')
@click.option('--check', 'action', flag_value='check', default=True, help='Compare against the golden files')
@click.option('--dir', 'directory', default=None, help='Golden directory  [default: GOLDEN_DIR]')
@json_command
def golden(action, directory):
    """Regenerate or check the golden JSON outputs"""
    directory = directory or current_app.config['GOLDEN_DIR']
    if action == 'write':
        os.makedirs(directory, exist_ok=True)
    written, mismatches = [], []
    for name, argv in GOLDEN_COMMANDS:
        path = os.path.join(directory, f'{name}.json')
        text = render(capture(argv))
        if action == 'write':
            with open(path, 'w', encoding='utf-8') as handle:
                handle.write(text)
            written.append(name)
            continue
        if not os.path.exists(path):
            mismatches.append({'name': name, 'reason': 'missing'})
            continue
        with open(path, encoding='utf-8') as handle:
            if handle.read() != text:
                mismatches.append({'name': name, 'reason': 'differs'})
    if mismatches:
        raise ConsistencyError(f'{len(mismatches)} golden files do not match', mismatches=mismatches)
    if action == 'write':
        return {'written': written, 'directory': directory}
    return {'checked': len(GOLDEN_COMMANDS), 'mismatches': []}
