"""
Payload schemas
Maps each command to the JSON schema its payload follows.
"""

import json
import os

from hassett_kit.utils.settings import get_setting

SCHEMA_NAMES = {
    ('weights', 'check'): 'weights_check',
    ('weights', 'kapranov'): 'weights_kapranov',
    ('weights', 'dim'): 'weights_dim',
    ('weights', 'chain'): 'weights_chain',
    ('strata', 'classify'): 'strata_classify',
    ('strata', 'reduce'): 'strata_reduce',
    ('strata', 'count'): 'strata_count',
    ('sym', 'transposition'): 'sym_transposition',
    ('sym', 'group'): 'sym_group',
    ('sym', 'aut'): 'sym_aut',
    ('poly', 'parse'): 'poly',
    ('poly', 'diff'): 'poly',
    ('poly', 'subst'): 'poly',
    ('poly', 'eval'): 'poly_eval',
    ('gb', 'basis'): 'gb_basis',
    ('gb', 'dim'): 'gb_dim',
    ('gb', 'tyurina'): 'gb_tyurina',
    ('segre', 'poly'): 'segre_poly',
    ('segre', 'nodes'): 'segre_nodes',
    ('segre', 'audit'): 'segre_audit',
    ('segre', 'ledger'): 'segre_ledger',
    ('segre', 'sections'): 'segre_sections',
    ('segre', 'aut'): 'segre_aut',
    ('verify-paper',): 'verify_paper',
    ('golden',): 'golden',
}

ERROR_SCHEMA = 'error'


def schema_name(argv):
    """Schema name for a command line, from its leading command words"""
    words = tuple(argv[:2])
    return SCHEMA_NAMES.get(words) or SCHEMA_NAMES.get(words[:1])


def load_schema(name):
    path = os.path.join(get_setting('SCHEMA_DIR'), f'{name}.json')
    with open(path, encoding='utf-8') as handle:
        return json.load(handle)
