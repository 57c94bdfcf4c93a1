from flask import Blueprint

bp = Blueprint('strata', __name__, cli_group='strata')

from hassett_kit.strata import commands
