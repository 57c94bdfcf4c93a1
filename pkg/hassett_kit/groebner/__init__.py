from flask import Blueprint

bp = Blueprint('groebner', __name__, cli_group='gb')

from hassett_kit.groebner import commands
