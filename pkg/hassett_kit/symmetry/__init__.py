from flask import Blueprint

bp = Blueprint('symmetry', __name__, cli_group='sym')

from hassett_kit.symmetry import commands
