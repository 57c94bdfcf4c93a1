from flask import Blueprint

bp = Blueprint('polyalg', __name__, cli_group='poly')

from hassett_kit.polyalg import commands
