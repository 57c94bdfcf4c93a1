from flask import Blueprint

bp = Blueprint('deform', __name__, cli_group='segre')

from hassett_kit.deform import commands
