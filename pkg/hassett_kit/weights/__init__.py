from flask import Blueprint

bp = Blueprint('weights', __name__, cli_group='weights')

from hassett_kit.weights import commands
