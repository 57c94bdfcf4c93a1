from flask import Blueprint

# Commands registered at the top level of the command tree
bp = Blueprint('main', __name__, cli_group=None)

from hassett_kit.main import commands
