"""
Settings lookup
Reads limits from the active application when there is one, so the pure
library functions also work outside an application context.
"""

from flask import current_app, has_app_context
from config import Config


def get_setting(name):
    """Return configuration value `name`"""
    if has_app_context():
        return current_app.config.get(name, getattr(Config, name))
    return getattr(Config, name)
