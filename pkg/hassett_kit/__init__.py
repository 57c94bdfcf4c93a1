import logging
import os

from flask import Flask
from flask.logging import default_handler

from config import config


def configure_logging(app):
    """Package logs go to standard error through Flask's default handler"""
    logger = logging.getLogger(__name__)
    logger.setLevel(app.config['LOG_LEVEL'])
    if default_handler not in logger.handlers:
        logger.addHandler(default_handler)


def config_name_from_env():
    """Map HASSETT_KIT_ENV to a config name"""
    env = os.getenv('HASSETT_KIT_ENV', 'default')
    return env if env in config else 'default'


def create_app(config_name='default'):
    """Application factory pattern"""
    app = Flask(__name__)
    app.config.from_object(config[config_name])
    config[config_name].init_app(app)

    configure_logging(app)

    # Register blueprints (command groups only)
    from hassett_kit.weights import bp as weights_bp
    app.register_blueprint(weights_bp)

    from hassett_kit.strata import bp as strata_bp
    app.register_blueprint(strata_bp)

    from hassett_kit.symmetry import bp as symmetry_bp
    app.register_blueprint(symmetry_bp)

    from hassett_kit.polyalg import bp as polyalg_bp
    app.register_blueprint(polyalg_bp)

    from hassett_kit.groebner import bp as groebner_bp
    app.register_blueprint(groebner_bp)

    from hassett_kit.deform import bp as deform_bp
    app.register_blueprint(deform_bp)

    from hassett_kit.main import bp as main_bp
    app.register_blueprint(main_bp)

    return app
