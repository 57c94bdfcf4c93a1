import os
from dotenv import load_dotenv

basedir = os.path.abspath(os.path.dirname(__file__))
load_dotenv(os.path.join(basedir, '.env'))


class Config:
    """Base configuration"""
    APP_NAME = 'hassett-kit'

    # Exact arithmetic limits
    # Abort Groebner computations once a numerator or denominator grows past this many digits
    MAX_COEFFICIENT_DIGITS = int(os.environ.get('HASSETT_KIT_MAX_DIGITS') or 10000)
    STABILIZATION_CAP = 20  # largest power N of the maximal ideal tried by local multiplicity

    # Permutation groups
    MAX_GROUP_DEGREE = 10
    MAX_GROUP_ELEMENTS = 10 ** 6

    # Logging
    LOG_LEVEL = os.environ.get('HASSETT_KIT_LOG_LEVEL') or 'INFO'

    # Output
    GOLDEN_DIR = os.path.join(basedir, 'docs', 'golden')
    SCHEMA_DIR = os.path.join(basedir, 'docs', 'schemas')
    JSON_INDENT = 2

    @staticmethod
    def init_app(app):
        pass


class DevelopmentConfig(Config):
    """Development configuration"""
    DEBUG = True
    LOG_LEVEL = os.environ.get('HASSETT_KIT_LOG_LEVEL') or 'DEBUG'


class ProductionConfig(Config):
    """Production configuration"""
    DEBUG = False
    LOG_LEVEL = os.environ.get('HASSETT_KIT_LOG_LEVEL') or 'WARNING'


class TestingConfig(Config):
    """Testing configuration"""
    TESTING = True
    LOG_LEVEL = 'WARNING'


config = {
    'development': DevelopmentConfig,
    'production': ProductionConfig,
    'testing': TestingConfig,
    'default': ProductionConfig
}
