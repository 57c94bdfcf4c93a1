import pytest

from hassett_kit import create_app
from hassett_kit.cli import run


@pytest.fixture(scope='session')
def app():
    """Application with the testing configuration, shared by the session"""
    return create_app('testing')


@pytest.fixture
def runner(app):
    return app.test_cli_runner()


@pytest.fixture
def invoke(app):
    """Run a command line and return its CommandResult"""
    def _invoke(*argv):
        return run(list(argv), app)
    return _invoke
