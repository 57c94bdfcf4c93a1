"""
Command runner
Runs one command of the application and turns its outcome into a
CommandResult with the exit-code contract: 0 ok, 2 rejected, 1 error,
64 usage error.
"""

import logging
import sys
import time
from dataclasses import dataclass
from enum import Enum

import click

from hassett_kit.errors import HassettKitError

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_REJECTED = 2
EXIT_USAGE = 64


class Status(Enum):
    OK = 'ok'
    REJECTED = 'rejected'
    ERROR = 'error'


@dataclass
class CommandResult:
    status: Status
    payload: object
    elapsed_ms: int
    exit_code: int
    reason: str = None


def _failure(exc):
    if isinstance(exc, HassettKitError):
        return exc.to_dict()
    return {'code': 'internal_error', 'message': str(exc) or exc.__class__.__name__}


def run(argv, app=None):
    """Run `argv` against the command tree of `app` and report the outcome"""
    if app is None:
        from hassett_kit import config_name_from_env, create_app
        app = create_app(config_name_from_env())
    started = time.perf_counter()

    def elapsed():
        return int((time.perf_counter() - started) * 1000)

    with app.app_context():
        try:
            payload = app.cli.main(args=list(argv), prog_name=app.config['APP_NAME'],
                                   standalone_mode=False)
        except click.UsageError as exc:
            exc.show(file=sys.stderr)
            return CommandResult(Status.ERROR, None, elapsed(), EXIT_USAGE, reason='usage')
        except click.exceptions.Abort:
            return CommandResult(Status.ERROR, None, elapsed(), EXIT_ERROR, reason='aborted')
        except click.ClickException as exc:
            exc.show(file=sys.stderr)
            return CommandResult(Status.ERROR, None, elapsed(), EXIT_ERROR, reason='click_error')
        except Exception as exc:
            payload = _failure(exc)
            click.echo(app.json.dumps({'status': 'rejected' if getattr(exc, 'rejection', False) else 'error',
                                       **payload}))
            if isinstance(exc, HassettKitError) and exc.rejection:
                logger.warning('Rejected: %s', exc.message)
                return CommandResult(Status.REJECTED, payload, elapsed(), EXIT_REJECTED, reason=exc.code)
            logger.exception('Command failed')
            return CommandResult(Status.ERROR, payload, elapsed(), EXIT_ERROR, reason=payload['code'])

    if isinstance(payload, int) and not isinstance(payload, bool) and payload != 0:
        # --help and friends exit through click with a status code
        return CommandResult(Status.ERROR, None, elapsed(), payload, reason='exit')
    return CommandResult(Status.OK, payload, elapsed(), EXIT_OK)
