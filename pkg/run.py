import sys

from hassett_kit import config_name_from_env, create_app
from hassett_kit.cli import run

app = create_app(config_name_from_env())


def main():
    sys.exit(run(sys.argv[1:], app).exit_code)


if __name__ == '__main__':
    main()
