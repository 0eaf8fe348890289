import sys

from .command_line import main


def run_app():
    """Runs the dehnslide command line and exits with its status code."""
    sys.exit(main(sys.argv))


if __name__ == '__main__':
    run_app()
