import sys

from revolute.cli.cli import run

sys.exit(run(sys.argv[1:]))
