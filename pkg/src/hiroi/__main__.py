"""Run the command-line interface via ``python -m hiroi``."""

import sys

from .cli import main

sys.exit(main())
