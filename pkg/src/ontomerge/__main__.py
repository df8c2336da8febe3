"""Module entry point: python -m ontomerge ..."""

import sys

from .cli import main

sys.exit(main())
