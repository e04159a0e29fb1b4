"""Allow running tilearith as ``python -m tilearith``."""

import sys

from tilearith.cli import main

sys.exit(main())
