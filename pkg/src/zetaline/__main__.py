"""Entry point for ``python -m zetaline``."""

from .cli import main

raise SystemExit(main())
