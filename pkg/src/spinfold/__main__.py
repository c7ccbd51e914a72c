"""Entry point for ``python -m spinfold``."""

from __future__ import annotations

from .cli import main

raise SystemExit(main())
