"""Location of the bundled data directory."""

from __future__ import annotations

import os
from pathlib import Path

DATA_ENV = "PQCOST_DATA_DIR"


def data_dir() -> Path:
    """``$PQCOST_DATA_DIR`` if set, else the data directory shipped with the package."""
    override = os.environ.get(DATA_ENV)
    return Path(override) if override else Path(__file__).with_name("data")
