"""Runtime configuration read from the environment (and a .env file, if present)."""
import os
from pathlib import Path
from typing import Optional

from dotenv import load_dotenv

from knotclock.constants import DEFAULT_TABLE_FILENAME, ENV_TABLE_PATH, ENV_WORKERS

# Load environment variables from .env file
load_dotenv()

PACKAGE_DIR = Path(__file__).resolve().parent
DEFAULT_TABLE_PATH = PACKAGE_DIR / "data" / DEFAULT_TABLE_FILENAME


def get_table_path(override: Optional[Path] = None) -> Path:
    """Table file: explicit override, then KNOTCLOCK_TABLE, then the bundled table."""
    if override is not None:
        return override / DEFAULT_TABLE_FILENAME if override.is_dir() else override
    from_env = os.getenv(ENV_TABLE_PATH)
    if from_env:
        path = Path(from_env)
        return path / DEFAULT_TABLE_FILENAME if path.is_dir() else path
    return DEFAULT_TABLE_PATH


def get_workers(override: Optional[int] = None) -> int:
    """Worker processes for verification sweeps; 1 means run in-process."""
    if override is not None:
        return max(1, override)
    raw = os.getenv(ENV_WORKERS, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1
