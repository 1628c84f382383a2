"""Runtime configuration read from the environment (and an optional .env file)."""
import logging
import os
from pathlib import Path
from typing import Optional

from dotenv import load_dotenv

from src.errors import ConfigError

env_path = Path(__file__).parent.parent.parent / '.env'
load_dotenv(dotenv_path=env_path)

WORKERS_ENV = "ANT_SYSTEM_WORKERS"
LOG_LEVEL_ENV = "ANT_SYSTEM_LOG_LEVEL"
DATA_DIR_ENV = "ANT_SYSTEM_DATA_DIR"

DEFAULT_DATA_DIR = Path(__file__).parent.parent.parent / "data" / "tsplib"
DEFAULT_LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"

SELECTION_OPTIONS = ["roulette", "roulette-recompute", "nn", "data-parallel"]
DEPOSIT_OPTIONS = ["accumulate", "scatter-gather", "scatter-gather-tiled", "symmetric"]


def default_workers() -> int:
    """ANT_SYSTEM_WORKERS if set, otherwise the number of available CPUs."""
    raw = os.getenv(WORKERS_ENV)
    if raw is None:
        return os.cpu_count() or 1
    try:
        workers = int(raw)
    except ValueError as exc:
        raise ConfigError(f"{WORKERS_ENV} must be an integer, got {raw!r}") from exc
    if workers < 1:
        raise ConfigError(f"{WORKERS_ENV} must be >= 1, got {workers}")
    return workers


def data_dir() -> Path:
    return Path(os.getenv(DATA_DIR_ENV, str(DEFAULT_DATA_DIR)))


def resolve_instance(path: Path) -> Path:
    """Return path as given if it exists, else look it up in the data directory."""
    if path.exists() or path.is_absolute():
        return path
    candidate = data_dir() / path
    return candidate if candidate.exists() else path


def configure_logging(verbose: bool = False, level: Optional[str] = None) -> None:
    """Root logging setup for the CLI; --verbose wins over ANT_SYSTEM_LOG_LEVEL."""
    name = "DEBUG" if verbose else (level or os.getenv(LOG_LEVEL_ENV, "WARNING")).upper()
    logging.basicConfig(level=getattr(logging, name, logging.WARNING), format=DEFAULT_LOG_FORMAT)
