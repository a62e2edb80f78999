"""
Configuration management for twistcheck
"""
import os
from pathlib import Path
from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()

# Base paths
BASE_DIR = Path(__file__).parent.parent
DATA_DIR = BASE_DIR / "data"
LOGS_DIR = BASE_DIR / "logs"
RESULTS_DIR = DATA_DIR / "results"

# Ensure directories exist
DATA_DIR.mkdir(exist_ok=True)
LOGS_DIR.mkdir(exist_ok=True)


class Settings:
    """Application settings loaded from environment variables"""

    # Paths
    BASE_DIR = BASE_DIR
    DATA_DIR = DATA_DIR
    LOGS_DIR = LOGS_DIR
    RESULTS_DIR = RESULTS_DIR

    # Truncation orders
    DEFAULT_ORDER: int = int(os.getenv("DEFAULT_ORDER", "4"))
    MAX_ORDER: int = int(os.getenv("MAX_ORDER", "6"))
    SUITE_ORDER: int = int(os.getenv("SUITE_ORDER", "3"))

    # Verification runs
    DEFAULT_GRID: str = os.getenv("DEFAULT_GRID", "default")
    SEED: int = int(os.getenv("SEED", "0"))
    WORKERS: int = int(os.getenv("WORKERS", "1"))
    HOPF_PAIR_SAMPLES: int = int(os.getenv("HOPF_PAIR_SAMPLES", "6"))
    WRITE_RESULTS: bool = os.getenv("WRITE_RESULTS", "false").lower() == "true"

    # Logging
    LOG_LEVEL: str = os.getenv("LOG_LEVEL", "INFO")
    LOG_FILE: str = str(LOGS_DIR / os.getenv("LOG_FILE", "twistcheck.log"))


settings = Settings()
