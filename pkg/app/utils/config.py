"""
Configuration Management

Environment-driven settings for the distance-residual toolkit
"""
import os
from pathlib import Path
from typing import Optional
from dotenv import load_dotenv

# Load environment variables
load_dotenv()

_PACKAGE_DATA = Path(__file__).resolve().parent.parent / "data"


def _flag(value: Optional[str]) -> bool:
    return (value or "").strip().lower() in ("1", "true", "yes", "on")


class Config:
    """Application Configuration"""

    # Data files (ljubljana.g6, folkman.lcf)
    DISTRES_DATA: str = os.getenv("DISTRES_DATA", str(_PACKAGE_DATA))
    DATA_FILES = ("ljubljana.g6", "folkman.lcf")

    # Randomness and verification
    DISTRES_SEED: int = int(os.getenv("DISTRES_SEED", "0"))
    DISTRES_JOBS: int = int(os.getenv("DISTRES_JOBS", "1"))
    DISTRES_PROGRESS: bool = _flag(os.getenv("DISTRES_PROGRESS"))

    # Isomorphism / orbit search completeness bound
    DISTRES_MAX_ORDER: int = int(os.getenv("DISTRES_MAX_ORDER", "150"))

    # Logging Configuration
    LOG_LEVEL: str = os.getenv("LOG_LEVEL", "INFO")
    LOG_FILE: Optional[str] = os.getenv("LOG_FILE")

    @classmethod
    def data_dir(cls) -> Path:
        """Data directory, re-reading DISTRES_DATA so overrides apply at runtime"""
        return Path(os.getenv("DISTRES_DATA", cls.DISTRES_DATA))

    @classmethod
    def data_path(cls, name: str) -> Path:
        """Full path of a bundled data file"""
        return cls.data_dir() / name

    @classmethod
    def validate(cls) -> bool:
        """Validate that every bundled data file is present"""
        missing = [name for name in cls.DATA_FILES if not cls.data_path(name).is_file()]

        if missing:
            raise ValueError(f"Missing data files in {cls.data_dir()}: {', '.join(missing)}")

        return True


# Singleton instance
config = Config()
