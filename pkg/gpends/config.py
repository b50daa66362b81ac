"""
Configuration management for gp-ends
Loads configuration from environment variables using python-dotenv
"""

import os
from pathlib import Path
from typing import Optional

from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()


class Config:
    """Configuration class that loads all settings from environment variables"""

    # Cayley oracle
    BALL_CAP = int(os.getenv('GPENDS_BALL_CAP', '2000000'))
    ORACLE_RMAX = int(os.getenv('GPENDS_ORACLE_RMAX', '4'))
    ORACLE_MARGIN = int(os.getenv('GPENDS_ORACLE_MARGIN', '3'))

    # Clique separator search
    SEPARATOR_BUDGET = int(os.getenv('GPENDS_SEPARATOR_BUDGET', '10000'))

    # Classifier vs. oracle cross-check
    CROSSCHECK_MAX_VERTICES = int(os.getenv('GPENDS_CROSSCHECK_MAX_VERTICES', '5'))
    CROSSCHECK_RMAX = int(os.getenv('GPENDS_CROSSCHECK_RMAX', '4'))
    CROSSCHECK_MARGIN = int(os.getenv('GPENDS_CROSSCHECK_MARGIN', '3'))

    # Logging
    LOG_FILE = os.getenv('GPENDS_LOG_FILE', '')

    @classmethod
    def log_path(cls) -> Optional[Path]:
        """Log file path, or None when file logging is disabled"""
        return Path(cls.LOG_FILE) if cls.LOG_FILE else None

    @classmethod
    def validate(cls):
        """Validate that all settings are within their allowed ranges"""
        problems = []

        if cls.SEPARATOR_BUDGET < 1:
            problems.append(f"GPENDS_SEPARATOR_BUDGET must be >= 1 (got {cls.SEPARATOR_BUDGET})")

        if cls.BALL_CAP < 1:
            problems.append(f"GPENDS_BALL_CAP must be >= 1 (got {cls.BALL_CAP})")

        for var in ('ORACLE_RMAX', 'ORACLE_MARGIN', 'CROSSCHECK_RMAX', 'CROSSCHECK_MARGIN'):
            if getattr(cls, var) < 2:
                problems.append(f"GPENDS_{var} must be >= 2 (got {getattr(cls, var)})")

        if not 0 <= cls.CROSSCHECK_MAX_VERTICES <= 7:
            problems.append(
                f"GPENDS_CROSSCHECK_MAX_VERTICES must be in 0..7 "
                f"(got {cls.CROSSCHECK_MAX_VERTICES})"
            )

        log_path = cls.log_path()
        if log_path is not None and not log_path.parent.exists():
            problems.append(f"Log directory does not exist: {log_path.parent}")

        if problems:
            raise ValueError(
                "Invalid configuration:\n  " + "\n  ".join(problems) +
                "\nPlease check your .env file"
            )

        return True
