"""
Configuration
Validated settings loaded from an optional JSON file
"""

import json
import logging
from pathlib import Path
from typing import Optional

from pydantic import BaseModel, Field, field_validator

from .channels import TruncationPolicy

logger = logging.getLogger(__name__)

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


class AbfluxConfig(BaseModel):
    """Defaults for truncation, parallelism and logging"""
    policy: TruncationPolicy = Field(default_factory=TruncationPolicy)
    workers: int = Field(4, ge=1, le=64)
    log_level: str = "WARNING"

    @field_validator("log_level")
    @classmethod
    def _check_level(cls, level: str) -> str:
        level = level.upper()
        if level not in LOG_LEVELS:
            raise ValueError(f"log_level must be one of {', '.join(LOG_LEVELS)}")
        return level


def load_config(path: Optional[Path] = None) -> AbfluxConfig:
    """Read a JSON config file; no path means built-in defaults"""
    if path is None:
        return AbfluxConfig()
    with open(path) as f:
        data = json.load(f)
    config = AbfluxConfig.model_validate(data)
    logger.debug(f"loaded configuration from {path}")
    return config


def save_config(config: AbfluxConfig, path: Path):
    """Write config as indented JSON"""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w") as f:
        f.write(config.model_dump_json(indent=2) + "\n")
