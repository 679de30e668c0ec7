"""Runtime settings read from the environment (and an optional .env file)."""

from __future__ import annotations

import logging
import os
from dataclasses import dataclass

from dotenv import load_dotenv

load_dotenv()

logger = logging.getLogger(__name__)

REPORT_FORMATS = ("table", "csv", "json")


@dataclass(frozen=True)
class Settings:
    log_level: str = "WARNING"
    svg_scale: float = 500.0
    svg_width: int = 800
    report_format: str = "table"


def _number(name: str, default: float, cast: type = float) -> float:
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return default
    try:
        value = cast(raw.strip())
    except ValueError:
        logger.warning("[Config] %s=%r is not a number, using %s", name, raw, default)
        return default
    if value <= 0:
        logger.warning("[Config] %s must be positive, using %s", name, default)
        return default
    return value


def settings_from_env() -> Settings:
    report_format = os.getenv("SYMTRUSS_FORMAT", "table").strip().lower()
    if report_format not in REPORT_FORMATS:
        logger.warning("[Config] SYMTRUSS_FORMAT=%r is not one of %s", report_format, REPORT_FORMATS)
        report_format = "table"
    return Settings(
        log_level=os.getenv("SYMTRUSS_LOG_LEVEL", "WARNING").strip().upper() or "WARNING",
        svg_scale=_number("SYMTRUSS_SVG_SCALE", 500.0),
        svg_width=int(_number("SYMTRUSS_SVG_WIDTH", 800, int)),
        report_format=report_format,
    )


SETTINGS = settings_from_env()
