import os
from collections.abc import Mapping
from functools import lru_cache
from pathlib import Path
from typing import Optional

from pydantic import BaseModel, Field, ValidationError

__all__ = ["ToolkitSettings", "get_settings", "ENV_PREFIX"]

ENV_PREFIX = "THREETANGLE_"


class ToolkitSettings(BaseModel):
    log_folder: Optional[Path] = None
    file_logging: bool = True
    curve_cap: int = Field(default=250_000, gt=0)
    workers: int = Field(default=1, ge=1)


def _settings_from_environ(environ: Mapping[str, str]) -> dict[str, str]:
    values = {}
    for field_name in ToolkitSettings.model_fields:
        raw = environ.get(f"{ENV_PREFIX}{field_name.upper()}")
        if raw is not None and raw != "":
            values[field_name] = raw
    return values


@lru_cache(maxsize=1)
def get_settings() -> ToolkitSettings:
    """
    Retrieves the toolkit settings from ``THREETANGLE_*`` environment
    variables.

    Returns:
        Validated settings. Invalid variables fall back to the defaults; the
        problem is reported once through the package logger.
    """
    values = _settings_from_environ(os.environ)
    try:
        return ToolkitSettings.model_validate(values)
    except ValidationError as ex:
        from threetangle.utils.logger_m import logger

        settings = ToolkitSettings()
        logger.warning(f"Ignoring invalid {ENV_PREFIX}* settings: {ex}")
        return settings
