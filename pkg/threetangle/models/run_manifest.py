from collections.abc import Mapping
from datetime import datetime, timezone
from typing import Any, Optional

from pydantic import BaseModel, Field, field_serializer

from threetangle.version import __version__

__all__ = ["RunManifest"]


def _utc_now() -> datetime:
    return datetime.now(timezone.utc).replace(microsecond=0)


class RunManifest(BaseModel):
    command: str
    parameters: Mapping[str, Any] = Field(default_factory=dict)
    seed: Optional[int] = None
    tool_version: str = __version__
    timestamp: datetime = Field(default_factory=_utc_now)

    @field_serializer("timestamp")
    def serialize_timestamp(self, timestamp: datetime) -> str:
        return timestamp.astimezone(timezone.utc).isoformat()
