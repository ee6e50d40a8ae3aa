from threetangle.storage.local_storage_manager import (
    LocalStorageManager,
    format_cell,
)
from threetangle.storage.storage_manager import (
    STDOUT_TARGET,
    Cell,
    StorageManager,
)

__all__ = [
    "Cell",
    "LocalStorageManager",
    "STDOUT_TARGET",
    "StorageManager",
    "format_cell",
]
