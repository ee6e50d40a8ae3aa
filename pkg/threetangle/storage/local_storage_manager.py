import csv
import sys
from collections.abc import Iterable, Sequence
from pathlib import Path
from typing import Optional, TextIO

from pydantic import BaseModel

from threetangle.models.run_manifest import RunManifest
from threetangle.storage.storage_manager import (
    STDOUT_TARGET,
    Cell,
    StorageManager,
)
from threetangle.utils.logger_m import logger

__all__ = ["LocalStorageManager", "format_cell"]

MANIFEST_SUFFIX = ".manifest.json"


def format_cell(value: Cell) -> str:
    """Twelve significant digits for floats, lowercase booleans."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format(value, ".12g")
    return str(value)


class LocalStorageManager(StorageManager):
    """
    Writes command results to the local file system.

    Args:
        root_folder: Folder that relative targets are resolved against.
        stdout: Stream used for the ``"-"`` target.
    """

    def __init__(
        self,
        root_folder: Optional[Path] = None,
        stdout: Optional[TextIO] = None,
    ):
        self.root_folder = root_folder if root_folder is not None else Path()
        self.stdout = stdout

    def _stream(self) -> TextIO:
        return self.stdout if self.stdout is not None else sys.stdout

    def resolve(self, target: str) -> Path:
        path = Path(target)
        return path if path.is_absolute() else self.root_folder / path

    def companion_path(self, target: str, name: str) -> Path:
        if target == STDOUT_TARGET:
            return self.root_folder / name
        return self.resolve(target).parent / name

    def manifest_path(self, target: str) -> Path:
        path = self.resolve(target)
        return path.with_name(path.name + MANIFEST_SUFFIX)

    @staticmethod
    def _write_rows(
        stream: TextIO,
        header: Sequence[str],
        rows: Iterable[Sequence[Cell]],
    ) -> int:
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(header)
        count = 0
        for row in rows:
            writer.writerow([format_cell(value) for value in row])
            count += 1
        return count

    def save_table(
        self,
        target: str,
        header: Sequence[str],
        rows: Iterable[Sequence[Cell]],
        manifest: RunManifest,
    ) -> None:
        if target == STDOUT_TARGET:
            count = self._write_rows(self._stream(), header, rows)
            logger.info(f"Run manifest: {manifest.model_dump_json()}")
            logger.debug(f"Wrote {count} rows to standard output")
            return
        path = self.resolve(target)
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8", newline="") as f:
            count = self._write_rows(f, header, rows)
        self.manifest_path(target).write_text(
            manifest.model_dump_json(indent=2) + "\n", encoding="utf-8"
        )
        logger.info(f"Saved {count} rows to {path}")

    def save_document(self, target: str, document: BaseModel) -> None:
        content = document.model_dump_json(indent=2) + "\n"
        if target == STDOUT_TARGET:
            self._stream().write(content)
            return
        path = self.resolve(target)
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8", newline="") as f:
            f.write(content)
        logger.info(f"Saved {type(document).__name__} to {path}")
