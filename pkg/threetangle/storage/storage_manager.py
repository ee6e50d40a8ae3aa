from abc import ABC, abstractmethod
from collections.abc import Iterable, Sequence
from pathlib import Path
from typing import Union

from pydantic import BaseModel

from threetangle.models.run_manifest import RunManifest

Cell = Union[str, int, float, bool, None]

STDOUT_TARGET = "-"


class StorageManager(ABC):
    """
    Abstract base class for writing command results.

    A target is a file path, or ``"-"`` for standard output.
    """

    @abstractmethod
    def save_table(
        self,
        target: str,
        header: Sequence[str],
        rows: Iterable[Sequence[Cell]],
        manifest: RunManifest,
    ) -> None:
        """
        Writes a CSV table and makes its manifest available next to it.

        Args:
            target: Output path or ``"-"``.
            header: Column names.
            rows: Table rows; may be a generator consumed once.
            manifest: Run description accompanying the table.
        """
        pass

    @abstractmethod
    def save_document(self, target: str, document: BaseModel) -> None:
        """Writes a JSON document (which embeds its own manifest)."""
        pass

    @abstractmethod
    def companion_path(self, target: str, name: str) -> Path:
        """Location of an extra file produced alongside ``target``."""
        pass
