import json
from pathlib import Path
from typing import Any

from threetangle.utils.exceptions import UnsupportedFileTypeError
from threetangle.utils.loaders.base_loader import BaseLoader


class JSONLoader(BaseLoader):
    """Loader for plain JSON files."""

    file_extensions: tuple[str, ...] = (".json",)

    def load(self, file_path: Path, **kwargs: Any) -> Any:
        """
        Loads a JSON file.

        Raises:
            UnsupportedFileTypeError: If the suffix is not ``.json``.
            FileNotFoundError: If ``file_path`` is not a file.
            json.JSONDecodeError: If the content is not valid JSON.
        """
        if not self.__class__.is_loader_support_extension(file_path.suffix):
            raise UnsupportedFileTypeError(
                f"{self.__class__.__name__} reads "
                f"{', '.join(self.file_extensions)} files, got '{file_path}'"
            )
        self.__class__.validate_file_exists(file_path)
        with open(file_path, encoding="utf-8") as f:
            return json.load(f)
