from pathlib import Path
from typing import Any

import pytest

from threetangle.utils.loaders import BaseLoader


class DummyLoader(BaseLoader):
    file_extensions = (".json", ".txt")

    def load(self, file_path: Path, **kwargs: Any) -> Any:
        raise NotImplementedError


def test_is_loader_support_extension():
    assert DummyLoader.is_loader_support_extension(".json")
    assert DummyLoader.is_loader_support_extension(".TXT")
    assert not DummyLoader.is_loader_support_extension(".csv")
    assert not DummyLoader.is_loader_support_extension("")


def test_validate_file_exists(tmp_path):
    file = tmp_path / "state.json"
    file.touch()
    assert DummyLoader.validate_file_exists(file) is None


def test_validate_file_exists_file_non_exists(tmp_path):
    with pytest.raises(FileNotFoundError, match="DummyLoader"):
        DummyLoader.validate_file_exists(tmp_path / "missing.json")


def test_validate_directory(tmp_path):
    with pytest.raises(FileNotFoundError):
        DummyLoader.validate_file_exists(tmp_path)


def test_base_loader_abstract_methods():
    with pytest.raises(TypeError):
        BaseLoader()
