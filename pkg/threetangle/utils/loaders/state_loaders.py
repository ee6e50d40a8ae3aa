from pathlib import Path
from typing import Any

import numpy as np

from threetangle.models.state_files import (
    DensityMatrixFile,
    PureStateFile,
    pairs_to_complex,
)
from threetangle.qstate.states import DensityMatrix, PureState
from threetangle.utils.loaders.json_loader import JSONLoader

__all__ = ["DensityMatrixLoader", "PureStateLoader"]


class PureStateLoader(JSONLoader):
    """
    Loads ``{"amplitudes": [[re, im], ...]}`` into a :class:`PureState`.

    Raises:
        pydantic.ValidationError: If the document does not match the format.
        InvalidStateError: If the amplitudes are not normalized.
    """

    def load(self, file_path: Path, **kwargs: Any) -> PureState:
        document = PureStateFile.model_validate(super().load(file_path))
        return PureState(amplitudes=pairs_to_complex(document.amplitudes))


class DensityMatrixLoader(JSONLoader):
    """
    Loads ``{"dim": n, "entries": [[re, im], ...]}`` (row-major, ``n * n``
    entries) into a :class:`DensityMatrix`.
    """

    def load(self, file_path: Path, **kwargs: Any) -> DensityMatrix:
        document = DensityMatrixFile.model_validate(super().load(file_path))
        entries = pairs_to_complex(document.entries)
        return DensityMatrix(
            entries=np.reshape(entries, (document.dim, document.dim))
        )
