from threetangle.utils.loaders.base_loader import BaseLoader
from threetangle.utils.loaders.json_loader import JSONLoader
from threetangle.utils.loaders.state_loaders import (
    DensityMatrixLoader,
    PureStateLoader,
)

__all__ = [
    "BaseLoader",
    "DensityMatrixLoader",
    "JSONLoader",
    "PureStateLoader",
]
