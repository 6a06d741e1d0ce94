"""Exact q-series toolkit for characters, Kostka-type multiplicities and
fusion in the (1,p) logarithmic models."""

from .errors import ModelMismatchError, ParameterError, TruncationError
from .model import build_model
from .series import QPoly, QSeries, ZLaurent

__version__ = "0.1.0"

__all__ = ["ModelMismatchError", "ParameterError", "QPoly", "QSeries",
           "TruncationError", "ZLaurent", "build_model", "__version__"]
