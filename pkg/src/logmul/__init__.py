"""Logarithmic multiplier models, error analysis, and an integer image filter."""

from .kom import (
    KOM_MODELS,
    MODELS,
    VARIANTS,
    MultiplierConfig,
    OperandSplit,
    decompose_operand,
    kom_multiply,
    multiply,
)
from .mitchell import (
    LogDecomposition,
    MitchellProduct,
    UWord,
    efmlm2_multiply,
    leading_one,
    log_decompose,
    mitchell_multiply,
)

__version__ = "0.1.0"

__all__ = [
    "KOM_MODELS",
    "MODELS",
    "VARIANTS",
    "LogDecomposition",
    "MitchellProduct",
    "MultiplierConfig",
    "OperandSplit",
    "UWord",
    "decompose_operand",
    "efmlm2_multiply",
    "kom_multiply",
    "leading_one",
    "log_decompose",
    "mitchell_multiply",
    "multiply",
    "__version__",
]
