"""Seven 3-dimensional multidimensional continued fraction algorithms.

>>> from mcf import algorithm
>>> algorithm("Brun").step((0.2, 0.3, 0.5))
('123', (0.2, 0.3, 0.2))
"""

from .algorithms import ALGORITHM_NAMES, AlgorithmDef, Branch, algorithm, all_algorithms, project
from .errors import (
    DegenerateVectorError,
    LoopError,
    MCFError,
    NonIntegerError,
    StallError,
    UnimodularityError,
)
from .words import Substitution

__version__ = "0.1.0"

__all__ = [
    "ALGORITHM_NAMES",
    "AlgorithmDef",
    "Branch",
    "DegenerateVectorError",
    "LoopError",
    "MCFError",
    "NonIntegerError",
    "StallError",
    "Substitution",
    "UnimodularityError",
    "algorithm",
    "all_algorithms",
    "project",
]
