"""Two-parameter Fock space representations of affine sl_n on Young diagrams."""

from .laurent import Laurent1, Laurent2, NotDivisible, R, S
from .partitions import Node, Partition
from .fock import FockConfig, FockVector, Generator, Word, apply_word, operator_matrix

__all__ = [
    "Laurent1", "Laurent2", "NotDivisible", "R", "S",
    "Node", "Partition",
    "FockConfig", "FockVector", "Generator", "Word", "apply_word", "operator_matrix",
]
__version__ = "0.1.0"
