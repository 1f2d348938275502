"""Young diagram combinatorics: residues, addable and removable nodes, splits.

Nodes are addressed by 1-based ``(row, col)``.  A cell in row ``k`` and column
``c`` of a diagram with charge ``offset`` has residue ``offset + c - k`` mod n.
All node sequences are returned in increasing column order (which is also
decreasing row order along the boundary).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, NamedTuple, Tuple

DEFAULT_CAP = 40


class InvalidCorner(ValueError):
    pass


class CapExceeded(ValueError):
    pass


class PartitionParseError(ValueError):
    pass


class Node(NamedTuple):
    row: int
    col: int

    def __str__(self) -> str:
        return f"({self.row},{self.col})"


class Partition(tuple):
    """Weakly decreasing tuple of positive parts.  ``Partition()`` is the empty diagram."""

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    def cells(self):
        for row, length in enumerate(self, start=1):
            for col in range(1, length + 1):
                yield Node(row, col)

    def add(self, node: Node) -> "Partition":
        row, col = node
        parts = list(self)
        if row == len(parts) + 1 and col == 1:
            parts.append(1)
        elif row <= len(parts) and parts[row - 1] + 1 == col:
            parts[row - 1] += 1
        else:
            raise InvalidCorner(f"cannot add {node} to {self}")
        return Partition(parts)

    def remove(self, node: Node) -> "Partition":
        row, col = node
        if not (1 <= row <= len(self) and self[row - 1] == col):
            raise InvalidCorner(f"{node} is not a corner of {self}")
        parts = list(self)
        parts[row - 1] -= 1
        return Partition(p for p in parts if p)

    def __str__(self) -> str:
        return ",".join(map(str, self)) if self else "-"

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"

    @classmethod
    def parse(cls, text: str) -> "Partition":
        src = text.strip()
        if src in ("-", "", "()", "∅"):
            return cls()
        try:
            parts = [int(p) for p in src.strip("()[]").split(",") if p.strip()]
        except ValueError:
            raise PartitionParseError(f"invalid partition text {text!r}") from None
        try:
            return cls(parts)
        except ValueError as exc:
            raise PartitionParseError(str(exc)) from None


EMPTY = Partition()


@dataclass(frozen=True)
class ResidueConfig:
    n: int
    offset: int = 0

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"rank n must be >= 2, got {self.n}")
        if not 0 <= self.offset < self.n:
            raise ValueError(f"offset must lie in 0..{self.n - 1}, got {self.offset}")


def residue(node: Node, cfg) -> int:
    return (cfg.offset + node.col - node.row) % cfg.n


@lru_cache(maxsize=None)
def removable_nodes(lam: Partition) -> Tuple[Node, ...]:
    out = []
    for k in range(len(lam), 0, -1):
        below = lam[k] if k < len(lam) else 0
        if lam[k - 1] > below:
            out.append(Node(k, lam[k - 1]))
    return tuple(out)


@lru_cache(maxsize=None)
def addable_nodes(lam: Partition) -> Tuple[Node, ...]:
    out = [Node(len(lam) + 1, 1)]
    for k in range(len(lam), 0, -1):
        if k == 1 or lam[k - 2] > lam[k - 1]:
            out.append(Node(k, lam[k - 1] + 1))
    return tuple(out)


def node_sets(lam: Partition, cfg, i: int) -> Tuple[Tuple[Node, ...], Tuple[Node, ...]]:
    """Indent and removable ``i``-nodes of ``lam``, in column order."""
    return _node_sets(lam, cfg.n, cfg.offset, i % cfg.n)


@lru_cache(maxsize=None)
def _node_sets(lam, n, offset, i):
    def res(node):
        return (offset + node.col - node.row) % n
    return (tuple(g for g in addable_nodes(lam) if res(g) == i),
            tuple(g for g in removable_nodes(lam) if res(g) == i))


class Splits(NamedTuple):
    iL: int
    iR: int
    rL: int
    rR: int


def split_counts(lam: Partition, gamma: Node, cfg, i: int) -> Splits:
    """Count ``i``-nodes of ``lam`` on either side of the corner ``gamma``.

    ``gamma`` itself is excluded from both sides.  "Left" means strictly smaller
    column, unless ``cfg.orientation`` is ``flip``.
    """
    if gamma not in addable_nodes(lam) and gamma not in removable_nodes(lam):
        raise InvalidCorner(f"{gamma} is neither addable nor removable for {lam}")
    indent, removable = node_sets(lam, cfg, i)
    c = gamma.col
    iL = sum(1 for g in indent if g.col < c)
    iR = sum(1 for g in indent if g.col > c)
    rL = sum(1 for g in removable if g.col < c)
    rR = sum(1 for g in removable if g.col > c)
    if _flipped(cfg):
        return Splits(iR, iL, rR, rL)
    return Splits(iL, iR, rL, rR)


def _flipped(cfg) -> bool:
    orientation = getattr(cfg, "orientation", "standard")
    return getattr(orientation, "value", orientation) == "flip"


def cell_residue_counts(lam: Partition, cfg) -> Tuple[int, ...]:
    m = [0] * cfg.n
    for node in lam.cells():
        m[residue(node, cfg)] += 1
    return tuple(m)


def _partitions_of(k: int, largest: int):
    if k == 0:
        yield ()
        return
    for first in range(min(k, largest), 0, -1):
        for rest in _partitions_of(k - first, first):
            yield (first,) + rest


def enumerate_partitions(N: int, cap: int = DEFAULT_CAP) -> Dict[int, List[Partition]]:
    """All partitions of each size ``0..N``, lexicographically descending within a size."""
    if N < 0:
        raise ValueError("N must be non-negative")
    if N > cap:
        raise CapExceeded(f"N={N} exceeds the enumeration cap {cap}")
    return {k: [Partition(p) for p in _partitions_of(k, k)] for k in range(N + 1)}


def partitions_up_to(N: int, cap: int = DEFAULT_CAP) -> List[Partition]:
    """Flat basis order: by size, then lexicographically descending."""
    if N > cap:
        raise CapExceeded(f"N={N} exceeds the enumeration cap {cap}")
    return list(_flat_basis(N))


@lru_cache(maxsize=64)
def _flat_basis(N: int) -> Tuple[Partition, ...]:
    groups = enumerate_partitions(N, cap=max(N, DEFAULT_CAP))
    return tuple(lam for k in range(N + 1) for lam in groups[k])
