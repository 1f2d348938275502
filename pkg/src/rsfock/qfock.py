"""One-parameter q-Fock action, used only as an independent oracle.

The coefficients are assembled here from scratch (node lists in, exponents
out) so that a slip in :mod:`rsfock.fock` cannot silently reproduce itself
in the comparison.
"""
from __future__ import annotations

from typing import Dict, Mapping, Tuple

from .laurent import Laurent1
from .partitions import Partition, addable_nodes, partitions_up_to, removable_nodes, residue
from .fock import TruncationOverflow

RAISE_F = "raise_f"
LOWER_E = "lower_e"


class QFockVector:
    __slots__ = ("_entries",)

    def __init__(self, entries: Mapping[Partition, Laurent1] | None = None):
        self._entries: Dict[Partition, Laurent1] = {
            Partition(k): c for k, c in (entries or {}).items() if c
        }

    @classmethod
    def basis(cls, lam=()) -> "QFockVector":
        return cls({Partition(lam): Laurent1.monomial(0)})

    def items(self):
        return self._entries.items()

    def __getitem__(self, lam) -> Laurent1:
        return self._entries.get(Partition(lam), Laurent1())

    def __eq__(self, other) -> bool:
        if not isinstance(other, QFockVector):
            return NotImplemented
        return self._entries == other._entries

    def __add__(self, other: "QFockVector") -> "QFockVector":
        out = dict(self._entries)
        for k, c in other._entries.items():
            out[k] = out[k] + c if k in out else c
        return QFockVector(out)

    def __sub__(self, other: "QFockVector") -> "QFockVector":
        return self + QFockVector({k: -c for k, c in other._entries.items()})

    def __bool__(self) -> bool:
        return bool(self._entries)

    def _keys(self):
        return sorted(self._entries, key=lambda l: (l.size, tuple(-p for p in l)))

    def __str__(self) -> str:
        if not self._entries:
            return "0"
        return " + ".join(f"({self._entries[k]})*|{k}>" for k in self._keys())

    def to_json_obj(self) -> list:
        return [{"partition": list(k), "coeff": str(self._entries[k])} for k in self._keys()]


def _i_nodes(nodes, i, cfg):
    return [g for g in nodes if residue(g, cfg) == i]


def _right_of(g, h, cfg) -> bool:
    flip = getattr(getattr(cfg, "orientation", "standard"), "value", "standard") == "flip"
    return h.col < g.col if flip else h.col > g.col


def q_apply(direction: str, i: int, v: QFockVector, cfg) -> QFockVector:
    """Apply ``f_i`` (``raise_f``) or ``e_i`` (``lower_e``) of the q-Fock space."""
    out: Dict[Partition, Laurent1] = {}
    for lam, c in v.items():
        if direction == RAISE_F:
            if sum(lam) >= cfg.N:
                raise TruncationOverflow(f"f{i} on |{lam}> exceeds N={cfg.N}")
            add = _i_nodes(addable_nodes(lam), i, cfg)
            rem = _i_nodes(removable_nodes(lam), i, cfg)
            for g in add:
                k = sum(_right_of(g, h, cfg) for h in add if h != g) \
                    - sum(_right_of(g, h, cfg) for h in rem)
                target = lam.add(g)
                out[target] = out.get(target, Laurent1()) + c * Laurent1.monomial(k)
        elif direction == LOWER_E:
            for g in _i_nodes(removable_nodes(lam), i, cfg):
                mu = lam.remove(g)
                add = _i_nodes(addable_nodes(mu), i, cfg)
                rem = _i_nodes(removable_nodes(mu), i, cfg)
                # left of g: neither g itself nor anything right of it
                k = sum(1 for h in rem if h != g and not _right_of(g, h, cfg)) \
                    - sum(1 for h in add if h != g and not _right_of(g, h, cfg))
                out[mu] = out.get(mu, Laurent1()) + c * Laurent1.monomial(k)
        else:
            raise ValueError(f"unknown direction {direction!r}")
    return QFockVector(out)


def q_operator_matrix(direction: str, i: int, cfg) -> Dict[Tuple[Partition, Partition], Laurent1]:
    """``{(row, col): coeff}`` over all columns whose image stays in the module."""
    entries = {}
    room = 1 if direction == RAISE_F else 0
    for lam in partitions_up_to(cfg.N):
        if sum(lam) + room > cfg.N:
            continue
        for mu, c in q_apply(direction, i, QFockVector.basis(lam), cfg).items():
            entries[mu, lam] = c
    return entries
