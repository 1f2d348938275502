"""Counting identities for indent/removable nodes and their splits.

Each identity is a generator of :class:`Instance` records, one per
(partition, residue, corner choice) in its domain; an identity holds on a
range of partitions when every instance has ``lhs == rhs``.

Pair notation follows the two-diagram convention ``X(small, big)``: the
distinguished corner is the single cell of ``big / small``.  Node counts other
than the corner itself agree in both diagrams, so every split below is taken in
whichever diagram has the corner as an addable node.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, Iterable, Iterator, List, Tuple

from .partitions import Node, Partition, node_sets, split_counts


@dataclass(frozen=True)
class Instance:
    identity: str
    lam: Partition
    i: int
    corners: Tuple[Node, ...]
    lhs: object
    rhs: object
    label: str = ""

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs

    def describe(self) -> str:
        corners = " ".join(str(g) for g in self.corners)
        tag = f" {self.label}" if self.label else ""
        return (f"{self.identity}{tag}: lam={self.lam} i={self.i} corners=[{corners}] "
                f"lhs={self.lhs} rhs={self.rhs}")


def _counts(lam, cfg, i):
    indent, removable = node_sets(lam, cfg, i)
    return len(indent), len(removable)


def removal_shift(lam: Partition, cfg) -> Iterator[Instance]:
    """Removing a removable ``i``-node adds one indent ``i``-node and loses one removable one."""
    for i in range(cfg.n):
        n_ind, n_rem = _counts(lam, cfg, i)
        for g in node_sets(lam, cfg, i)[1]:
            a, b = _counts(lam.remove(g), cfg, i)
            yield Instance("removal-shift", lam, i, (g,), a, n_ind + 1, "indent")
            yield Instance("removal-shift", lam, i, (g,), b, n_rem - 1, "removable")


def split_sums(lam: Partition, cfg) -> Iterator[Instance]:
    """Each same-residue node set splits as left + right + the corner itself."""
    for i in range(cfg.n):
        indent, removable = node_sets(lam, cfg, i)
        for g in indent:
            sp = split_counts(lam, g, cfg, i)
            yield Instance("split-sums", lam, i, (g,), len(indent), sp.iR + sp.iL + 1, "indent at addable")
            big = lam.add(g)
            yield Instance("split-sums", lam, i, (g,), len(node_sets(big, cfg, i)[1]),
                           sp.rR + sp.rL + 1, "removable after adding")
        for g in removable:
            small = lam.remove(g)
            sp = split_counts(small, g, cfg, i)
            yield Instance("split-sums", lam, i, (g,), len(node_sets(small, cfg, i)[0]),
                           sp.iR + sp.iL + 1, "indent after removing")
            yield Instance("split-sums", lam, i, (g,), len(removable), sp.rR + sp.rL + 1,
                           "removable at removable")


def swap_differences(lam: Partition, cfg) -> Iterator[Instance]:
    """Trade-off between an addable corner ``g`` and a removable corner ``h`` of one residue.

    Compares the splits of ``(lam, lam+g)`` with ``(lam-h, lam-h+g)`` and of
    ``(lam-h, lam)`` with ``(lam+g-h, lam+g)``.
    """
    for i in range(cfg.n):
        indent, removable = node_sets(lam, cfg, i)
        for g in indent:
            big = lam.add(g)
            at_g = split_counts(lam, g, cfg, i)
            for h in removable:
                small = lam.remove(h)
                at_g_small = split_counts(small, g, cfg, i)
                at_h = split_counts(small, h, cfg, i)
                at_h_big = split_counts(big.remove(h), h, cfg, i)
                yield Instance("swap-differences", lam, i, (g, h),
                               at_g.iR - at_g_small.iR, at_h.rL - at_h_big.rL, "indent-right")
                yield Instance("swap-differences", lam, i, (g, h),
                               at_h.iL - at_h_big.iL, at_g.rR - at_g_small.rR, "indent-left")


def adjacent_shifts(lam: Partition, cfg) -> Iterator[Instance]:
    """Splits of an ``(i+1)``-corner after adding one or the other of two ``i``-nodes.

    Domain: ``g1`` addable to ``lam``, ``g2`` addable to ``lam+g1`` (both
    residue ``i``), ``g3`` an addable ``(i+1)``-node of ``lam+g1+g2`` that is
    also addable to ``lam+g1`` and to ``lam+g2`` so both sides are defined.
    Asserted: the right indent count rises by one and the right removable count
    drops by one when ``g2`` replaces ``g1``.
    """
    for i in range(cfg.n):
        j = (i + 1) % cfg.n
        for g1 in node_sets(lam, cfg, i)[0]:
            l1 = lam.add(g1)
            for g2 in node_sets(l1, cfg, i)[0]:
                l2 = lam.add(g2)
                for g3 in node_sets(l1.add(g2), cfg, j)[0]:
                    if g3 not in node_sets(l1, cfg, j)[0] or g3 not in node_sets(l2, cfg, j)[0]:
                        continue
                    via2 = split_counts(l2, g3, cfg, j)
                    via1 = split_counts(l1, g3, cfg, j)
                    yield Instance("adjacent-shifts", lam, i, (g1, g2, g3), via2.iR, via1.iR + 1, "indent-right")
                    yield Instance("adjacent-shifts", lam, i, (g1, g2, g3), via2.rR, via1.rR - 1, "removable-right")


IDENTITIES: Dict[str, Callable[[Partition, object], Iterable[Instance]]] = {
    "removal-shift": removal_shift,
    "split-sums": split_sums,
    "swap-differences": swap_differences,
    "adjacent-shifts": adjacent_shifts,
}


def neighbour_shifts(partitions: Iterable[Partition], cfg) -> Dict[Tuple[int, int], Dict[Tuple[int, int], Tuple[Partition, Node]]]:
    """For each ``(i, j)`` with ``j != i``: every observed ``(dI_j, dR_j)`` under removing an ``i``-node.

    Values map to the first ``(lam, node)`` producing them, in input order.  The
    shift would be a function of ``(i, j, n)`` alone if each table had one key.
    """
    table: Dict[Tuple[int, int], Dict[Tuple[int, int], Tuple[Partition, Node]]] = {}
    for lam in partitions:
        for i in range(cfg.n):
            for g in node_sets(lam, cfg, i)[1]:
                small = lam.remove(g)
                for j in range(cfg.n):
                    if j == i:
                        continue
                    a0, b0 = _counts(lam, cfg, j)
                    a1, b1 = _counts(small, cfg, j)
                    table.setdefault((i, j), {}).setdefault((a1 - a0, b1 - b0), (lam, g))
    return {k: table[k] for k in sorted(table)}


def instances(name: str, partitions: Iterable[Partition], cfg) -> List[Instance]:
    fn = IDENTITIES[name]
    return [inst for lam in partitions for inst in fn(lam, cfg)]
