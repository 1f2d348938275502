"""Weights, weight multiplicities and graded dimensions of truncated modules."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Dict, List, Tuple

from .partitions import DEFAULT_CAP, CapExceeded, Partition, cell_residue_counts, enumerate_partitions, node_sets


def affine_cartan_matrix(n: int) -> List[List[int]]:
    """Cartan matrix of affine sl_n with nodes ``0..n-1`` arranged in a cycle."""
    if n < 2:
        raise ValueError("n must be >= 2")
    a = [[0] * n for _ in range(n)]
    for j in range(n):
        a[j][j] = 2
        a[j][(j + 1) % n] -= 1
        a[j][(j - 1) % n] -= 1
    return a


@dataclass(frozen=True)
class WeightData:
    m_vector: Tuple[int, ...]
    omega_exponents: Tuple[Tuple[int, int], ...]  # per j: (|I_j|, |R_j|)
    d_exponent: int
    classical_pairing: Tuple[int, ...]

    def to_json_obj(self) -> dict:
        return {
            "mVector": list(self.m_vector),
            "omegaExponents": [list(p) for p in self.omega_exponents],
            "dExponent": self.d_exponent,
            "classicalPairing": list(self.classical_pairing),
        }


def weight(lam: Partition, cfg) -> WeightData:
    m = cell_residue_counts(lam, cfg)
    omega = []
    for j in range(cfg.n):
        indent, removable = node_sets(lam, cfg, j)
        omega.append((len(indent), len(removable)))
    pairing = tuple(a - b for a, b in omega)
    cartan = affine_cartan_matrix(cfg.n)
    expected = tuple(int(j == cfg.offset) - sum(cartan[j][k] * m[k] for k in range(cfg.n))
                     for j in range(cfg.n))
    if pairing != expected:
        raise AssertionError(f"weight bookkeeping broken at {lam}: {pairing} != {expected}")
    return WeightData(m, tuple(omega), -m[0], pairing)


def weight_multiplicities(cfg, cap: int = DEFAULT_CAP) -> Dict[int, Dict[Tuple[int, ...], int]]:
    """For each size ``k <= N``, how many partitions of ``k`` share each residue-count vector."""
    out = {}
    for k, group in enumerate_partitions(cfg.N, cap).items():
        counts = Counter(cell_residue_counts(lam, cfg) for lam in group)
        out[k] = dict(sorted(counts.items(), reverse=True))
    return out


def dimension_series(cfg, cap: int = DEFAULT_CAP) -> List[int]:
    return [len(group) for group in enumerate_partitions(cfg.N, cap).values()]


def euler_product_series(N: int) -> List[int]:
    """Coefficients of ``prod_{k>=1} 1/(1 - q^k)`` up to ``q^N``."""
    coeffs = [1] + [0] * N
    for k in range(1, N + 1):
        # multiply by 1/(1 - q^k) in place
        for d in range(k, N + 1):
            coeffs[d] += coeffs[d - k]
    return coeffs


def multiplicity_rows(cfg, cap: int = DEFAULT_CAP) -> List[dict]:
    return [
        {"size": k, "mVector": list(m), "count": c}
        for k, table in weight_multiplicities(cfg, cap).items()
        for m, c in table.items()
    ]
