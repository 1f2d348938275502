from rsfock.fock import FockConfig
from rsfock.laurent import Laurent1
from rsfock.partitions import Partition, node_sets, partitions_up_to
from rsfock.qfock import LOWER_E, RAISE_F, QFockVector, q_apply

q = Laurent1.monomial


def ket(*parts):
    return QFockVector.basis(parts)


def test_examples():
    cfg = FockConfig(2, 0, 8)
    assert q_apply(RAISE_F, 1, ket(1), cfg) == ket(2) + QFockVector({Partition((1, 1)): q(1)})
    assert q_apply(LOWER_E, 1, ket(2), cfg) == QFockVector({Partition((1,)): q(-1)})
    assert q_apply(RAISE_F, 0, ket(), cfg) == ket(1)


def test_commutator_is_diagonal_quantum_integer():
    # (q - q^-1)[e_i, f_i] = q^h - q^-h with h = |I_i| - |R_i|
    for n in (2, 3, 4):
        for off in range(n):
            cfg = FockConfig(n, off, 7)
            for lam in partitions_up_to(6):
                v = ket(*lam)
                for i in range(n):
                    ef = q_apply(LOWER_E, i, q_apply(RAISE_F, i, v, cfg), cfg)
                    fe = q_apply(RAISE_F, i, q_apply(LOWER_E, i, v, cfg), cfg)
                    ind, rem = node_sets(lam, cfg, i)
                    h = len(ind) - len(rem)
                    lhs = QFockVector({k: (q(1) - q(-1)) * c for k, c in (ef - fe).items()})
                    assert lhs == QFockVector({lam: q(h) - q(-h)})
