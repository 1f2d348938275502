import json

import pytest
from hypothesis import given, settings, strategies as st

from rsfock.chars import affine_cartan_matrix
from rsfock.fock import (
    EmptyWord, FockConfig, FockVector, Generator, OperatorMatrix, TruncationOverflow, Word,
    WordParseError, apply_diagonal, apply_e, apply_f, apply_word, eigenvalue, operator_matrix,
)
from rsfock.laurent import Laurent2, ONE, R, S
from rsfock.partitions import Partition, cell_residue_counts, node_sets, partitions_up_to

from conftest import laurent2, partitions

C2 = FockConfig(2, 0, 8)
C3 = FockConfig(3, 0, 8)


def ket(*parts):
    return FockVector.basis(Partition(parts))


def test_apply_f_examples():
    assert apply_f(0, ket(), C2) == ket(1)
    assert apply_f(1, ket(1), C2) == ket(2) + ket(1, 1).scale(R)
    assert str(apply_f(1, ket(1), C2)) == "|2> + r*|1,1>"
    assert apply_f(2, ket(1), C3) == ket(1, 1)


def test_apply_f_overflow():
    with pytest.raises(TruncationOverflow):
        apply_f(0, ket(1, 1), FockConfig(2, 0, 2))


def test_apply_e_examples():
    for j in range(3):
        assert apply_e(j, ket(), C3).is_zero()
    assert apply_e(1, ket(2), C2) == ket(1).scale(S)
    assert apply_e(1, ket(1, 1), C2) == ket(1)


def test_diagonal_examples():
    assert apply_diagonal(Generator("w", 1), ket(1), C2) == ket(1).scale(R ** 2)
    assert apply_diagonal(Generator("w", 0), ket(1), C2) == ket(1).scale(S)
    assert apply_diagonal(Generator("D"), ket(2, 1), C2) == ket(2, 1).scale(R ** -1)
    assert apply_diagonal(Generator("D"), ket(), C2) == ket()


def test_literal_d_on_empty_differs():
    lit = FockConfig(2, 0, 8, d_convention="literal")
    assert eigenvalue(Generator("D"), Partition(), lit) == R ** -1


def test_word_examples():
    assert apply_word("e1 f1", ket(1), C2)[Partition((1,))] == R + S
    assert apply_word("w1 f1", ket(), C2).is_zero()
    assert apply_word("w1 w1^-1", ket(2, 1), C2) == ket(2, 1)
    with pytest.raises(EmptyWord):
        apply_word(Word(()), ket(), C2)
    with pytest.raises(WordParseError):
        Word.parse("f1 x2")


def test_word_order_is_right_to_left():
    # f1 then f0 on |1> (n=2) versus f0 then f1
    a = apply_word("f0 f1", ket(1), C2)
    b = apply_f(0, apply_f(1, ket(1), C2), C2)
    assert a == b


def test_matrix_examples():
    m = operator_matrix("e1", FockConfig(2, 0, 2))
    assert dict(m.entries) == {(Partition((1,)), Partition((2,))): S,
                               (Partition((1,)), Partition((1, 1))): ONE}
    f0 = operator_matrix("f0", FockConfig(2, 0, 1))
    assert dict(f0.entries) == {(Partition((1,)), Partition()): ONE}
    for sym in ("w0", "w'1", "D", "D'", "g", "g'"):
        d = operator_matrix(sym, FockConfig(3, 1, 5))
        assert all(row == col for row, col in d.entries)


def test_matrix_json_round_trip_matches_apply():
    cfg = FockConfig(3, 0, 6)
    m = operator_matrix("e0 f1 f0", cfg)
    back = OperatorMatrix.from_json_obj(json.loads(m.to_json()), cfg)
    for lam in back.domain:
        assert back.apply(FockVector.basis(lam)) == apply_word("e0 f1 f0", FockVector.basis(lam), cfg)


def test_vector_json_round_trip():
    v = ket(2, 1).scale(R - S ** 3) + ket(1).scale(7)
    assert FockVector.from_json_obj(json.loads(json.dumps(v.to_json_obj()))) == v


@st.composite
def vectors(draw, max_size=5):
    lams = draw(st.lists(partitions(max_size), max_size=4))
    return FockVector({lam: draw(laurent2(max_terms=3)) for lam in lams})


@settings(max_examples=60)
@given(vectors(), vectors(), laurent2(max_terms=3), st.sampled_from(["f0", "e1", "f2 e0", "w1", "D'"]))
def test_linearity(u, v, c, word):
    cfg = FockConfig(3, 0, 8)
    lhs = apply_word(word, u + v.scale(c), cfg)
    assert lhs == apply_word(word, u, cfg) + apply_word(word, v, cfg).scale(c)


@given(partitions(7), st.integers(0, 3))
def test_grading(lam, i):
    cfg = FockConfig(4, 1, 8)
    m = cell_residue_counts(lam, cfg)
    for mu, _ in apply_f(i, FockVector.basis(lam), cfg).items():
        assert mu.size == lam.size + 1
        assert cell_residue_counts(mu, cfg)[i] == m[i] + 1
    for mu, _ in apply_e(i, FockVector.basis(lam), cfg).items():
        assert mu.size == lam.size - 1
        assert cell_residue_counts(mu, cfg)[i] == m[i] - 1


@given(partitions(12), st.integers(2, 5))
def test_omega_prime_is_swapped_omega(lam, n):
    cfg = FockConfig(n, 0, 12)
    for i in range(n):
        w = eigenvalue(Generator("w", i), lam, cfg)
        assert eigenvalue(Generator("w'", i), lam, cfg) == w.swap_rs()
    assert eigenvalue(Generator("D'"), lam, cfg) == eigenvalue(Generator("D"), lam, cfg).swap_rs()


def test_classical_weight_brute_force():
    for n in (2, 3, 4, 5):
        a = affine_cartan_matrix(n)
        for off in range(n):
            cfg = FockConfig(n, off, 12)
            for lam in partitions_up_to(12):
                m = cell_residue_counts(lam, cfg)
                for j in range(n):
                    ind, rem = node_sets(lam, cfg, j)
                    assert len(ind) - len(rem) == int(j == off) - sum(a[j][k] * m[k] for k in range(n))
