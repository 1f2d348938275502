from fractions import Fraction

import pytest

from rsfock import relcheck
from rsfock.chars import affine_cartan_matrix
from rsfock.fock import FockConfig, FockVector, apply_word
from rsfock.laurent import Laurent2, R, S
from rsfock.partitions import Partition
from rsfock.relcheck import RelationID, Status


def by_relation(reports):
    return {(r.relation.tag, r.relation.indices, r.relation.form): r for r in reports}


def test_commutator_example():
    cfg = FockConfig(2, 0, 4)
    v = FockVector.basis(Partition((1,)))
    lhs = (apply_word("e1 f1", v, cfg) - apply_word("f1 e1", v, cfg)).scale(R - S)
    assert lhs == apply_word("w1", v, cfg) - apply_word("w'1", v, cfg)
    assert lhs == v.scale(R ** 2 - S ** 2)


def test_diagonal_commutators_pass():
    for n in (2, 3, 4):
        for rep in relcheck.check_A4(FockConfig(n, 0, 7)):
            if rep.relation.tag == "A4-diag":
                assert rep.status is Status.PASS, rep.line()


def test_adjacent_commutator_witness():
    # [e_1, f_2]|2> = (rs - 1)|1,1> for n=3: the off-diagonal commutator fails
    cfg = FockConfig(3, 0, 4)
    v = FockVector.basis(Partition((2,)))
    res = apply_word("e1 f2", v, cfg) - apply_word("f2 e1", v, cfg)
    assert res == FockVector.basis(Partition((1, 1))).scale(R * S - 1)


def test_commuting_pass_far_apart():
    for n in (4, 5):
        reps = relcheck.check_commuting(FockConfig(n, 0, 8))
        assert reps and all(r.status is Status.PASS for r in reps)


def test_commuting_skipped_without_distant_pairs():
    reps = relcheck.check_commuting(FockConfig(3, 0, 5))
    assert all(r.status is Status.SKIPPED for r in reps)


def test_serre_residuals_vanish_at_specialization():
    cfg = FockConfig(3, 0, 6)
    checks = [c for c in relcheck.relation_checks(cfg, ["A6", "A7"])]
    assert checks
    for check in checks:
        for lam in cfg.basis():
            if lam.size + check.f_degree > cfg.N:
                continue
            for _, c in relcheck.residual_at(check, lam).items():
                assert not c.specialize_q()
                assert c.evaluate(Fraction(3), Fraction(1, 3)) == 0


def test_highest_weight_and_specialization_pass():
    for n in (2, 3, 4):
        for off in range(n):
            cfg = FockConfig(n, off, 6)
            checks = relcheck.highest_weight_checks(cfg)
            assert all(relcheck.evaluate(c).status is Status.PASS for c in checks)
            assert all(r.status is Status.PASS for r in relcheck.check_specialization(cfg))


def test_guard_margin():
    cfg = FockConfig(3, 0, 6)
    for check in relcheck.relation_checks(cfg):
        rep = relcheck.evaluate(check)
        if rep.status is not Status.SKIPPED and check.relation.tag != "highest-weight":
            assert rep.max_size_checked + check.f_degree <= cfg.N
            assert rep.max_size_checked == cfg.N - check.f_degree


def test_witnesses_reproduce():
    cfg = FockConfig(3, 1, 6)
    checks = relcheck.relation_checks(cfg)
    reports = [relcheck.evaluate(c) for c in checks]
    failing = [(c, r) for c, r in zip(checks, reports) if r.status is Status.FAIL]
    assert failing
    for check, rep in failing:
        again = relcheck.residual_at(check, rep.witness.partition)
        assert again and again == rep.witness.residual


def test_determinism_same_config():
    cfgs = [FockConfig(3, o, 5) for o in range(3)]
    a = relcheck.run_all(cfgs).to_json()
    b = relcheck.run_all(cfgs, jobs=2).to_json()
    assert a == b


def test_empty_config_list():
    res = relcheck.run_all([])
    assert res.reports == [] and res.passed and res.exit_code == 0


def test_literal_convention_breaks_exactly_the_d_checks_beyond_cellcount():
    def failing(conv):
        cfgs = [FockConfig(n, o, 6, d_convention=conv) for n in (2, 3, 4) for o in range(n)]
        return {(r.relation.tag, r.relation.indices, r.relation.form, r.config.n, r.config.offset)
                for r in relcheck.run_all(cfgs).failing()}
    extra = failing("literal") - failing("cellcount")
    assert extra
    assert {key[0] for key in extra} == {"A2-D", "A3-D'"}
    assert failing("cellcount") <= failing("literal")


def test_pairing_examples():
    cfg = FockConfig(3, 0, 7)
    obs = relcheck.observe_pairing(cfg)
    for i in range(3):
        assert set(obs[i, i]) == {(1, -1)}
    # witness transitions named in the design notes
    assert (0, 1) in obs[1, 0]
    assert (0, 1) in obs[0, 1]
    printed = relcheck.printed_pairing(3)
    assert printed.monomial(0, 1) == R ** -1
    assert printed.monomial(1, 0) == S
    diffs = {(d.i, d.j): d for d in relcheck.pairing_diffs(cfg, obs)}
    assert (0, 1) in diffs and diffs[0, 1].agrees_specialized


def test_infer_pairing_reports_inconsistency():
    with pytest.raises(relcheck.InconsistentRatio) as info:
        relcheck.infer_pairing(FockConfig(3, 0, 7))
    assert info.value.observations[0, 1]
    with pytest.raises(ValueError):
        relcheck.infer_pairing(FockConfig(3, 0, 4))


def test_printed_pairing_specializes_to_symmetrized_cartan_entries():
    for n in (3, 4, 5):
        a = affine_cartan_matrix(n)
        t = relcheck.printed_pairing(n)
        for i in range(n):
            for j in range(n):
                assert t.specialized_exponent(i, j) == a[i][j]
                assert t.specialized_exponent(i, j) + t.specialized_exponent(j, i) == 2 * a[i][j]


def test_observed_ratios_specialize_to_cartan_entries():
    # every observed two-parameter ratio collapses to q^{a_ij}; only the split between r and s varies
    for n in (3, 4, 5):
        a = affine_cartan_matrix(n)
        for (i, j), seen in relcheck.observe_pairing(FockConfig(n, 0, n + 4)).items():
            assert {x - y for x, y in seen} == {a[i][j]}


def test_claims_report_shape():
    reps = relcheck.check_claims(6, (3,))
    got = {r.relation.form: r.status for r in reps}
    assert got["removal-shift"] is Status.PASS
    assert got["split-sums"] is Status.PASS
    assert got["swap-differences"] is Status.PASS
    assert got["adjacent-shifts"] is Status.FAIL
    assert got["neighbour-shift-constancy"] is Status.FAIL


def test_failing_report_requires_witness():
    with pytest.raises(ValueError):
        relcheck.CheckReport(RelationID("A5", (0, 2), "e"), FockConfig(4), Status.FAIL)
